#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace gridse {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Input data violates a documented precondition (maps to CLI exit code 2).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An algorithm failed numerically: divergence, singularity, non-convergence
/// (maps to CLI exit code 3).
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable file.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gridse
