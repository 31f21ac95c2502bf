#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gridse {

// All randomness in the library flows from one base seed through named
// sub-streams, so that individual components (data, init, dropout, bad data)
// can be varied independently and scenario generation stays independent of
// the worker count (one stream per row).

std::uint64_t mix64(std::uint64_t x);
std::uint64_t substream(std::uint64_t base, std::string_view name);
std::uint64_t substream(std::uint64_t base, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix64(seed + 0x9e3779b97f4a7c15ull)) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double normal();   // standard normal
  double normal(double mean, double stddev);
  double laplace(double location, double scale);
  int uniform_int(int lo, int hi);  // inclusive bounds
  std::uint64_t next_u64();

 private:
  std::mt19937_64 eng_;
};

}  // namespace gridse
