#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sds {

// Raised when a computation would exceed a configured resource cap
// (state-space size, enumeration edge count, automorphism vertex count).
// Callers that expose caps as flags catch this separately from bad input.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw std::overflow_error("checked_pow: overflow computing " + std::to_string(base) +
                                "^" + std::to_string(exp));
    r *= base;
  }
  return r;
}

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace sds
