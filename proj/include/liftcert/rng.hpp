#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liftcert/errors.hpp"

namespace liftcert {

// Deterministic randomness for sampled scans and generators.
//
// Engine: std::mt19937_64 seeded directly with the given value. Its output
// sequence is fixed by the C++ standard, so runs replay bit-exactly across
// platforms. The integer/real mappings below are ours because the standard
// library's distributions are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::below: n must be positive");
    std::uint64_t bound = (UINT64_MAX / n) * n;
    std::uint64_t x;
    do {
      x = u64();
    } while (x >= bound);
    return x % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  // Fisher-Yates permutation of {0..k-1}.
  std::vector<int> permutation(int k) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    for (int i = k - 1; i > 0; --i) {
      int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace liftcert
