#pragma once

// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.

#include "nonschur/partition.hpp"
#include "nonschur/quiver.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  nonschur::DimVec vec(std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = range(lo, hi);
    return nonschur::DimVec(v);
  }

  nonschur::DimVec nonzero_vec(std::size_t n, std::int64_t hi) {
    for (;;) {
      auto v = vec(n, 0, hi);
      if (!v.is_zero()) return v;
    }
  }

  nonschur::QuiverThree quiver_three(int max_arrows) {
    for (;;) {
      const int a = static_cast<int>(range(0, max_arrows));
      const int b = static_cast<int>(range(0, max_arrows));
      const int c = static_cast<int>(range(0, max_arrows));
      if ((a || b) && (a || c) && (b || c)) return nonschur::QuiverThree(a, b, c);
    }
  }

  // Random parts, sorted; may be empty.
  nonschur::Partition partition(int max_len, int max_part) {
    std::vector<int> parts(range(0, max_len));
    for (auto& x : parts) x = static_cast<int>(range(1, max_part));
    return nonschur::Partition::from_unsorted(parts);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
