#pragma once

#include "nonschur/quiver.hpp"

#include <cstdint>
#include <vector>

namespace nonschur {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

struct SamplingOptions {
  int trials = 8;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
};

// Dense matrix over F_p, row-major.
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// One matrix per individual arrow; bundles are expanded in order.
// The matrix of an arrow s->t has dim[t] rows and dim[s] columns.
struct FpRepresentation {
  Quiver quiver;
  DimVec dim;
  std::uint64_t prime = kDefaultPrime;
  std::vector<FpMatrix> maps;
};

bool is_prime_u64(std::uint64_t n);

// Destroys its argument.
std::size_t rank_mod_p(FpMatrix m, std::uint64_t prime);

FpRepresentation sample_representation(const Quiver& q, const DimVec& dim, std::uint64_t prime,
                                       std::uint64_t seed);

std::int64_t hom_dim(const FpRepresentation& m, const FpRepresentation& n);

// Minimum of hom_dim over `trials` sampled pairs; per-trial seeds depend only
// on (seed, a, b, trial).
std::int64_t generic_hom(const Quiver& q, const DimVec& a, const DimVec& b,
                         const SamplingOptions& opts = {});
std::int64_t generic_ext(const Quiver& q, const DimVec& a, const DimVec& b,
                         const SamplingOptions& opts = {});

}  // namespace nonschur
