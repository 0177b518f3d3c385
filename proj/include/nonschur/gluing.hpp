#pragma once

#include "nonschur/fp_rep.hpp"
#include "nonschur/pipeline.hpp"
#include "nonschur/quiver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nonschur {

// ((d_s,e_s),(d,e)) in K(n); vectors are (source, sink).
struct KroneckerPair {
  int n = 0;
  DimVec first;
  DimVec second;
};

bool check_conditions(const KroneckerPair& pair);

// target = scale * (base.first + k * base.second), where base satisfies check_conditions.
struct KroneckerDecomposition {
  KroneckerPair base;
  std::int64_t k = 0;
  std::int64_t scale = 1;

  DimVec first() const { return scale * base.first; }
  DimVec second() const { return scale * base.second; }
};

KroneckerDecomposition kronecker_decompose(int n, const DimVec& target);

bool check_hom_orthogonal(int n, const DimVec& a, const DimVec& b, const SamplingOptions& opts = {});

// β = α₁^{c_s} + β̂ and γ = α₁^{c} + γ̂, with β̂, γ̂ given in Kronecker
// coordinates (α₃-multiplicity, α₂-multiplicity).
struct Split {
  ExcDecomposition dec;
  std::int64_t c_s = 0;
  std::int64_t c = 0;
  DimVec beta_kron;
  DimVec gamma_kron;

  DimVec beta_hat() const;
  DimVec gamma_hat() const;
  DimVec beta() const;
  DimVec gamma() const;
};

struct GluingReport {
  DimVec beta, gamma;
  std::int64_t n_beta = 0;   // ⟨β̂,α₁⟩
  std::int64_t n_gamma = 0;  // ⟨γ̂,α₁⟩
  std::int64_t euler_beta_gamma = 0, euler_gamma_beta = 0;
  std::int64_t ker_beta_gamma = 0, ker_gamma_beta = 0;
  std::int64_t parameter_total = 0;
  std::int64_t kac_parameter_count = 0;
  bool beta_type_one = false, gamma_type_one = false;
  int trials = 0;
};

GluingReport gluing_report(const Split& split, const SamplingOptions& opts = {});

// Splits along the Kronecker decomposition of (d₃,d₂) that pass gluing_report.
// Best effort: an empty result proves nothing.
std::vector<Split> enumerate_splits(const ExcDecomposition& dec, const SamplingOptions& opts = {});

}  // namespace nonschur
