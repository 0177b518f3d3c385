#pragma once

#include "nonschur/chow.hpp"
#include "nonschur/fp_rep.hpp"
#include "nonschur/quiver.hpp"
#include "nonschur/symfunc.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nonschur {

// α = α₁^{d₁} + α₂^{d₂} + α₃^{d₃}.
struct ExcDecomposition {
  QuiverThree quiver;
  DimVec alpha1, alpha2, alpha3;
  std::int64_t d1 = 0, d2 = 0, d3 = 0;

  DimVec alpha_hat() const;  // d₂α₂ + d₃α₃
  DimVec alpha() const;
};

struct Parameters {
  std::int64_t l = 0, m = 0, n = 0;
  std::int64_t r = 0, s = 0, t = 0, w = 0;
  std::int64_t d1 = 0, d2 = 0, d3 = 0;
  std::int64_t euler_hat_alpha1 = 0;  // ⟨α̂,α₁⟩
  std::int64_t euler_alpha_alpha = 0;
  DimVec alpha, alpha_hat, delta;

  std::int64_t p() const { return l * r - t; }  // = d₁
  std::int64_t k() const { return s - t; }
};

// Euler-form arithmetic only. Throws InternalError if the two formulas for t disagree.
Parameters derive_parameters(const ExcDecomposition& dec);

// Checks every structural condition (sampling generic hom/ext where needed)
// and throws ValidationError listing all failures.
Parameters validate_decomposition(const ExcDecomposition& dec, const SamplingOptions& opts = {});

enum class SpecialCaseKind { TypeOne, Fall0, Fall1, Fall2, Fall3 };
std::string to_string(SpecialCaseKind k);

struct SpecialCase {
  SpecialCaseKind kind = SpecialCaseKind::TypeOne;
  std::optional<std::int64_t> fall0_bound;
};

SpecialCase special_case(const Parameters& p);

struct Dimensions {
  std::int64_t dim_x1 = 0, dim_x2 = 0, dim_gr = 0;
  std::int64_t expected_intersection = 0;
  std::int64_t kac_parameter_count = 0;
};

Dimensions expected_dimensions(const Parameters& p);

// Pushforward of the class of the zero locus, as a Schur expression in r variables.
// `early_truncation` drops e_μ with μ₁ > r before taking the power.
SymExpr pushforward_class(const Parameters& p, bool early_truncation = true);

GrassBox intersection_box(const Parameters& p);

struct IntersectionResult {
  SchubertClass cls;
  Integer gcd;  // upper bound for the multiplicity N
};

IntersectionResult intersection_class(const Parameters& p, const SymExpr& pushforward);
IntersectionResult intersection_class(const Parameters& p);

struct Witness {
  Partition mu;
  Partition lambda_conj;  // λ'
  Partition lambda;
  Integer coefficient;    // d_λ in the pushforward class
  bool dominance = false;
  bool fits_box = false;
  bool certified = false;
};

Witness witness_certificate(const Parameters& p, const SymExpr& pushforward);
Witness witness_certificate(const Parameters& p);

struct AnalysisReport {
  ExcDecomposition decomposition;
  SamplingOptions sampling;
  Parameters parameters;
  SpecialCase special_case;
  Dimensions dims;
  std::optional<SymExpr> pushforward;
  std::optional<IntersectionResult> intersection;
  std::optional<Witness> witness;
  std::vector<std::string> warnings;
};

// `expected` holds reference values for parameter names (l, m, n, r, s, t, w);
// any disagreement with the derived value becomes a warning.
AnalysisReport analyze(const ExcDecomposition& dec, const SamplingOptions& opts = {},
                       const std::map<std::string, std::int64_t>& expected = {});

}  // namespace nonschur
