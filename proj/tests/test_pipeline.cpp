#include "doctest.h"

#include "corpus.hpp"
#include "gen.hpp"

#include "nonschur/errors.hpp"
#include "nonschur/pipeline.hpp"

#include <algorithm>

using namespace nonschur;

namespace {

void check_params(const Parameters& p, std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t s,
                  std::int64_t t, std::int64_t w) {
  CHECK(p.l == l);
  CHECK(p.m == m);
  CHECK(p.n == n);
  CHECK(p.r == r);
  CHECK(p.s == s);
  CHECK(p.t == t);
  CHECK(p.w == w);
}

bool has_failure(const ValidationError& e, const std::string& needle) {
  return std::any_of(e.failures().begin(), e.failures().end(),
                     [&](const std::string& f) { return f.find(needle) != std::string::npos; });
}

const std::vector<corpus::Entry>& corpus_entries() {
  static const auto entries = [] {
    auto v = corpus::generated_type_one(80);
    for (auto& e : corpus::reference_inputs()) {
      const Parameters p = derive_parameters(e.dec);
      if (special_case(p).kind == SpecialCaseKind::TypeOne) v.push_back(e);
    }
    return v;
  }();
  return entries;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("reference parameters") {
    check_params(validate_decomposition(corpus::q212_root131()), 2, 2, 5, 4, 8, 7, 5);
    check_params(validate_decomposition(corpus::q211_root252()), 2, 1, 3, 4, 10, 7, 6);
    check_params(validate_decomposition(corpus::q212_root1_14_8()), 2, 11, 8, 2, 5, 1, 8);
    CHECK(corpus::q212_root1_14_8().alpha() == DimVec{1, 14, 8});
    CHECK(corpus::q211_root252().alpha() == DimVec{2, 5, 2});
    CHECK(corpus::q212_root131().alpha_hat() == DimVec{1, 2, 1});
  }

  TEST_CASE("validation failures are listed individually") {
    auto swapped = corpus::q212_root131();
    std::swap(swapped.alpha2, swapped.alpha3);
    try {
      validate_decomposition(swapped);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(has_failure(e, "ext(alpha2,alpha3) != 0"));
      CHECK(e.failures().size() >= 2);
    }
    auto nonreal = corpus::q212_root131();
    nonreal.alpha1 = DimVec{1, 1, 1};
    try {
      validate_decomposition(nonreal);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(has_failure(e, "alpha1 is not a real root"));
    }
    auto small_r = corpus::q212_root131();
    small_r.d2 = 5;  // r = 0
    try {
      validate_decomposition(small_r);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(has_failure(e, "r = n*d3 - d2 must be >= 1"));
    }
    auto not_imag = corpus::q212_root131();
    not_imag.d2 = 0;
    CHECK_THROWS_AS(validate_decomposition(not_imag), ValidationError);
  }

  TEST_CASE("special cases") {
    CHECK(special_case(validate_decomposition(corpus::q212_root131())).kind == SpecialCaseKind::TypeOne);
    CHECK(special_case(validate_decomposition(corpus::q212_root1_14_8())).kind == SpecialCaseKind::TypeOne);
    const Parameters f0 = validate_decomposition(corpus::q111_root232());
    CHECK(f0.r == 2);
    CHECK(f0.t == 1);
    const SpecialCase sc = special_case(f0);
    CHECK(sc.kind == SpecialCaseKind::Fall0);
    REQUIRE(sc.fall0_bound.has_value());
    CHECK(*sc.fall0_bound == f0.r * (f0.d2 - f0.l * (f0.d1 + f0.euler_hat_alpha1)));
    CHECK(to_string(SpecialCaseKind::Fall3) == "Fall3");
  }

  TEST_CASE("classification is exhaustive and type one matches its definition") {
    gen::Gen g(51);
    int seen[5] = {0, 0, 0, 0, 0};
    for (int it = 0; it < 3000; ++it) {
      const auto p = corpus::synthetic_parameters(g.range(1, 4), g.range(0, 12), g.range(3, 9), g.range(0, 6),
                                                  g.range(1, 8), g.range(1, 4));
      if (p.r < 1) continue;
      const SpecialCase sc = special_case(p);
      ++seen[static_cast<int>(sc.kind)];
      const bool t1 = p.r <= p.l * p.t && p.r <= p.n * p.d3 && p.n * p.d3 <= p.l * p.s;
      CHECK((sc.kind == SpecialCaseKind::TypeOne) == t1);
      CHECK(sc.fall0_bound.has_value() == (sc.kind == SpecialCaseKind::Fall0));
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
  }

  TEST_CASE("dimension formulas") {
    const Dimensions d2 = expected_dimensions(validate_decomposition(corpus::q212_root131()));
    CHECK(d2.expected_intersection == 3);
    CHECK(d2.dim_x1 == 47);
    CHECK(d2.dim_x2 == 4);
    CHECK(d2.dim_gr == 48);
    const Dimensions d3 = expected_dimensions(validate_decomposition(corpus::q212_root1_14_8()));
    CHECK(d3.dim_x1 == 4);
    CHECK(d3.dim_x2 == 12);
    CHECK(d3.dim_gr == 16);
    CHECK(d3.expected_intersection == 0);
    CHECK(expected_dimensions(derive_parameters(corpus::q212_family(5, 7, 2))).kac_parameter_count == 15);
  }

  TEST_CASE("dimension identity on synthetic parameter tuples") {
    gen::Gen g(52);
    for (int it = 0; it < 1000; ++it) {
      const auto p = corpus::synthetic_parameters(g.range(1, 6), g.range(0, 20), g.range(3, 12), g.range(0, 10),
                                                  g.range(1, 12), g.range(1, 6));
      CHECK(p.t == p.l * p.r - p.d1);
      CHECK(p.r * (p.w - p.r) - (p.l * p.r - p.t) * (p.s - p.t) == p.d3 * p.d3 - p.euler_alpha_alpha);
      const Dimensions d = expected_dimensions(p);
      CHECK(d.dim_x1 + d.dim_x2 - d.dim_gr == d.expected_intersection);
    }
  }

  TEST_CASE("pushforward classes of the reference inputs") {
    CHECK(pushforward_class(derive_parameters(corpus::q211_root252())) ==
          SymExpr(Basis::Schur, {{{1, 1, 1}, 8}, {{2, 1}, 16}, {{3}, 8}}));
    CHECK(pushforward_class(derive_parameters(corpus::q212_root131())) == SymExpr(Basis::Schur, {{{1}, 2}}));
    const SymExpr p3 = pushforward_class(derive_parameters(corpus::q212_root1_14_8()));
    CHECK(p3.coeff({6, 6}) == 32);
    for (const auto& [lam, c] : p3.terms()) CHECK(lam.length() <= 2);
  }

  TEST_CASE("intersection classes of the reference inputs") {
    const auto i1 = intersection_class(derive_parameters(corpus::q211_root252()));
    SchubertClass want1(GrassBox(4, 16));
    want1.add({15, 15, 15, 14}, 8);
    want1.add({16, 15, 14, 14}, 16);
    CHECK(i1.cls == want1);
    CHECK(i1.gcd == 8);
    const auto i2 = intersection_class(derive_parameters(corpus::q212_root131()));
    CHECK(i2.cls.terms().size() == 1);
    CHECK(i2.cls.coeff({12, 11, 11, 11}) == 2);
    const auto i3 = intersection_class(derive_parameters(corpus::q212_root1_14_8()));
    CHECK(i3.cls.terms().size() == 1);
    CHECK(degree(i3.cls) == 32);
    CHECK(i3.gcd == 32);
  }

  TEST_CASE("witnesses") {
    const Witness w2 = witness_certificate(derive_parameters(corpus::q212_root131()));
    CHECK(w2.mu == Partition{1});
    CHECK(w2.lambda == Partition{1});
    CHECK(w2.certified);
    const Witness w1 = witness_certificate(derive_parameters(corpus::q211_root252()));
    CHECK(w1.mu == Partition{1});
    CHECK(w1.lambda_conj == Partition{3});
    CHECK(w1.lambda == Partition{1, 1, 1});
    CHECK(w1.coefficient == 8);
    CHECK(w1.certified);
    const Witness w3 = witness_certificate(derive_parameters(corpus::q212_root1_14_8()));
    CHECK(w3.lambda == Partition{6, 6});
    CHECK(w3.certified);
    // d1 = 0 gives t = lr and an empty witness
    const auto p0 = corpus::synthetic_parameters(2, 2, 5, 0, 1, 1);
    CHECK(p0.t == p0.l * p0.r);
    const Witness w0 = witness_certificate(p0);
    CHECK(w0.mu.empty());
    CHECK(w0.lambda.empty());
    CHECK(w0.certified);
  }

  TEST_CASE("analyze") {
    const AnalysisReport r2 = analyze(corpus::q212_root131());
    CHECK(r2.special_case.kind == SpecialCaseKind::TypeOne);
    REQUIRE(r2.intersection.has_value());
    CHECK(r2.intersection->gcd == 2);
    CHECK(r2.witness->certified);
    CHECK(r2.warnings.empty());
    const AnalysisReport r3 = analyze(corpus::q212_root1_14_8(), {}, {{"w", 5}, {"n", 8}});
    REQUIRE(r3.warnings.size() == 1);
    CHECK(r3.warnings[0].find("w = 5") != std::string::npos);
    CHECK_THROWS_AS(analyze(corpus::q212_root1_14_8(), {}, {{"q", 1}}), DomainError);
    const AnalysisReport f0 = analyze(corpus::q111_root232());
    CHECK(f0.special_case.kind == SpecialCaseKind::Fall0);
    CHECK_FALSE(f0.intersection.has_value());
    CHECK(f0.special_case.fall0_bound.has_value());
    auto bad = corpus::q212_root131();
    std::swap(bad.alpha2, bad.alpha3);
    CHECK_THROWS_AS(analyze(bad), ValidationError);
  }

  TEST_CASE("corpus is large and validated") {
    CHECK(corpus_entries().size() >= 50);
    for (const auto& e : corpus_entries()) CHECK_NOTHROW(validate_decomposition(e.dec));
  }

  TEST_CASE("non-emptiness on the corpus") {
    for (const auto& e : corpus_entries()) {
      INFO(e.label);
      const Parameters p = derive_parameters(e.dec);
      REQUIRE(special_case(p).kind == SpecialCaseKind::TypeOne);
      const SymExpr pf = pushforward_class(p);
      for (const auto& [lam, c] : pf.terms()) CHECK(c > 0);
      const auto ic = intersection_class(p, pf);
      CHECK_FALSE(ic.cls.is_zero());
      for (const auto& [lam, c] : ic.cls.terms()) CHECK(c % ic.gcd == 0);
      CHECK(witness_certificate(p, pf).certified);
    }
  }

  TEST_CASE("parameter identities on the corpus") {
    for (const auto& e : corpus_entries()) {
      INFO(e.label);
      const Parameters p = derive_parameters(e.dec);
      const Quiver& q = e.dec.quiver.quiver();
      CHECK(p.t == p.l * p.r - p.d1);
      CHECK(p.euler_alpha_alpha == euler_form(q, p.alpha, p.alpha));
      const auto syn = corpus::synthetic_parameters(p.l, p.m, p.n, p.d1, p.d2, p.d3);
      CHECK(syn.euler_alpha_alpha == p.euler_alpha_alpha);
      CHECK(p.r * (p.w - p.r) - (p.l * p.r - p.t) * (p.s - p.t) == p.d3 * p.d3 - p.euler_alpha_alpha);
    }
  }

  TEST_CASE("early truncation does not change the pushforward") {
    int compared = 0;
    for (const auto& e : corpus_entries()) {
      const Parameters p = derive_parameters(e.dec);
      if (p.p() > 8) continue;
      INFO(e.label);
      CHECK(pushforward_class(p, true) == pushforward_class(p, false));
      ++compared;
    }
    CHECK(compared > 40);
  }
}
