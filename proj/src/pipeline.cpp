#include "nonschur/pipeline.hpp"

#include "nonschur/errors.hpp"

#include <sstream>

namespace nonschur {

DimVec ExcDecomposition::alpha_hat() const { return d2 * alpha2 + d3 * alpha3; }
DimVec ExcDecomposition::alpha() const { return d1 * alpha1 + alpha_hat(); }

namespace {

struct Derived {
  Parameters p;
  std::int64_t t_from_lr = 0;
};

Derived compute(const ExcDecomposition& dec) {
  const Quiver& q = dec.quiver.quiver();
  Parameters p;
  p.d1 = dec.d1;
  p.d2 = dec.d2;
  p.d3 = dec.d3;
  p.l = euler_form(q, dec.alpha2, dec.alpha1);
  p.n = -euler_form(q, dec.alpha3, dec.alpha2);
  p.m = -euler_form(q, dec.alpha3, dec.alpha1);
  p.alpha_hat = dec.alpha_hat();
  p.alpha = dec.alpha();
  p.delta = dec.alpha3 + p.n * dec.alpha2;
  p.euler_hat_alpha1 = euler_form(q, p.alpha_hat, dec.alpha1);
  p.euler_alpha_alpha = euler_form(q, p.alpha, p.alpha);
  p.r = p.n * p.d3 - p.d2;
  p.s = (p.n * p.l - p.m) * p.d3;
  p.w = p.n * p.d3;
  p.t = p.s - p.d1 - p.euler_hat_alpha1;
  return {p, p.l * p.r - p.d1};
}

std::string fmt(const char* what, std::int64_t v) {
  std::ostringstream os;
  os << what << " (got " << v << ")";
  return os.str();
}

int as_int(std::int64_t v, const char* what) {
  if (v < 0 || v > 1'000'000) throw DomainError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Parameters derive_parameters(const ExcDecomposition& dec) {
  Derived d = compute(dec);
  if (d.p.t != d.t_from_lr) throw InternalError("t = s - d1 - <alphahat,alpha1> disagrees with t = l*r - d1");
  return d.p;
}

Parameters validate_decomposition(const ExcDecomposition& dec, const SamplingOptions& opts) {
  const Quiver& q = dec.quiver.quiver();
  std::vector<std::string> bad;
  const DimVec* alphas[3] = {&dec.alpha1, &dec.alpha2, &dec.alpha3};
  for (int i = 0; i < 3; ++i) {
    const std::string name = "alpha" + std::to_string(i + 1);
    const DimVec& a = *alphas[i];
    if (a.size() != 3) bad.push_back(name + " must have 3 entries");
    else if (!a.is_nonnegative()) bad.push_back(name + " has a negative entry");
    else if (a.is_zero()) bad.push_back(name + " is zero");
  }
  if (dec.d1 < 0) bad.push_back(fmt("d1 must be >= 0", dec.d1));
  if (dec.d2 < 1) bad.push_back(fmt("d2 must be >= 1", dec.d2));
  if (dec.d3 < 1) bad.push_back(fmt("d3 must be >= 1", dec.d3));
  if (!bad.empty()) throw ValidationError(bad);

  for (int i = 0; i < 3; ++i) {
    const std::string name = "alpha" + std::to_string(i + 1);
    const std::int64_t e = euler_form(q, *alphas[i], *alphas[i]);
    if (e != 1) bad.push_back(fmt((name + " is not a real root: <" + name + "," + name + "> != 1").c_str(), e));
    else if (generic_ext(q, *alphas[i], *alphas[i], opts) != 0)
      bad.push_back(name + " is not exceptional: ext(" + name + "," + name + ") != 0");
  }

  struct Vanishing {
    bool ext;
    int i, j;
  };
  // The first four are the vanishing facts the parameter formulas rely on; the
  // rest say that α₂, α₃ lie in the right perpendicular category of α₁ and
  // are mutually hom-free, which makes the triple an exceptional sequence.
  const Vanishing checks[] = {{true, 2, 3},  {false, 3, 2}, {false, 3, 1}, {true, 2, 1}, {false, 1, 2},
                              {true, 1, 2},  {false, 1, 3}, {true, 1, 3},  {false, 2, 3}};
  for (const auto& c : checks) {
    const DimVec& a = *alphas[c.i - 1];
    const DimVec& b = *alphas[c.j - 1];
    const std::int64_t v = c.ext ? generic_ext(q, a, b, opts) : generic_hom(q, a, b, opts);
    if (v != 0) {
      std::ostringstream os;
      os << (c.ext ? "ext" : "hom") << "(alpha" << c.i << ",alpha" << c.j << ") != 0";
      bad.push_back(os.str());
    }
  }

  Derived d = compute(dec);
  const Parameters& p = d.p;
  if (p.l <= 0) bad.push_back(fmt("l = <alpha2,alpha1> must be positive", p.l));
  if (p.n <= 0) {
    bad.push_back(fmt("n = -<alpha3,alpha2> must be positive", p.n));
  } else {
    const DimVec kron{dec.d3, dec.d2};
    if (classify_root(GenKronecker(static_cast<int>(p.n)).quiver(), kron) != RootClass::ImaginaryRoot)
      bad.push_back("(d3,d2) = " + kron.to_string() + " is not an imaginary root of K(" + std::to_string(p.n) + ")");
  }
  if (p.r < 1) bad.push_back(fmt("r = n*d3 - d2 must be >= 1", p.r));
  if (p.t != d.t_from_lr) {
    std::ostringstream os;
    os << "t mismatch: s - d1 - <alphahat,alpha1> = " << p.t << " but l*r - d1 = " << d.t_from_lr;
    bad.push_back(os.str());
  }
  if (classify_root(q, p.alpha) == RootClass::NotARoot) bad.push_back("alpha = " + p.alpha.to_string() + " is not a root");
  if (p.r >= 1 && p.t < 1) bad.push_back(fmt("t = l*r - d1 must be >= 1", p.t));
  // otherwise s - t = d1 + <alphahat,alpha1> can go negative
  if (generic_ext(q, p.alpha_hat, dec.alpha1, opts) != 0) bad.push_back("ext(alphahat,alpha1) != 0");
  if (!bad.empty()) throw ValidationError(bad);

  const std::int64_t expected = p.d1 * p.d1 + p.d2 * p.d2 + p.d3 * p.d3 + p.l * p.d1 * p.d2 -
                                p.m * p.d1 * p.d3 - p.n * p.d2 * p.d3;
  if (expected != p.euler_alpha_alpha) throw InternalError("<alpha,alpha> does not decompose along the sequence");
  return p;
}

std::string to_string(SpecialCaseKind k) {
  switch (k) {
    case SpecialCaseKind::TypeOne: return "TypeOne";
    case SpecialCaseKind::Fall0: return "Fall0";
    case SpecialCaseKind::Fall1: return "Fall1";
    case SpecialCaseKind::Fall2: return "Fall2";
    case SpecialCaseKind::Fall3: return "Fall3";
  }
  return "?";
}

SpecialCase special_case(const Parameters& p) {
  const std::int64_t lt = p.l * p.t, ls = p.l * p.s, nd3 = p.n * p.d3;
  if (p.r <= lt && p.r <= nd3 && nd3 <= ls) return {SpecialCaseKind::TypeOne, std::nullopt};
  const std::int64_t shift = p.l * (p.d1 + p.euler_hat_alpha1);
  if (p.r <= nd3 - shift) return {SpecialCaseKind::Fall0, p.r * (p.d2 - shift)};
  if (nd3 > ls) return {p.r <= lt ? SpecialCaseKind::Fall2 : SpecialCaseKind::Fall1, std::nullopt};
  return {SpecialCaseKind::Fall3, std::nullopt};
}

Dimensions expected_dimensions(const Parameters& p) {
  Dimensions d;
  d.dim_x1 = p.t * (p.s - p.t) + p.r * (p.l * p.t - p.r);
  d.dim_x2 = p.r * (p.w - p.r);
  d.dim_gr = p.r * (p.l * p.s - p.r);
  d.expected_intersection = p.d3 * p.d3 - p.euler_alpha_alpha;
  d.kac_parameter_count = 1 - p.euler_alpha_alpha;
  if (d.dim_x1 + d.dim_x2 - d.dim_gr != d.expected_intersection)
    throw InternalError("dim X1 + dim X2 - dim Gr != d3^2 - <alpha,alpha>");
  return d;
}

SymExpr pushforward_class(const Parameters& p, bool early_truncation) {
  const int r = as_int(p.r, "r");
  const int pp = as_int(p.p(), "l*r - t");
  const int k = as_int(p.k(), "s - t");
  const int l = as_int(p.l, "l");
  if (r < 1) throw DomainError("pushforward needs r >= 1");
  SymExpr f = lemma_michael_f(l, pp);
  if (early_truncation) f = drop_large_parts(f, r);
  return e_to_schur(e_power(f, k), r);
}

GrassBox intersection_box(const Parameters& p) {
  return GrassBox(as_int(p.r, "r"), as_int(p.l * p.s - p.r, "l*s - r"));
}

IntersectionResult intersection_class(const Parameters& p, const SymExpr& pushforward) {
  const GrassBox box = intersection_box(p);
  const std::int64_t j = p.l * p.s - p.w;
  if (j < 0 || j > box.codim) throw DomainError("needs r <= w <= l*s");
  SchubertClass cls = rectangle_mul(from_schur_expr(box, pushforward), static_cast<int>(j));
  Integer g = coefficient_gcd(cls);
  return {std::move(cls), std::move(g)};
}

IntersectionResult intersection_class(const Parameters& p) { return intersection_class(p, pushforward_class(p)); }

Witness witness_certificate(const Parameters& p, const SymExpr& pushforward) {
  const int l = as_int(p.l, "l");
  const int r = as_int(p.r, "r");
  const int pp = as_int(p.p(), "l*r - t");
  const int k = as_int(p.k(), "s - t");
  if (l < 1 || r < 1) throw DomainError("witness needs l, r >= 1");
  Witness wt;
  const int q = pp / l, j = pp % l;
  std::vector<int> mu(j, q + 1);
  mu.insert(mu.end(), l - j, q);
  wt.mu = Partition::from_unsorted(mu);

  const std::int64_t total = static_cast<std::int64_t>(pp) * k;
  std::vector<int> lc(total / r, r);
  if (total % r) lc.push_back(static_cast<int>(total % r));
  wt.lambda_conj = Partition(lc);
  wt.lambda = wt.lambda_conj.conjugate();
  wt.dominance = dominates(wt.lambda_conj, scaled_union(k, wt.mu));
  wt.fits_box = p.w >= p.r && wt.lambda.fits_in_box(r, static_cast<int>(p.w - p.r));
  wt.coefficient = pushforward.coeff(wt.lambda);
  wt.certified = wt.dominance && wt.fits_box && wt.coefficient > 0;
  return wt;
}

Witness witness_certificate(const Parameters& p) { return witness_certificate(p, pushforward_class(p)); }

namespace {

struct Named {
  const char* name;
  std::int64_t Parameters::*field;
  const char* formula;
};

constexpr Named kNamed[] = {
    {"l", &Parameters::l, "<alpha2,alpha1>"},   {"m", &Parameters::m, "-<alpha3,alpha1>"},
    {"n", &Parameters::n, "-<alpha3,alpha2>"},  {"r", &Parameters::r, "n*d3 - d2"},
    {"s", &Parameters::s, "(n*l - m)*d3"},      {"t", &Parameters::t, "l*r - d1"},
    {"w", &Parameters::w, "n*d3"},
};

}  // namespace

AnalysisReport analyze(const ExcDecomposition& dec, const SamplingOptions& opts,
                       const std::map<std::string, std::int64_t>& expected) {
  for (const auto& [key, v] : expected) {
    bool known = false;
    for (const auto& nm : kNamed) known = known || key == nm.name;
    if (!known) throw DomainError("unknown parameter name '" + key + "'");
  }
  AnalysisReport rep{dec, opts, validate_decomposition(dec, opts), {}, {}, {}, {}, {}, {}};
  const Parameters& p = rep.parameters;
  rep.special_case = special_case(p);
  rep.dims = expected_dimensions(p);

  for (const auto& nm : kNamed) {
    auto it = expected.find(nm.name);
    if (it != expected.end() && it->second != p.*nm.field) {
      std::ostringstream os;
      os << "reference value " << nm.name << " = " << it->second << " differs from derived " << nm.name << " = "
         << nm.formula << " = " << p.*nm.field;
      rep.warnings.push_back(os.str());
    }
  }

  if (rep.special_case.kind == SpecialCaseKind::TypeOne) {
    rep.pushforward = pushforward_class(p);
    rep.intersection = intersection_class(p, *rep.pushforward);
    rep.witness = witness_certificate(p, *rep.pushforward);
    if (rep.intersection->cls.is_zero()) rep.warnings.push_back("intersection class vanishes");
    if (!rep.witness->certified) rep.warnings.push_back("witness partition not certified");
  } else {
    rep.warnings.push_back("not of type one (" + to_string(rep.special_case.kind) +
                           "): no intersection class computed");
  }
  return rep;
}

}  // namespace nonschur
