#include "nonschur/gluing.hpp"

#include "nonschur/errors.hpp"

#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace nonschur {

bool check_conditions(const KroneckerPair& pair) {
  if (pair.first.size() != 2 || pair.second.size() != 2) return false;
  const std::int64_t ds = pair.first[0], es = pair.first[1];
  const std::int64_t d = pair.second[0], e = pair.second[1];
  if (es * d - e * ds != 1) return false;
  if (!(1 <= ds && ds <= d)) return false;
  if (ds != 1) return 1 <= es && es <= e;
  return es == e + 1;
}

namespace {

using Pair = std::array<std::int64_t, 4>;  // d_s, e_s, d, e

bool within(std::int64_t a, std::int64_t b, const DimVec& v) { return a <= v[0] && b <= v[1]; }

// Forward search from the base pairs ((1,n'),(1,n'-1)). A pair whose second
// vector already exceeds the target cannot lead anywhere: every descendant
// has a larger second vector.
std::optional<std::pair<Pair, std::int64_t>> search(int n, const DimVec& v) {
  std::deque<Pair> queue;
  std::set<Pair> seen;
  for (int np = 2; np <= n; ++np) {
    Pair p{1, np, 1, np - 1};
    if (within(p[2], p[3], v) && seen.insert(p).second) queue.push_back(p);
  }
  while (!queue.empty()) {
    const Pair p = queue.front();
    queue.pop_front();
    const auto [ds, es, d, e] = p;
    if ((v[0] - ds) % d == 0) {
      const std::int64_t k = (v[0] - ds) / d;
      if (k >= 1 && es + k * e == v[1]) return std::make_pair(p, k);
    }
    for (std::int64_t k = 0;; ++k) {
      const Pair c{ds + k * d, es + k * e, ds + (k + 1) * d, es + (k + 1) * e};
      if (!within(c[2], c[3], v)) break;
      if (!check_conditions({n, DimVec{c[0], c[1]}, DimVec{c[2], c[3]}})) continue;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return std::nullopt;
}

}  // namespace

KroneckerDecomposition kronecker_decompose(int n, const DimVec& target) {
  if (n < 3) throw DomainError("kronecker_decompose needs n >= 3");
  if (target.size() != 2) throw DimensionError("Kronecker vectors have two entries");
  if (!target.is_nonnegative() || target.is_zero())
    throw DecompositionNotFound(target.to_string() + " is not a root of K(" + std::to_string(n) + ")");
  if (target.sum() == 1) throw DecompositionNotFound(target.to_string() + " is a simple root");
  if (classify_root(GenKronecker(n).quiver(), target) == RootClass::NotARoot)
    throw DecompositionNotFound(target.to_string() + " is not a root of K(" + std::to_string(n) + ")");

  const std::int64_t g = std::gcd(target[0], target[1]);
  const DimVec v{target[0] / g, target[1] / g};
  auto found = search(n, v);
  if (!found)
    throw DecompositionNotFound("no decomposition of " + v.to_string() + " is reachable from the base pairs of K(" +
                                std::to_string(n) + ")");
  const auto& [p, k] = *found;
  return {{n, DimVec{p[0], p[1]}, DimVec{p[2], p[3]}}, k, g};
}

bool check_hom_orthogonal(int n, const DimVec& a, const DimVec& b, const SamplingOptions& opts) {
  const GenKronecker k(n);
  const Quiver& q = k.quiver();
  return generic_hom(q, a, b, opts) == 0 && generic_hom(q, b, a, opts) == 0;
}

DimVec Split::beta_hat() const { return beta_kron[1] * dec.alpha2 + beta_kron[0] * dec.alpha3; }
DimVec Split::gamma_hat() const { return gamma_kron[1] * dec.alpha2 + gamma_kron[0] * dec.alpha3; }
DimVec Split::beta() const { return c_s * dec.alpha1 + beta_hat(); }
DimVec Split::gamma() const { return c * dec.alpha1 + gamma_hat(); }

namespace {

// Condition (ii) for one part: zero α₁-multiplicity, or a validated
// decomposition of type one.
bool part_type_one(const ExcDecomposition& dec, std::int64_t mult, const DimVec& kron, const char* name,
                   const SamplingOptions& opts, std::vector<std::string>& bad) {
  if (mult == 0) return false;
  ExcDecomposition sub{dec.quiver, dec.alpha1, dec.alpha2, dec.alpha3, mult, kron[1], kron[0]};
  try {
    const Parameters p = validate_decomposition(sub, opts);
    if (special_case(p).kind == SpecialCaseKind::TypeOne) return true;
    bad.push_back(std::string("condition (ii): ") + name + " is not of type one (" +
                  to_string(special_case(p).kind) + ")");
  } catch (const ValidationError& e) {
    for (const auto& f : e.failures()) bad.push_back(std::string("condition (ii): ") + name + ": " + f);
  }
  return false;
}

}  // namespace

GluingReport gluing_report(const Split& split, const SamplingOptions& opts) {
  const Parameters pa = validate_decomposition(split.dec, opts);
  const Quiver& q = split.dec.quiver.quiver();
  const int n = static_cast<int>(pa.n);

  std::vector<std::string> bad;
  if (split.beta_kron.size() != 2 || split.gamma_kron.size() != 2) throw DimensionError("Kronecker parts need two entries");
  if (split.c_s < 0 || split.c < 0 || !split.beta_kron.is_nonnegative() || !split.gamma_kron.is_nonnegative())
    bad.push_back("negative multiplicity in split");
  if (split.c_s + split.c != split.dec.d1 || split.beta_kron + split.gamma_kron != DimVec{split.dec.d3, split.dec.d2})
    bad.push_back("beta + gamma != alpha");
  if (!bad.empty()) throw ValidationError(bad);

  const DimVec beta = split.beta(), gamma = split.gamma();
  if (beta.is_zero()) bad.push_back("degenerate split: beta = 0");
  if (gamma.is_zero()) bad.push_back("degenerate split: gamma = 0");
  if (!bad.empty()) throw ValidationError(bad);

  const GenKronecker kron_quiver(n);
  const Quiver& kq = kron_quiver.quiver();
  for (const auto& [kron, name] : {std::pair{split.beta_kron, "beta_hat"}, std::pair{split.gamma_kron, "gamma_hat"}}) {
    if (kron.is_zero() || classify_root(kq, kron) == RootClass::NotARoot)
      bad.push_back(std::string("condition (i): ") + name + " = " + kron.to_string() + " is not a root of K(" +
                    std::to_string(n) + ")");
  }
  if (classify_root(q, beta) == RootClass::NotARoot) bad.push_back("condition (i): beta = " + beta.to_string() + " is not a root");
  if (classify_root(q, gamma) == RootClass::NotARoot)
    bad.push_back("condition (i): gamma = " + gamma.to_string() + " is not a root");
  if (!bad.empty()) throw ValidationError(bad);

  GluingReport rep;
  rep.beta_type_one = part_type_one(split.dec, split.c_s, split.beta_kron, "beta", opts, bad);
  rep.gamma_type_one = part_type_one(split.dec, split.c, split.gamma_kron, "gamma", opts, bad);
  if (!check_hom_orthogonal(n, split.beta_kron, split.gamma_kron, opts))
    bad.push_back("condition (iii): Kronecker parts " + split.beta_kron.to_string() + ", " +
                  split.gamma_kron.to_string() + " are not Hom-orthogonal");
  if (!bad.empty()) throw ValidationError(bad);

  rep.beta = beta;
  rep.gamma = gamma;
  rep.n_beta = euler_form(q, split.beta_hat(), split.dec.alpha1);
  rep.n_gamma = euler_form(q, split.gamma_hat(), split.dec.alpha1);
  rep.euler_beta_gamma = euler_form(q, beta, gamma);
  rep.euler_gamma_beta = euler_form(q, gamma, beta);
  rep.ker_beta_gamma = -rep.euler_beta_gamma + split.c * rep.n_beta - split.c_s * rep.n_gamma;
  rep.ker_gamma_beta = -rep.euler_gamma_beta + split.c_s * rep.n_gamma - split.c * rep.n_beta;
  if (rep.ker_beta_gamma < 0 || rep.ker_gamma_beta < 0) {
    std::ostringstream os;
    os << "inconsistent split: kernel dimensions " << rep.ker_beta_gamma << ", " << rep.ker_gamma_beta;
    throw ValidationError({os.str()});
  }
  if (rep.ker_beta_gamma + rep.ker_gamma_beta != -rep.euler_beta_gamma - rep.euler_gamma_beta)
    throw InternalError("kernel dimensions do not add up");
  rep.parameter_total = (1 - euler_form(q, beta, beta)) + (1 - euler_form(q, gamma, gamma)) +
                        (-1 - rep.euler_beta_gamma - rep.euler_gamma_beta);
  rep.kac_parameter_count = 1 - pa.euler_alpha_alpha;
  if (rep.parameter_total != rep.kac_parameter_count) throw InternalError("parameter total differs from 1 - <alpha,alpha>");
  rep.trials = opts.trials;
  return rep;
}

std::vector<Split> enumerate_splits(const ExcDecomposition& dec, const SamplingOptions& opts) {
  const Parameters pa = validate_decomposition(dec, opts);
  std::vector<std::pair<DimVec, DimVec>> kron_splits;
  try {
    const auto kd = kronecker_decompose(static_cast<int>(pa.n), DimVec{dec.d3, dec.d2});
    const DimVec second = kd.second();
    kron_splits.emplace_back(kd.first() + (kd.k - 1) * second, second);
    if (kd.scale > 1) {
      const DimVec v = kd.base.first + kd.k * kd.base.second;
      for (std::int64_t i = 1; i < kd.scale; ++i) kron_splits.emplace_back(i * v, (kd.scale - i) * v);
    }
  } catch (const DecompositionNotFound&) {
    return {};
  }
  std::vector<Split> out;
  for (const auto& [b, g] : kron_splits) {
    for (std::int64_t cs = 0; cs <= dec.d1; ++cs) {
      Split s{dec, cs, dec.d1 - cs, b, g};
      try {
        gluing_report(s, opts);
        out.push_back(s);
      } catch (const ValidationError&) {
      }
    }
  }
  return out;
}

}  // namespace nonschur
