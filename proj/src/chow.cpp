#include "nonschur/chow.hpp"

#include "nonschur/errors.hpp"

#include <functional>
#include <sstream>

namespace nonschur {

GrassBox::GrassBox(int d_, int codim_) : d(d_), codim(codim_) {
  if (d < 0 || codim < 0) throw DomainError("Grassmannian box needs d, codim >= 0");
}

Integer SchubertClass::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchubertClass::add(const Partition& p, const Integer& c) {
  if (c == 0 || !box_.contains(p)) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  if (!(o.box_ == box_)) throw DimensionError("classes on different Grassmannians");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

std::string SchubertClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second << "*D" << it->first.to_string();
  }
  return os.str();
}

std::vector<Partition> box_basis(const GrassBox& box) {
  std::vector<Partition> out;
  for (int n = 0; n <= box.d * box.codim; ++n)
    for (auto& p : partitions_of(n, box.codim, box.d)) out.push_back(std::move(p));
  return out;
}

SchubertClass delta(const GrassBox& box, const Partition& lambda) {
  SchubertClass x(box);
  x.add(lambda, 1);
  return x;
}

SchubertClass from_schur_expr(const GrassBox& box, const SymExpr& expr) {
  if (expr.basis() != Basis::Schur) throw DomainError("from_schur_expr expects a Schur expression");
  SchubertClass x(box);
  for (const auto& [p, c] : expr.terms()) x.add(p, c);
  return x;
}

SchubertClass rectangle_mul(const SchubertClass& x, int j) {
  const GrassBox& box = x.box();
  if (j < 0 || j > box.codim) throw DomainError("rectangle width out of range");
  SchubertClass out(box);
  for (const auto& [lambda, c] : x.terms()) {
    std::vector<int> v(box.d);
    for (int i = 0; i < box.d; ++i) v[i] = lambda[i] + j;
    out.add(Partition::from_unsorted(v), c);
  }
  return out;
}

SchubertClass pieri_mul(const SchubertClass& x, int r) {
  const GrassBox& box = x.box();
  if (r < 0 || r > box.d) throw DomainError("Pieri factor out of range");
  SchubertClass out(box);
  for (const auto& [lambda, c] : x.terms()) {
    std::vector<int> nu(box.d);
    for (int i = 0; i < box.d; ++i) nu[i] = lambda[i];
    // One box in each of r distinct rows, keeping the rows weakly decreasing.
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (left == 0) {
        out.add(Partition::from_unsorted(nu), c);
        return;
      }
      if (box.d - i < left) return;
      if (i == 0 || nu[i] + 1 <= nu[i - 1]) {
        ++nu[i];
        rec(i + 1, left - 1);
        --nu[i];
      }
      rec(i + 1, left);
    };
    rec(0, r);
  }
  return out;
}

Integer degree(const SchubertClass& x) {
  return x.coeff(Partition::rectangle(x.box().d, x.box().codim));
}

Integer coefficient_gcd(const SchubertClass& x) {
  Integer g = 0;
  for (const auto& [p, c] : x.terms()) g = boost::multiprecision::gcd(g, abs(c));
  return g;
}

SchubertClass product_oracle(const SchubertClass& x, const SchubertClass& y) {
  if (!(x.box() == y.box())) throw DimensionError("classes on different Grassmannians");
  SchubertClass out(x.box());
  for (const auto& [lambda, c] : x.terms())
    for (const auto& [mu, d] : y.terms()) {
      const SymExpr prod = schur_product_oracle(lambda, mu, x.box().d);
      for (const auto& [nu, e] : prod.terms()) out.add(nu, c * d * e);
    }
  return out;
}

}  // namespace nonschur
