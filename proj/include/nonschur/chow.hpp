#pragma once

#include "nonschur/integer.hpp"
#include "nonschur/partition.hpp"
#include "nonschur/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace nonschur {

// Gr_d(k^{d+codim}); Schubert classes are indexed by partitions in the d x codim box.
struct GrassBox {
  int d = 0;
  int codim = 0;
  GrassBox() = default;
  GrassBox(int d_, int codim_);
  bool contains(const Partition& p) const { return p.fits_in_box(d, codim); }
  bool operator==(const GrassBox&) const = default;
};

class SchubertClass {
 public:
  using Terms = std::map<Partition, Integer>;

  explicit SchubertClass(GrassBox box) : box_(box) {}

  const GrassBox& box() const { return box_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Partition& p) const;

  // Terms outside the box are silently dropped.
  void add(const Partition& p, const Integer& c);
  SchubertClass& operator+=(const SchubertClass& o);
  bool operator==(const SchubertClass& o) const = default;

  std::string to_string() const;

 private:
  GrassBox box_;
  Terms terms_;
};

std::vector<Partition> box_basis(const GrassBox& box);

// Zero class when λ lies outside the box.
SchubertClass delta(const GrassBox& box, const Partition& lambda);
// Reads s_λ as Δ_λ and discards what lies outside the box.
SchubertClass from_schur_expr(const GrassBox& box, const SymExpr& expr);

// Multiplication by Δ_{j^d}.
SchubertClass rectangle_mul(const SchubertClass& x, int j);
// Multiplication by Δ_{1^r} = c_r(U^∨).
SchubertClass pieri_mul(const SchubertClass& x, int r);
// Coefficient of the point class.
Integer degree(const SchubertClass& x);
Integer coefficient_gcd(const SchubertClass& x);

SchubertClass product_oracle(const SchubertClass& x, const SchubertClass& y);

}  // namespace nonschur
