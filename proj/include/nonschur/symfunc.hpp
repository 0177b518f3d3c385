#pragma once

#include "nonschur/integer.hpp"
#include "nonschur/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nonschur {

enum class Basis { Elementary, Schur, Monomial };
std::string to_string(Basis b);

// Finite linear combination of e_λ, s_λ or m_λ. Zero coefficients are never stored.
class SymExpr {
 public:
  using Terms = std::map<Partition, Integer>;

  explicit SymExpr(Basis b) : basis_(b) {}
  SymExpr(Basis b, std::initializer_list<std::pair<const Partition, Integer>> terms);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Partition& p) const;

  void add(const Partition& p, const Integer& c);
  SymExpr& operator+=(const SymExpr& o);
  SymExpr operator*(const Integer& k) const;
  bool operator==(const SymExpr& o) const = default;

  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

// Full polynomial in a fixed number of variables, keyed by exponent vector.
using Polynomial = std::map<std::vector<int>, Integer>;

// Semistandard tableaux of the given shape and weight.
Integer kostka(const Partition& shape, const Partition& weight);

// All K_{λ,weight} at once, restricted to shapes with λ₁ <= max_first_row.
std::map<Partition, Integer> kostka_column(const Partition& weight, int max_first_row);

// e_ν = Σ_λ K_{λ,ν} s_{λ'}; Schur terms of length > max_length are dropped.
SymExpr e_to_schur(const SymExpr& expr, std::optional<int> max_length = std::nullopt);

Polynomial schur_polynomial(const Partition& lambda, int num_vars);

// Coefficients of s_λ(x_1..x_n) on the orbit sums m_μ, ℓ(μ) <= n.
SymExpr schur_to_monomial(const Partition& lambda, int num_vars);

// Same for an e-basis expression, computed by counting 0-1 matrices.
SymExpr elementary_to_monomial(const SymExpr& expr, int num_vars);

// Σ_{μ ⊢ p, ℓ(μ) <= l} Π_j C(l - μ'_1 + μ'_j, μ'_j - μ'_{j+1}) e_μ
SymExpr lemma_michael_f(int l, int p);
// Σ_{λ ⊢ p, λ₁ <= l} Π_i C(l, λ_i) m_λ
SymExpr f_in_monomial_basis(int l, int p);

SymExpr e_multiply(const SymExpr& a, const SymExpr& b);
// Multinomial expansion over the terms of expr.
SymExpr e_power(const SymExpr& expr, int k);

// Drops e_μ with μ₁ > max_part (e_j vanishes in fewer than j variables).
SymExpr drop_large_parts(const SymExpr& expr, int max_part);
SymExpr drop_long(const SymExpr& expr, int max_length);

// s_λ s_μ in num_vars variables, by expanding and peeling leading monomials.
SymExpr schur_product_oracle(const Partition& lambda, const Partition& mu, int num_vars);

Polynomial multiply(const Polynomial& a, const Polynomial& b);

}  // namespace nonschur
