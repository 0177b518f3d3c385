#include "nonschur/symfunc.hpp"

#include "nonschur/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace nonschur {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::Elementary: return "e";
    case Basis::Schur: return "s";
    case Basis::Monomial: return "m";
  }
  return "?";
}

SymExpr::SymExpr(Basis b, std::initializer_list<std::pair<const Partition, Integer>> terms) : basis_(b) {
  for (const auto& [p, c] : terms) add(p, c);
}

Integer SymExpr::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymExpr::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  if (o.basis_ != basis_) throw DomainError("adding expressions in different bases");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SymExpr SymExpr::operator*(const Integer& k) const {
  SymExpr r(basis_);
  for (const auto& [p, c] : terms_) r.add(p, c * k);
  return r;
}

std::string SymExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second << '*' << nonschur::to_string(basis_) << it->first.to_string();
  }
  return os.str();
}

namespace {

void require_basis(const SymExpr& e, Basis b, const char* what) {
  if (e.basis() != b) throw DomainError(std::string(what) + " expects an " + to_string(b) + "-basis expression");
}

// Every ν ⊇ λ with ν/λ a horizontal strip of `boxes` cells, ν ⊆ bound.
// bound[i] < 0 means unbounded; rows beyond bound.size() are forbidden when
// bound is non-empty.
void horizontal_strips(const std::vector<int>& lambda, int boxes, int max_first_row, const Partition* outer,
                       const std::function<void(const std::vector<int>&)>& emit) {
  const int rows = static_cast<int>(lambda.size()) + 1;
  std::vector<int> nu(rows, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == rows) {
      if (rest == 0) {
        std::vector<int> v(nu);
        while (!v.empty() && v.back() == 0) v.pop_back();
        emit(v);
      }
      return;
    }
    const int lo = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    int hi = i == 0 ? max_first_row : lambda[i - 1];
    if (outer) hi = std::min(hi, (*outer)[i]);
    for (int x = lo; x <= hi && x - lo <= rest; ++x) {
      nu[i] = x;
      rec(i + 1, rest - (x - lo));
    }
  };
  rec(0, boxes);
}

std::map<Partition, Integer> strip_dp(const Partition& weight, int max_first_row, const Partition* outer) {
  std::map<std::vector<int>, Integer> cur{{{}, 1}};
  for (int c : weight.parts()) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [shape, cnt] : cur) {
      horizontal_strips(shape, c, max_first_row, outer, [&](const std::vector<int>& nu) { next[nu] += cnt; });
    }
    cur.swap(next);
  }
  std::map<Partition, Integer> out;
  for (auto& [shape, cnt] : cur) out.emplace(Partition(shape), std::move(cnt));
  return out;
}

Polynomial& add_into(Polynomial& p, const std::vector<int>& key, const Integer& c) {
  if (c == 0) return p;
  auto [it, inserted] = p.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
  return p;
}

}  // namespace

// Tableaux are built one value at a time: the cells holding value i form a
// horizontal strip of size weight_i. The state is the shape filled so far.
Integer kostka(const Partition& shape, const Partition& weight) {
  if (shape.size() != weight.size())
    throw DomainError("kostka needs equal sizes: " + shape.to_string() + " vs " + weight.to_string());
  auto col = strip_dp(weight, shape[0], &shape);
  auto it = col.find(shape);
  return it == col.end() ? Integer(0) : it->second;
}

std::map<Partition, Integer> kostka_column(const Partition& weight, int max_first_row) {
  return strip_dp(weight, max_first_row, nullptr);
}

SymExpr e_to_schur(const SymExpr& expr, std::optional<int> max_length) {
  require_basis(expr, Basis::Elementary, "e_to_schur");
  SymExpr out(Basis::Schur);
  const int cap = max_length.value_or(std::numeric_limits<int>::max());
  for (const auto& [nu, c] : expr.terms()) {
    for (const auto& [lambda, k] : kostka_column(nu, cap)) out.add(lambda.conjugate(), c * k);
  }
  return out;
}

Polynomial schur_polynomial(const Partition& lambda, int num_vars) {
  if (num_vars < 0) throw DomainError("negative variable count");
  Polynomial out;
  if (lambda.length() > num_vars) return out;
  const auto& rows = lambda.parts();
  std::vector<std::vector<int>> t;
  for (int r : rows) t.emplace_back(r, 0);
  std::vector<int> expo(num_vars, 0);
  const Partition conj = lambda.conjugate();
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int j) {
    if (i == rows.size()) {
      add_into(out, expo, 1);
      return;
    }
    if (j == rows[i]) {
      fill(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    // Column strictness: the entries below still need room.
    const int hi = num_vars - (conj[j] - 1 - static_cast<int>(i));
    for (int v = lo; v <= hi; ++v) {
      t[i][j] = v;
      ++expo[v - 1];
      fill(i, j + 1);
      --expo[v - 1];
    }
  };
  fill(0, 0);
  return out;
}

// Direct tableau count with fixed content, independent of the strip recursion in kostka.
SymExpr schur_to_monomial(const Partition& lambda, int num_vars) {
  SymExpr out(Basis::Monomial);
  const int n = lambda.size();
  const Partition conj = lambda.conjugate();
  const auto& rows = lambda.parts();
  for (const Partition& mu : partitions_of(n, std::numeric_limits<int>::max(), num_vars)) {
    std::vector<int> left = mu.parts();
    std::vector<std::vector<int>> t;
    for (int r : rows) t.emplace_back(r, 0);
    Integer count = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int j) {
      if (i == rows.size()) {
        ++count;
        return;
      }
      if (j == rows[i]) {
        fill(i + 1, 0);
        return;
      }
      int lo = 1;
      if (j > 0) lo = std::max(lo, t[i][j - 1]);
      if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
      const int hi = static_cast<int>(left.size()) - (conj[j] - 1 - static_cast<int>(i));
      for (int v = lo; v <= hi; ++v) {
        if (left[v - 1] == 0) continue;
        t[i][j] = v;
        --left[v - 1];
        fill(i, j + 1);
        ++left[v - 1];
      }
    };
    fill(0, 0);
    out.add(mu, count);
  }
  return out;
}

namespace {

// Number of 0-1 matrices with the given row sums and column sums `cols`.
// Columns with equal remaining sums are interchangeable, so the state is the
// sorted vector of remaining column sums.
Integer count_01(const std::vector<int>& row_sums, std::size_t i, std::vector<int> cols,
                 std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
  std::sort(cols.begin(), cols.end(), std::greater<>());
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  if (i == row_sums.size()) return cols.empty() ? 1 : 0;
  auto key = std::make_pair(i, cols);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
  for (int c : cols) {
    if (!groups.empty() && groups.back().first == c) ++groups.back().second;
    else groups.emplace_back(c, 1);
  }
  Integer total = 0;
  std::vector<int> take(groups.size(), 0);
  std::function<void(std::size_t, int, Integer)> choose = [&](std::size_t g, int rest, Integer mult) {
    if (g == groups.size()) {
      if (rest) return;
      std::vector<int> next;
      for (std::size_t h = 0; h < groups.size(); ++h) {
        for (int x = 0; x < groups[h].second; ++x)
          next.push_back(groups[h].first - (x < take[h] ? 1 : 0));
      }
      total += mult * count_01(row_sums, i + 1, std::move(next), memo);
      return;
    }
    for (int x = 0; x <= std::min(rest, groups[g].second); ++x) {
      take[g] = x;
      choose(g + 1, rest - x, mult * binomial(groups[g].second, x));
    }
    take[g] = 0;
  };
  choose(0, row_sums[i], 1);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

SymExpr elementary_to_monomial(const SymExpr& expr, int num_vars) {
  require_basis(expr, Basis::Elementary, "elementary_to_monomial");
  SymExpr out(Basis::Monomial);
  for (const auto& [mu, c] : expr.terms()) {
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    for (const Partition& lambda : partitions_of(mu.size(), std::numeric_limits<int>::max(), num_vars)) {
      out.add(lambda, c * count_01(mu.parts(), 0, lambda.parts(), memo));
    }
  }
  return out;
}

SymExpr lemma_michael_f(int l, int p) {
  if (l < 0 || p < 0) throw DomainError("lemma_michael_f needs l, p >= 0");
  SymExpr out(Basis::Elementary);
  for (const Partition& mu : partitions_of(p, std::numeric_limits<int>::max(), l)) {
    const Partition c = mu.conjugate();
    Integer b = 1;
    for (int j = 0; j < c.length(); ++j) b *= binomial(l - c[0] + c[j], c[j] - c[j + 1]);
    out.add(mu, b);
  }
  return out;
}

SymExpr f_in_monomial_basis(int l, int p) {
  if (l < 0 || p < 0) throw DomainError("f_in_monomial_basis needs l, p >= 0");
  SymExpr out(Basis::Monomial);
  for (const Partition& lambda : partitions_of(p, l)) {
    Integer b = 1;
    for (int x : lambda.parts()) b *= binomial(l, x);
    out.add(lambda, b);
  }
  return out;
}

SymExpr e_multiply(const SymExpr& a, const SymExpr& b) {
  require_basis(a, Basis::Elementary, "e_multiply");
  require_basis(b, Basis::Elementary, "e_multiply");
  SymExpr out(Basis::Elementary);
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms()) out.add(union_of(p, q), c * d);
  return out;
}

SymExpr e_power(const SymExpr& expr, int k) {
  require_basis(expr, Basis::Elementary, "e_power");
  if (k < 0) throw DomainError("negative exponent");
  SymExpr out(Basis::Elementary);
  std::vector<std::pair<Partition, Integer>> terms(expr.terms().begin(), expr.terms().end());
  if (k == 0) {
    out.add(Partition{}, 1);
    return out;
  }
  if (terms.empty()) return out;
  std::vector<int> parts;
  // Composition k = k_0 + ... + k_{N-1}; coefficient Π C(rest_i, k_i) b_i^{k_i}.
  std::function<void(std::size_t, int, Integer)> rec = [&](std::size_t i, int rest, Integer coef) {
    const auto& [mu, b] = terms[i];
    const std::size_t mark = parts.size();
    const int lo = i + 1 == terms.size() ? rest : 0;
    for (int ki = 0; ki < lo; ++ki)
      for (int x : mu.parts()) parts.push_back(x);
    for (int ki = lo; ki <= rest; ++ki) {
      const Integer c = coef * binomial(rest, ki) * ipow(b, ki);
      if (i + 1 == terms.size()) out.add(Partition::from_unsorted(parts), c);
      else rec(i + 1, rest - ki, c);
      for (int x : mu.parts()) parts.push_back(x);
    }
    parts.resize(mark);
  };
  rec(0, k, 1);
  return out;
}

SymExpr drop_large_parts(const SymExpr& expr, int max_part) {
  SymExpr out(expr.basis());
  for (const auto& [p, c] : expr.terms())
    if (p[0] <= max_part) out.add(p, c);
  return out;
}

SymExpr drop_long(const SymExpr& expr, int max_length) {
  SymExpr out(expr.basis());
  for (const auto& [p, c] : expr.terms())
    if (p.length() <= max_length) out.add(p, c);
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (ea.size() != eb.size()) throw DimensionError("polynomials in different variable counts");
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_into(out, e, ca * cb);
    }
  }
  return out;
}

SymExpr schur_product_oracle(const Partition& lambda, const Partition& mu, int num_vars) {
  Polynomial rest = multiply(schur_polynomial(lambda, num_vars), schur_polynomial(mu, num_vars));
  SymExpr out(Basis::Schur);
  while (!rest.empty()) {
    // The lex-leading monomial of a symmetric polynomial has a partition as exponent.
    const auto [lead, c] = *rest.rbegin();
    if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
      throw InternalError("remainder is not symmetric");
    const Partition nu = Partition::from_unsorted(lead);
    out.add(nu, c);
    for (const auto& [e, d] : schur_polynomial(nu, num_vars)) add_into(rest, e, -c * d);
  }
  return out;
}

}  // namespace nonschur
