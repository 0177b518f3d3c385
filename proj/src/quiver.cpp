#include "nonschur/quiver.hpp"

#include "nonschur/errors.hpp"

#include <sstream>

namespace nonschur {

DimVec DimVec::unit(std::size_t n, std::size_t i) {
  DimVec e = zero(n);
  e[i] = 1;
  return e;
}

bool DimVec::is_zero() const {
  for (auto x : v_)
    if (x != 0) return false;
  return true;
}

bool DimVec::is_nonnegative() const {
  for (auto x : v_)
    if (x < 0) return false;
  return true;
}

std::int64_t DimVec::sum() const {
  std::int64_t s = 0;
  for (auto x : v_) s += x;
  return s;
}

std::string DimVec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

DimVec DimVec::operator+(const DimVec& o) const {
  if (o.size() != size()) throw DimensionError("dimension vectors of different length");
  DimVec r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}

DimVec DimVec::operator-(const DimVec& o) const {
  if (o.size() != size()) throw DimensionError("dimension vectors of different length");
  DimVec r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] -= o[i];
  return r;
}

DimVec operator*(std::int64_t k, const DimVec& v) {
  DimVec r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= k;
  return r;
}

int Quiver::total_arrows() const {
  int s = 0;
  for (const auto& a : arrows) s += a.count;
  return s;
}

QuiverThree::QuiverThree(int m12, int m13, int m23) : m12_(m12), m13_(m13), m23_(m23) {
  if (m12 < 0 || m13 < 0 || m23 < 0) throw DomainError("negative arrow count");
  if (m12 + m13 == 0 || m12 + m23 == 0 || m13 + m23 == 0)
    throw DomainError("quiver " + to_string() + " has an isolated vertex");
  q_.num_vertices = 3;
  if (m12) q_.arrows.push_back({1, 0, m12});
  if (m13) q_.arrows.push_back({2, 0, m13});
  if (m23) q_.arrows.push_back({2, 1, m23});
}

std::string QuiverThree::to_string() const {
  std::ostringstream os;
  os << "Q(" << m12_ << ',' << m13_ << ',' << m23_ << ')';
  return os.str();
}

GenKronecker::GenKronecker(int n) : n_(n) {
  if (n < 1) throw DomainError("K(n) needs n >= 1");
  q_.num_vertices = 2;
  q_.arrows.push_back({0, 1, n});
}

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::RealRoot: return "RealRoot";
    case RootClass::ImaginaryRoot: return "ImaginaryRoot";
    case RootClass::NotARoot: return "NotARoot";
  }
  return "?";
}

namespace {
void check_shape(const Quiver& q, const DimVec& a) {
  if (a.size() != static_cast<std::size_t>(q.num_vertices))
    throw DimensionError("vector " + a.to_string() + " does not match a quiver with " +
                         std::to_string(q.num_vertices) + " vertices");
}
}  // namespace

std::int64_t euler_form(const Quiver& q, const DimVec& a, const DimVec& b) {
  check_shape(q, a);
  check_shape(q, b);
  std::int64_t s = 0;
  for (int i = 0; i < q.num_vertices; ++i) s += a[i] * b[i];
  for (const auto& ar : q.arrows) s -= static_cast<std::int64_t>(ar.count) * a[ar.source] * b[ar.target];
  return s;
}

std::int64_t symmetrized(const Quiver& q, const DimVec& a, const DimVec& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVec reflect_simple(const Quiver& q, int v, const DimVec& a) {
  check_shape(q, a);
  if (v < 0 || v >= q.num_vertices) throw DomainError("no vertex " + std::to_string(v));
  DimVec e = DimVec::unit(a.size(), v);
  return a - symmetrized(q, a, e) * e;
}

bool has_connected_support(const Quiver& q, const DimVec& a) {
  check_shape(q, a);
  std::vector<int> support;
  for (int i = 0; i < q.num_vertices; ++i)
    if (a[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  std::vector<bool> seen(q.num_vertices, false);
  std::vector<int> stack{support.front()};
  seen[support.front()] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& ar : q.arrows) {
      int w = ar.source == v ? ar.target : ar.target == v ? ar.source : -1;
      if (w >= 0 && a[w] != 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (int v : support)
    if (!seen[v]) return false;
  return true;
}

// Reflect at the lowest vertex with (a, e_v) > 0 until a becomes simple (real),
// leaves the positive cone (no root), or lands in the fundamental set.
RootClass classify_root(const Quiver& q, const DimVec& a) {
  check_shape(q, a);
  if (!a.is_nonnegative()) throw DomainError("classify_root needs a non-negative vector");
  if (a.is_zero()) throw DomainError("zero vector is not a root candidate");
  DimVec x = a;
  for (;;) {
    if (x.sum() == 1) return RootClass::RealRoot;
    int pick = -1;
    for (int v = 0; v < q.num_vertices; ++v) {
      if (symmetrized(q, x, DimVec::unit(x.size(), v)) > 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0)
      return has_connected_support(q, x) ? RootClass::ImaginaryRoot : RootClass::NotARoot;
    x = reflect_simple(q, pick, x);
    if (!x.is_nonnegative() || x.is_zero()) return RootClass::NotARoot;
  }
}

}  // namespace nonschur
