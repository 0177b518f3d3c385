#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nonschur {

// Element of the root lattice Z^{Q_0}. Dimension vectors are the
// non-negative ones; reflections may leave that cone.
class DimVec {
 public:
  DimVec() = default;
  DimVec(std::initializer_list<std::int64_t> v) : v_(v) {}
  explicit DimVec(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  static DimVec zero(std::size_t n) { return DimVec(std::vector<std::int64_t>(n, 0)); }
  static DimVec unit(std::size_t n, std::size_t i);

  std::size_t size() const { return v_.size(); }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  const std::vector<std::int64_t>& values() const { return v_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  std::int64_t sum() const;
  std::string to_string() const;

  DimVec operator+(const DimVec& o) const;
  DimVec operator-(const DimVec& o) const;
  friend DimVec operator*(std::int64_t k, const DimVec& v);

  auto operator<=>(const DimVec&) const = default;

 private:
  std::vector<std::int64_t> v_;
};

struct ArrowBundle {
  int source;
  int target;
  int count;
  bool operator==(const ArrowBundle&) const = default;
};

// Acyclic quiver given by bundles of parallel arrows.
struct Quiver {
  int num_vertices = 0;
  std::vector<ArrowBundle> arrows;

  int total_arrows() const;
  bool operator==(const Quiver&) const = default;
};

// Q(m12, m13, m23): m12 arrows q2->q1, m13 arrows q3->q1, m23 arrows q3->q2.
// Vertex i of the underlying Quiver is q_{i+1}.
class QuiverThree {
 public:
  QuiverThree(int m12, int m13, int m23);
  int m12() const { return m12_; }
  int m13() const { return m13_; }
  int m23() const { return m23_; }
  const Quiver& quiver() const { return q_; }
  std::string to_string() const;
  bool operator==(const QuiverThree& o) const { return q_ == o.q_; }

 private:
  int m12_, m13_, m23_;
  Quiver q_;
};

// K(n): n arrows from the source q0 to the sink q1. Vectors are (source, sink).
class GenKronecker {
 public:
  explicit GenKronecker(int n);
  int n() const { return n_; }
  const Quiver& quiver() const { return q_; }

 private:
  int n_;
  Quiver q_;
};

enum class RootClass { RealRoot, ImaginaryRoot, NotARoot };
std::string to_string(RootClass c);

std::int64_t euler_form(const Quiver& q, const DimVec& a, const DimVec& b);
std::int64_t symmetrized(const Quiver& q, const DimVec& a, const DimVec& b);
DimVec reflect_simple(const Quiver& q, int v, const DimVec& a);
bool has_connected_support(const Quiver& q, const DimVec& a);
RootClass classify_root(const Quiver& q, const DimVec& a);

}  // namespace nonschur
