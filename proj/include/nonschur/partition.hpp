#pragma once

#include <compare>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace nonschur {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  // Sorts and drops zeros; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> parts);
  // Rectangle with `rows` rows of length `cols`.
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // Zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Dominance order; both partitions must have the same size.
bool dominates(const Partition& lambda, const Partition& mu);

Partition union_of(const Partition& a, const Partition& b);
// k copies of every part of mu.
Partition scaled_union(int k, const Partition& mu);

std::vector<Partition> partitions_of(int n, int max_part = std::numeric_limits<int>::max(),
                                     int max_length = std::numeric_limits<int>::max());

}  // namespace nonschur
