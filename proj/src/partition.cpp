#include "nonschur/partition.hpp"

#include "nonschur/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nonschur {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive: " + to_string());
    if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition must be weakly decreasing: " + to_string());
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw DomainError("negative part");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative rectangle");
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<int>(rows, cols));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (*this)[0] <= cols;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw DomainError("dominance needs equal sizes: " + lambda.to_string() + " vs " + mu.to_string());
  int a = 0, b = 0;
  const std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(v));
}

Partition scaled_union(int k, const Partition& mu) {
  if (k < 0) throw DomainError("negative multiplicity");
  std::vector<int> v;
  for (int p : mu.parts())
    for (int i = 0; i < k; ++i) v.push_back(p);
  return Partition(std::move(v));
}

std::vector<Partition> partitions_of(int n, int max_part, int max_length) {
  if (n < 0) throw DomainError("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

}  // namespace nonschur
