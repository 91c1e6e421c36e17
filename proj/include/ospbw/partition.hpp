#pragma once

#include <stdexcept>
#include <vector>

namespace ospbw {

/// Partition: weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must weakly decrease");
    }
  }

  static Partition empty() { return Partition{}; }

  const std::vector<int>& parts() const { return parts_; }
  int count() const { return static_cast<int>(parts_.size()); }  // #lambda
  int sum() const {                                              // |lambda|
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int multiplicity(int l) const {
    int m = 0;
    for (int p : parts_) m += (p == l);
    return m;
  }
  bool all_even() const {
    for (int p : parts_)
      if (p % 2) return false;
    return true;
  }
  bool all_odd() const {
    for (int p : parts_)
      if (p % 2 == 0) return false;
    return true;
  }

  /// Remove one part equal to l.
  Partition without_part(int l) const {
    std::vector<int> ps;
    bool removed = false;
    for (int p : parts_) {
      if (!removed && p == l) {
        removed = true;
        continue;
      }
      ps.push_back(p);
    }
    if (!removed) throw std::invalid_argument("Partition: no such part");
    return Partition(std::move(ps));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n, lexicographically descending part lists.
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Partitions of n with even parts only (the set P^+ in degree n).
inline std::vector<Partition> even_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& p : all_partitions(n))
    if (p.all_even()) out.push_back(p);
  return out;
}

}  // namespace ospbw
