#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ospbw/perm.hpp"

namespace ospbw {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Perfect matching on k upper and l lower points. Points are encoded as
/// 1..k (upper, left to right) and k+1..k+l (lower, left to right).
/// Arcs are stored canonically: each pair ascending, pairs sorted.
class ArcDiagram {
 public:
  ArcDiagram(int upper, int lower, std::vector<std::pair<int, int>> arcs)
      : upper_(upper), lower_(lower), arcs_(std::move(arcs)) {
    const int n = upper_ + lower_;
    if (upper_ < 0 || lower_ < 0 || n % 2 != 0)
      throw ShapeError("ArcDiagram: k+l must be even and non-negative");
    for (auto& a : arcs_)
      if (a.first > a.second) std::swap(a.first, a.second);
    std::sort(arcs_.begin(), arcs_.end());
    if (static_cast<int>(arcs_.size()) != n / 2)
      throw ShapeError("ArcDiagram: wrong number of arcs");
    std::vector<char> seen(n, 0);
    for (const auto& [a, b] : arcs_) {
      if (a < 1 || b > n || a == b) throw ShapeError("ArcDiagram: bad point");
      if (seen[a - 1] || seen[b - 1])
        throw ShapeError("ArcDiagram: not a perfect matching");
      seen[a - 1] = seen[b - 1] = 1;
    }
  }

  static ArcDiagram identity(int n) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(n);
    for (int i = 1; i <= n; ++i) arcs.emplace_back(i, n + i);
    return ArcDiagram(n, n, std::move(arcs));
  }

  /// 0 -> 0 diagram (tensor unit endomorphism).
  static ArcDiagram empty() { return ArcDiagram(0, 0, {}); }

  /// cup: 2 -> 0 (one arc joining the two upper points)
  static ArcDiagram cup() { return ArcDiagram(2, 0, {{1, 2}}); }
  /// cap: 0 -> 2
  static ArcDiagram cap() { return ArcDiagram(0, 2, {{1, 2}}); }
  /// braiding on V x V: 2 -> 2 crossing
  static ArcDiagram cross() { return ArcDiagram(2, 2, {{1, 4}, {2, 3}}); }

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  /// Partner of point p in the matching.
  int partner(int p) const {
    for (const auto& [a, b] : arcs_) {
      if (a == p) return b;
      if (b == p) return a;
    }
    throw ShapeError("ArcDiagram::partner: point out of range");
  }

  /// Relabel all points via a permutation of {1..k+l} that preserves the
  /// upper/lower split.
  ArcDiagram relabelled(const Perm& point_perm) const {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(arcs_.size());
    for (const auto& [a, b] : arcs_)
      arcs.emplace_back(point_perm[a - 1], point_perm[b - 1]);
    return ArcDiagram(upper_, lower_, std::move(arcs));
  }

  bool operator==(const ArcDiagram& o) const {
    return upper_ == o.upper_ && lower_ == o.lower_ && arcs_ == o.arcs_;
  }
  bool operator!=(const ArcDiagram& o) const { return !(*this == o); }
  bool operator<(const ArcDiagram& o) const {
    if (upper_ != o.upper_) return upper_ < o.upper_;
    if (lower_ != o.lower_) return lower_ < o.lower_;
    return arcs_ < o.arcs_;
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(upper_) * 1000003u + lower_;
    for (const auto& [a, b] : arcs_) {
      h = h * 1000003u + a;
      h = h * 1000003u + b;
    }
    return h;
  }

 private:
  int upper_;
  int lower_;
  std::vector<std::pair<int, int>> arcs_;
};

struct ArcDiagramHash {
  size_t operator()(const ArcDiagram& d) const { return d.hash(); }
};

}  // namespace ospbw
