#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "ospbw/partition.hpp"
#include "ospbw/perm.hpp"

namespace ospbw {

/// Labelled edge {i, j, label} with 1 <= i <= j (i == j is a loop).
struct Edge {
  int i, j, label;
  bool operator==(const Edge& o) const {
    return i == o.i && j == o.j && label == o.label;
  }
  bool operator<(const Edge& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return label < o.label;
  }
};

/// N-edge-labelled e-valent pseudograph on vertices {1..p}; loops count
/// twice towards the valence. Edges are stored sorted (canonical form).
class Pseudograph {
 public:
  Pseudograph(int vertices, int valence, std::vector<Edge> edges)
      : p_(vertices), e_(valence), edges_(std::move(edges)) {
    for (auto& ed : edges_) {
      if (ed.i > ed.j) std::swap(ed.i, ed.j);
      if (ed.i < 1 || ed.j > p_ || ed.label < 0)
        throw std::invalid_argument("Pseudograph: bad edge");
    }
    std::sort(edges_.begin(), edges_.end());
    std::vector<int> deg(p_ + 1, 0);
    for (const auto& ed : edges_) {
      deg[ed.i] += 1;
      deg[ed.j] += 1;  // loops hit both increments: counted twice
    }
    for (int v = 1; v <= p_; ++v)
      if (deg[v] != e_)
        throw std::invalid_argument("Pseudograph: valence violated");
  }

  static Pseudograph empty(int valence = 0) {
    return Pseudograph(0, valence, {});
  }

  int vertices() const { return p_; }
  int valence() const { return e_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// |gamma|: total of all edge labels.
  int size() const {
    int s = 0;
    for (const auto& ed : edges_) s += ed.label;
    return s;
  }

  int multiplicity(const Edge& ed) const {
    int m = 0;
    for (const auto& f : edges_) m += (f == ed);
    return m;
  }

  /// Membership in Gamma_{p,e}: all loop labels odd.
  bool in_Gamma() const {
    for (const auto& ed : edges_)
      if (ed.i == ed.j && ed.label % 2 == 0) return false;
    return true;
  }

  /// Vertex relabelling by a permutation of {1..p}, re-canonicalized.
  Pseudograph relabelled(const Perm& sigma) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& ed : edges_)
      es.push_back({sigma[ed.i - 1], sigma[ed.j - 1], ed.label});
    return Pseudograph(p_, e_, std::move(es));
  }

  /// gamma^t (p = 2): the two vertices interchanged.
  Pseudograph transpose() const {
    if (p_ != 2) throw std::invalid_argument("transpose: needs p = 2");
    return relabelled(Perm{2, 1});
  }

  /// sgn gamma (p = 2): product of (-1)^label over the (1,2)-edges.
  int sgn() const {
    if (p_ != 2) throw std::invalid_argument("sgn: needs p = 2");
    int s = 1;
    for (const auto& ed : edges_)
      if (ed.i == 1 && ed.j == 2 && ed.label % 2) s = -s;
    return s;
  }

  bool operator==(const Pseudograph& o) const {
    return p_ == o.p_ && e_ == o.e_ && edges_ == o.edges_;
  }
  bool operator!=(const Pseudograph& o) const { return !(*this == o); }
  bool operator<(const Pseudograph& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (e_ != o.e_) return e_ < o.e_;
    return edges_ < o.edges_;
  }

 private:
  int p_;
  int e_;
  std::vector<Edge> edges_;
};

/// All e-valent pseudographs on p vertices with total label exactly `total`.
/// Set odd_loops_only to restrict to Gamma_{p,e}.
inline std::vector<Pseudograph> all_pseudographs(int p, int e, int total,
                                                 bool odd_loops_only = false) {
  // Enumerate the unlabelled multigraph first: loop counts l_v and edge
  // multiplicities m_{uv} (u < v) with sum_{v != u} m_uv + 2 l_u = e.
  std::vector<std::pair<int, int>> slots;  // (u,v) with u <= v
  for (int u = 1; u <= p; ++u)
    for (int v = u; v <= p; ++v) slots.emplace_back(u, v);
  std::vector<int> mult(slots.size(), 0);
  std::vector<int> deg(p + 1, 0);
  std::vector<Pseudograph> out;

  // Assign labels to the chosen multigraph: per slot a weakly increasing
  // label list (canonical within parallel edges), overall total fixed.
  std::vector<Edge> edges;
  auto label_rec = [&](auto&& self, size_t s, int idx_in_slot, int minlabel,
                       int rem) -> void {
    while (s < slots.size() && mult[s] == 0) ++s, idx_in_slot = 0, minlabel = 0;
    if (s == slots.size()) {
      if (rem == 0) out.emplace_back(p, e, edges);
      return;
    }
    auto [u, v] = slots[s];
    bool loop = (u == v);
    for (int lab = minlabel; lab <= rem; ++lab) {
      if (odd_loops_only && loop && lab % 2 == 0) continue;
      edges.push_back({u, v, lab});
      if (idx_in_slot + 1 == mult[s])
        self(self, s + 1, 0, 0, rem - lab);
      else
        self(self, s, idx_in_slot + 1, lab, rem - lab);
      edges.pop_back();
    }
  };

  auto struct_rec = [&](auto&& self, size_t s) -> void {
    if (s == slots.size()) {
      for (int v = 1; v <= p; ++v)
        if (deg[v] != e) return;
      label_rec(label_rec, 0, 0, 0, total);
      return;
    }
    auto [u, v] = slots[s];
    int du = (u == v) ? 2 : 1;
    int maxm = (u == v) ? (e - deg[u]) / 2 : std::min(e - deg[u], e - deg[v]);
    for (int m = 0; m <= maxm; ++m) {
      mult[s] = m;
      deg[u] += du * m;
      if (u != v) deg[v] += m;
      self(self, s + 1);
      deg[u] -= du * m;
      if (u != v) deg[v] -= m;
    }
    mult[s] = 0;
  };
  struct_rec(struct_rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ospbw
