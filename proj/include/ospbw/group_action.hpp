#pragma once

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "ospbw/arc_diagram.hpp"
#include "ospbw/perm.hpp"
#include "ospbw/rational.hpp"

namespace ospbw {

/// Element of G_{p,e,d} = S_e^p x (S_2 wr S_d): per-block permutations of the
/// upper points, pair flips and a pair permutation of the lower points.
struct GroupElement {
  std::vector<Perm> theta;  // p permutations of {1..e}
  std::vector<char> tau;    // d flip bits
  Perm sigma;               // permutation of {1..d}

  static GroupElement identity(int p, int e, int d) {
    GroupElement g;
    g.theta.assign(p, perm_identity(e));
    g.tau.assign(d, 0);
    g.sigma = perm_identity(d);
    return g;
  }

  int chi() const {
    int s = 1;
    for (const auto& t : theta) s *= perm_sign(t);
    for (char b : tau)
      if (b) s = -s;
    return s;
  }

  /// Point permutation on pe upper + 2d lower points. Lower pair r goes to
  /// pair sigma(r), flipped when tau_r is set.
  Perm point_perm() const {
    const int p = static_cast<int>(theta.size());
    const int e = p ? static_cast<int>(theta[0].size()) : 0;
    const int d = static_cast<int>(tau.size());
    Perm pt(p * e + 2 * d);
    for (int b = 0; b < p; ++b)
      for (int s = 1; s <= e; ++s) pt[b * e + s - 1] = b * e + theta[b][s - 1];
    for (int r = 1; r <= d; ++r)
      for (int s = 0; s < 2; ++s) {
        int dst = 2 * (sigma[r - 1] - 1) + (tau[r - 1] ? 1 - s : s);
        pt[p * e + 2 * (r - 1) + s] = p * e + dst + 1;
      }
    return pt;
  }
};

inline ArcDiagram act(const GroupElement& g, const ArcDiagram& x) {
  return x.relabelled(g.point_perm());
}

/// Visit every element of G_{p,e,d} (use only at desk scale).
template <typename F>
void for_each_group_element(int p, int e, int d, F&& f) {
  GroupElement g = GroupElement::identity(p, e, d);
  auto theta_rec = [&](auto&& self, int b) -> void {
    if (b == p) {
      for_each_perm(d, [&](const Perm& s) {
        g.sigma = s;
        for (int mask = 0; mask < (1 << d); ++mask) {
          for (int r = 0; r < d; ++r) g.tau[r] = (mask >> r) & 1;
          f(g);
        }
      });
      return;
    }
    for_each_perm(e, [&](const Perm& t) {
      g.theta[b] = t;
      self(self, b + 1);
    });
  };
  theta_rec(theta_rec, 0);
}

inline long long group_order(int p, int e, int d) {
  long long o = 1;
  for (int b = 0; b < p; ++b) o *= factorial(e).convert_to<long long>();
  for (int r = 0; r < d; ++r) o *= 2;
  o *= factorial(d).convert_to<long long>();
  return o;
}

/// Arc sequence datum: multiset of (i,j,k), where i,j are the upper blocks at
/// the two ends of a maximal chain of pairwise-adjacent arcs (0,0 for closed
/// chains) and 2k is the number of lower points the chain passes through.
using ArcSequenceDatum = std::multiset<std::tuple<int, int, int>>;

inline ArcSequenceDatum asd(const ArcDiagram& x, int p, int e, int d) {
  if (x.upper() != p * e || x.lower() != 2 * d)
    throw ShapeError("asd: shape mismatch");
  const int K = p * e;
  const auto& arcs = x.arcs();
  const int A = static_cast<int>(arcs.size());
  // arc index at every point (1-based points)
  std::vector<int> arc_at(K + 2 * d + 1, -1);
  for (int a = 0; a < A; ++a) {
    arc_at[arcs[a].first] = a;
    arc_at[arcs[a].second] = a;
  }
  // adjacency between arcs through lower pairs (2r-1, 2r)
  std::vector<std::vector<int>> adj(A);
  for (int r = 1; r <= d; ++r) {
    int a = arc_at[K + 2 * r - 1], b = arc_at[K + 2 * r];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  ArcSequenceDatum out;
  std::vector<char> seen(A, 0);
  for (int a0 = 0; a0 < A; ++a0) {
    if (seen[a0]) continue;
    // walk the component of arc a0
    std::vector<int> comp;
    std::vector<int> stack{a0};
    seen[a0] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      comp.push_back(a);
      for (int b : adj[a])
        if (!seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
    int lower_pts = 0;
    std::vector<int> upper_blocks;
    for (int a : comp)
      for (int pt : {arcs[a].first, arcs[a].second}) {
        if (pt > K)
          ++lower_pts;
        else
          upper_blocks.push_back((pt - 1) / e + 1);
      }
    int i = 0, j = 0;
    if (!upper_blocks.empty()) {
      if (upper_blocks.size() != 2) throw ShapeError("asd: malformed chain");
      i = std::min(upper_blocks[0], upper_blocks[1]);
      j = std::max(upper_blocks[0], upper_blocks[1]);
    }
    out.insert({i, j, lower_pts / 2});
  }
  return out;
}

/// Brute-force orbit of x under G_{p,e,d}.
inline std::set<ArcDiagram> orbit(const ArcDiagram& x, int p, int e, int d) {
  std::set<ArcDiagram> out;
  for_each_group_element(p, e, d,
                         [&](const GroupElement& g) { out.insert(act(g, x)); });
  return out;
}

/// Brute-force stabilizer order of x under G_{p,e,d}.
inline long long brute_stabilizer_order(const ArcDiagram& x, int p, int e,
                                        int d) {
  long long c = 0;
  for_each_group_element(p, e, d, [&](const GroupElement& g) {
    if (act(g, x) == x) ++c;
  });
  return c;
}

}  // namespace ospbw
