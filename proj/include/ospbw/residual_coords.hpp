#pragma once

#include <optional>

#include "ospbw/jacobi.hpp"

namespace ospbw {

/// Exact coordinates for omega residuals that avoid expanding the big
/// projectors. A residual is the signed group sum, over the source wreath
/// group (S_e per block, alternating; S_3 on blocks, sign rho) and the
/// target pair group (pair flips, sign -1; pair permutations, sign +1,
/// acting on the first d-1 lower pairs), of a small raw morphism: the bent
/// surgery diagram composed with one cyclic-shift term per summand. Two raw
/// diagrams contribute to the same coordinate iff they are related by a
/// group element, with the connecting character as relative sign; orbits
/// whose stabilizer contains a sign -1 element die. Signed orbit sums over
/// distinct orbits have disjoint support, so these coordinates are faithful.

namespace detail {

/// Shape of a signed relabeling group acting on arc diagrams: nblocks upper
/// blocks of e points, permuted by S_nblocks (sign rho per transposition)
/// when permute_blocks is set and alternating within each block; npairs
/// lower pairs with flips (sign -1) and pair permutations (sign +1); ntail
/// trailing lower points left fixed.
struct GroupShape {
  int nblocks, e, npairs, ntail;
  bool permute_blocks;
  int rho;
};

/// All characters chi(g) realized by group elements g with g . a = b.
inline std::pair<bool, bool> connecting_signs(const ArcDiagram& a,
                                              const ArcDiagram& b,
                                              const GroupShape& sh) {
  bool plus = false, minus = false;
  const int e = sh.e, rho = sh.rho, nb = sh.nblocks;
  const int up = nb * e, npairs = sh.npairs;
  if (a.upper() != up || b.upper() != up || a.lower() != b.lower() ||
      a.lower() != 2 * npairs + sh.ntail)
    throw ShapeError("connecting_signs: shape mismatch");
  const int n = up + a.lower();
  // partner maps
  std::vector<int> pa(n + 1), pb(n + 1);
  for (auto& [x, y] : a.arcs()) pa[x] = y, pa[y] = x;
  for (auto& [x, y] : b.arcs()) pb[x] = y, pb[y] = x;

  std::vector<int> blk(nb + 1);       // image block of each source block
  std::vector<int> pt(n + 1, 0);      // point map a -> b, 0 = unassigned
  std::vector<char> used(n + 1, 0);   // used points of b
  // tail points are fixed
  for (int i = up + 2 * npairs + 1; i <= n; ++i) pt[i] = i, used[i] = 1;

  // consistency of one assignment p -> q with arcs whose other end is set
  auto compatible = [&](int p, int q) {
    int pp = pa[p];
    if (pt[pp]) return pb[q] == pt[pp];
    // partner unassigned, so q's partner must still be free
    return !used[pb[q]];
  };

  auto sign_of_map = [&]() {
    int s = 1;
    // per-block permutation parities
    for (int b0 = 0; b0 < nb; ++b0) {
      std::vector<int> perm(e);
      for (int i = 0; i < e; ++i)
        perm[i] = pt[b0 * e + i + 1] - (blk[b0] - 1) * e;
      for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
          if (perm[i] > perm[j]) s = -s;
    }
    // block permutation sign, weighted by rho
    {
      int inv = 0;
      for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
          if (blk[i] > blk[j]) ++inv;
      if (inv % 2 && rho < 0) s = -s;
    }
    // pair flips
    for (int r = 1; r <= npairs; ++r) {
      int p = up + 2 * r - 1;
      int q = pt[p];
      if ((q - up) % 2 == 0) s = -s;  // odd point mapped to even slot
    }
    return s;
  };

  // backtracking over upper points block by block, then lower pairs
  auto rec_pairs = [&](auto&& self, int r) -> void {
    if (plus && minus) return;
    if (r > npairs) {
      // full map built; verify all arcs
      for (auto& [x, y] : a.arcs())
        if (pb[pt[x]] != pt[y]) return;
      int s = sign_of_map();
      (s > 0 ? plus : minus) = true;
      return;
    }
    int p = up + 2 * r - 1;
    if (pt[p]) { self(self, r + 1); return; }
    for (int r2 = 1; r2 <= npairs; ++r2) {
      int q0 = up + 2 * r2 - 1;
      if (used[q0]) continue;
      for (int fl = 0; fl < 2; ++fl) {
        int q = fl ? q0 + 1 : q0;
        if (!compatible(p, q) || !compatible(p + 1, q0 + 1 - (q - q0)))
          continue;
        pt[p] = q;
        pt[p + 1] = q0 + 1 - (q - q0);
        used[q0] = used[q0 + 1] = 1;
        self(self, r + 1);
        pt[p] = pt[p + 1] = 0;
        used[q0] = used[q0 + 1] = 0;
      }
    }
  };

  auto rec_upper = [&](auto&& self, int i) -> void {
    if (plus && minus) return;
    if (i > up) {
      rec_pairs(rec_pairs, 1);
      return;
    }
    int b0 = (i - 1) / e;
    for (int j = 0; j < e; ++j) {
      int q = (blk[b0] - 1) * e + j + 1;
      if (used[q] || !compatible(i, q)) continue;
      pt[i] = q;
      used[q] = 1;
      self(self, i + 1);
      pt[i] = 0;
      used[q] = 0;
    }
  };

  std::vector<int> order(nb);
  for (int i = 0; i < nb; ++i) order[i] = i + 1;
  do {
    for (int b0 = 0; b0 < nb; ++b0) blk[b0] = order[b0];
    rec_upper(rec_upper, 1);
    if (plus && minus) break;
    if (!sh.permute_blocks) break;
  } while (std::next_permutation(order.begin(), order.end()));
  return {plus, minus};
}

}  // namespace detail

/// Registry of orbit representatives for one (e, d, rho) shape; coordinates
/// of residuals are indexed by (orbit id, power of t).
class OrbitRegistry {
 public:
  OrbitRegistry(int e, int d, int rho)
      : shape_{3, e, d - 1, e, /*permute_blocks=*/true, rho} {}

  /// Locate the orbit of a diagram: returns (orbit id, relative sign), or
  /// nullopt when the orbit is killed by a sign -1 stabilizer element.
  std::optional<std::pair<int, int>> locate(const ArcDiagram& x) {
    auto [selfp, selfm] = detail::connecting_signs(x, x, shape_);
    if (selfm) return std::nullopt;  // chi nontrivial on the stabilizer
    for (int i = 0; i < static_cast<int>(reps_.size()); ++i) {
      auto [p, m] = detail::connecting_signs(x, reps_[i], shape_);
      if (p || m) return std::make_pair(i, p ? 1 : -1);
    }
    reps_.push_back(x);
    return std::make_pair(static_cast<int>(reps_.size()) - 1, 1);
  }

  const std::vector<ArcDiagram>& reps() const { return reps_; }

 private:
  detail::GroupShape shape_;
  std::vector<ArcDiagram> reps_;
};

/// Whether the fully symmetrized basis element x^rho(gamma, lambda) is
/// nonzero, decided by a stabilizer sign search instead of expanding the
/// orbit. For gamma != gamma^t the transpose summand lives in a different
/// orbit, so only the gamma = gamma^t compatibility (sgn = rho) and the
/// stabilizer character of x(gamma, lambda) under G_{2,e,d} matter.
inline bool sym_basis_nonzero(const Pseudograph& g, const Partition& lam,
                              int rho) {
  if (g == g.transpose() && g.sgn() != rho) return false;
  ArcDiagram x = build_x(g, lam);
  const int d = g.size() + lam.sum();
  detail::GroupShape sh{2, g.valence(), d, 0, /*permute_blocks=*/false, 1};
  auto [p, m] = detail::connecting_signs(x, x, sh);
  (void)p;
  return !m;
}

/// Sparse residual coordinates over (orbit id, t-power).
using ResidualCoords = std::map<std::pair<int, int>, Rational>;

/// Raw (pre-symmetrization) morphism of one surgery term: the bent diagram
/// composed with id x cyc. Closed loops produced by the composition keep
/// their t factors in the coefficients.
inline Morphism raw_y_terms(const Pseudograph& g4, const Partition& lam,
                            int d) {
  const int e = g4.valence();
  Morphism bent{bend_fourth_block(build_x4(g4, lam), e)};
  return compose(bent, tensor(Morphism::identity(2 * (d - 1)), cyc(e)));
}

/// Coordinates of the expanded residual of an OmegaResult. Exactly zero iff
/// expand_omega(r) is the zero Morphism, at a fraction of the cost.
inline ResidualCoords residual_coords(const OmegaResult& r,
                                      OrbitRegistry& reg) {
  ResidualCoords out;
  for (const auto& [key, c] : r.terms()) {
    Morphism raw = raw_y_terms(key.first, key.second, r.degree());
    for (const auto& [diag, poly] : raw.terms()) {
      auto loc = reg.locate(diag);
      if (!loc) continue;
      auto [id, s] = *loc;
      for (int i = 0; i <= poly.degree(); ++i) {
        if (poly.coeff(i) == 0) continue;
        Rational v = c * poly.coeff(i) * Rational(s);
        auto it = out.find({id, i});
        if (it == out.end())
          out.emplace(std::make_pair(id, i), v);
        else {
          it->second += v;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

}  // namespace ospbw
