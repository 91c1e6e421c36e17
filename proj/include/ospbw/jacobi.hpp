#pragma once

#include <map>

#include "ospbw/basis.hpp"

namespace ospbw {

/// The pseudograph surgeries gamma^(i,k), gamma^(i,-k) (split edge i of gamma
/// towards two new vertices 3,4) and gamma^(l) (attach an opened closed chain
/// between 3 and 4). All live in Gamma_{4,e}; e-1 extra (3,4)-edges of label 0
/// bring vertices 3,4 up to full valence.

/// gamma^(i, k) for k > 0, gamma^(i, -|k|) for k < 0; i is 1-based into the
/// canonical edge list.
inline Pseudograph graph_modify_edge(const Pseudograph& g, int i, int k) {
  if (g.vertices() != 2) throw std::invalid_argument("graph_modify: p != 2");
  const int e = g.valence();
  if (i < 1 || i > g.edge_count())
    throw std::invalid_argument("graph_modify: bad edge index");
  const Edge& ed = g.edges()[i - 1];
  int m = k > 0 ? k : -k;
  if (m < 1 || m > ed.label)
    throw std::invalid_argument("graph_modify: k out of range");
  std::vector<Edge> es;
  for (int j = 0; j < g.edge_count(); ++j)
    if (j != i - 1) es.push_back(g.edges()[j]);
  if (k > 0) {
    es.push_back({ed.i, 4, m - 1});
    es.push_back({ed.j, 3, ed.label - m});
  } else {
    es.push_back({ed.i, 3, m - 1});
    es.push_back({ed.j, 4, ed.label - m});
  }
  for (int j = 1; j < e; ++j) es.push_back({3, 4, 0});
  return Pseudograph(4, e, std::move(es));
}

/// gamma^(l): append an edge (3,4,l-1) to gamma.
inline Pseudograph graph_modify_part(const Pseudograph& g, int l) {
  if (g.vertices() != 2) throw std::invalid_argument("graph_modify: p != 2");
  if (l < 1) throw std::invalid_argument("graph_modify: l < 1");
  const int e = g.valence();
  std::vector<Edge> es = g.edges();
  es.push_back({3, 4, l - 1});
  for (int j = 1; j < e; ++j) es.push_back({3, 4, 0});
  return Pseudograph(4, e, std::move(es));
}

/// Linear combination of y_d(gamma', lambda) terms, gamma' in Gamma_{4,e}.
/// Terms are kept on the raw graphs: distinct graphs do not give linearly
/// independent y_d morphisms (the S_3 relabelling of vertices 1-3 relates
/// them only up to lower-point rearrangements that the cyc factor does not
/// absorb with a uniform sign), so no graph-level reduction is sound here;
/// zero-testing goes through expand_omega.
class OmegaResult {
 public:
  using Key = std::pair<Pseudograph, Partition>;

  OmegaResult(int e, int rho, int d) : e_(e), rho_(rho), d_(d) {}

  int e() const { return e_; }
  int rho() const { return rho_; }
  int degree() const { return d_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Pseudograph& g, const Partition& lam, Rational c) {
    if (c == 0) return;
    if (g.size() + lam.sum() != d_ - 1)
      throw std::invalid_argument("OmegaResult: degree mismatch");
    auto key = Key{g, lam};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  OmegaResult& operator+=(const OmegaResult& o) {
    if (o.e_ != e_ || o.rho_ != rho_ || o.d_ != d_)
      throw std::invalid_argument("OmegaResult: shape mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  OmegaResult& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  Rational coefficient(const Pseudograph& g, const Partition& lam) const {
    auto it = terms_.find(Key{g, lam});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const OmegaResult& o) const {
    return e_ == o.e_ && rho_ == o.rho_ && d_ == o.d_ && terms_ == o.terms_;
  }

 private:
  int e_;
  int rho_;
  int d_;
  std::map<Key, Rational> terms_;
};

/// omega of x(gamma, lambda) via the pseudograph formula: surgery terms from
/// every non-loop edge of gamma and of gamma^t, loop terms 2 (-1)^m from
/// every loop of gamma, plus opened-chain terms from every part of lambda.
/// The loop terms do not cancel in pairs in our fixed layout: the C^+ image
/// of a loop differs from the canonically built modification diagram by a
/// transposition of the two slots at the loop vertex, while the C^- image
/// matches it on the nose; the mismatch leaves 2 sum_m (-1)^m y(gamma^(i,m)).
inline OmegaResult omega_graphical(const Pseudograph& g, const Partition& lam,
                                   int rho) {
  const int e = g.valence();
  const int d = g.size() + lam.sum();
  if (d < 1) throw std::invalid_argument("omega_graphical: d must be >= 1");
  OmegaResult r(e, rho, d);
  Pseudograph gt = g.transpose();
  int sg = g.sgn();
  for (int i = 1; i <= g.edge_count(); ++i) {
    const Edge& ed = g.edges()[i - 1];
    for (int m = 1; m <= ed.label; ++m) {
      if (ed.i == ed.j) {
        Rational c(m % 2 == 0 ? 2 : -2);
        r.add_term(graph_modify_edge(g, i, m), lam, c);
      } else {
        Rational c((ed.label + m) % 2 == 0 ? 1 : -1);
        r.add_term(graph_modify_edge(g, i, m), lam, c);
      }
    }
  }
  for (int i = 1; i <= gt.edge_count(); ++i) {
    const Edge& ed = gt.edges()[i - 1];
    if (ed.i == ed.j) continue;  // loops enter through gamma only
    for (int m = 1; m <= ed.label; ++m) {
      Rational c((ed.label + m) % 2 == 0 ? 1 : -1);
      r.add_term(graph_modify_edge(gt, i, m), lam, c * rho * sg);
    }
  }
  for (int j = 0; j < lam.count(); ++j) {
    int lj = lam.parts()[j];
    r.add_term(graph_modify_part(g, lj), lam.without_part(lj),
               Rational(2 * lj));
  }
  return r;
}

/// C^r_{k,d}: append e strands, rotate the k-th lower pair to the end, for
/// r = -1 swap its two points, then connect the last old point with the first
/// new one by a cup.
inline Morphism c_operator(const Morphism& x, int k, int d, int r, int e) {
  if (x.lower() != 2 * d) throw ShapeError("c_operator: lower != 2d");
  if (k < 1 || k > d) throw ShapeError("c_operator: k out of range");
  Morphism m = tensor(x, Morphism::identity(e));
  // rotate pair k to position d (contents of pair r move to pair sigma(r))
  std::vector<int> cyc_list;
  for (int i = d; i >= k; --i) cyc_list.push_back(i);
  Perm sigma = perm_cycle(d, cyc_list);
  Morphism rot{tensor(block_permutation(sigma, 2), ArcDiagram::identity(e))};
  m = compose(m, rot);
  if (r < 0) {
    Morphism swp{
        permutation_diagram(perm_transposition(2 * d + e, 2 * d - 1, 2 * d))};
    m = compose(m, swp);
  }
  // cup layer |^{2d-1} U |^{e-1}
  const int n = 2 * d + e;
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= 2 * d - 1; ++i) arcs.emplace_back(i, n + i);
  arcs.emplace_back(2 * d, 2 * d + 1);
  for (int i = 2 * d + 2; i <= n; ++i) arcs.emplace_back(i, n + i - 2);
  return compose(m, Morphism{ArcDiagram(n, n - 2, std::move(arcs))});
}

/// Source-side projector onto S^{3 rho}(Lambda^e V): alt on each of the three
/// blocks, then the rho-signed block symmetrizer.
inline Morphism s3rho_projector(int e, int rho) {
  return compose(alt_blocks(3, e), symmetrizer(3, rho, e));
}

/// Dualize the fourth upper block: its points become the trailing e lower
/// points, in order.
inline ArcDiagram bend_fourth_block(const ArcDiagram& x, int e) {
  const int K = x.upper();
  if (K % 4 != 0 || K / 4 != e) throw ShapeError("bend: upper != 4e");
  const int up = 3 * e, low = x.lower() + e;
  std::vector<std::pair<int, int>> arcs;
  auto map_pt = [&](int p) {
    if (p <= up) return p;                      // first three blocks
    if (p <= K) return up + x.lower() + p - up; // block 4 -> trailing lower
    return p - e;                               // old lower points shift up
  };
  for (const auto& [a, b] : x.arcs()) arcs.emplace_back(map_pt(a), map_pt(b));
  return ArcDiagram(up, low, std::move(arcs));
}

/// I_d(y) = (s_{d-1} (x) cyc) o y restricted to S^{3 rho}(Lambda^e V).
/// The projector factors are composed one block at a time; the intermediate
/// collapse keeps the term count manageable for larger e.
inline Morphism apply_I(const Morphism& y, int d, int e, int rho) {
  Morphism m = compose(y, tensor(s_d(d - 1), cyc(e)));
  m = compose(symmetrizer(3, rho, e), m);
  for (int b = 0; b < 3; ++b) {
    Morphism layer = Morphism::identity(b * e);
    layer = tensor(layer, alt(e));
    layer = tensor(layer, Morphism::identity((2 - b) * e));
    m = compose(layer, m);
  }
  return m;
}

/// Diagram for a Gamma_{4,e} graph in the layout that makes the C-operator
/// identities exact: the label-0 filler edges between vertices 3 and 4 are
/// listed last, so the distinguished chain pieces occupy the first slot of
/// blocks 3 and 4. The slot order at block 4 matters beyond a sign, because
/// the cyc factor applied to it after bending is not S_e-equivariant.
inline ArcDiagram build_x4(const Pseudograph& g4, const Partition& lam) {
  std::vector<Edge> es, fillers;
  for (const auto& ed : g4.edges()) {
    if (ed.i == 3 && ed.j == 4 && ed.label == 0)
      fillers.push_back(ed);
    else
      es.push_back(ed);
  }
  es.insert(es.end(), fillers.begin(), fillers.end());
  return build_x_from_edges(4, g4.valence(), es, lam);
}

/// y_d(gamma', lambda) as a full Morphism.
inline Morphism y_morphism(const Pseudograph& g4, const Partition& lam, int d,
                           int rho) {
  const int e = g4.valence();
  Morphism bent{bend_fourth_block(build_x4(g4, lam), e)};
  return apply_I(bent, d, e, rho);
}

/// omega of x(gamma, lambda) by direct diagram arithmetic from the definition.
inline Morphism omega_direct(const Pseudograph& g, const Partition& lam,
                             int rho) {
  const int e = g.valence();
  const int d = g.size() + lam.sum();
  if (d < 1) throw std::invalid_argument("omega_direct: d must be >= 1");
  Morphism x{build_x(g, lam)};
  Morphism acc(3 * e, 2 * (d - 1) + e);
  for (int k = 1; k <= d; ++k)
    acc += c_operator(x, k, d, +1, e) - c_operator(x, k, d, -1, e);
  return apply_I(acc, d, e, rho);
}

/// Expand an OmegaResult into the free diagram basis via y_morphism.
inline Morphism expand_omega(const OmegaResult& r) {
  const int e = r.e(), d = r.degree();
  Morphism m(3 * e, 2 * (d - 1) + e);
  for (const auto& [key, c] : r.terms())
    m += y_morphism(key.first, key.second, d, r.rho()) * c;
  return m;
}

/// Deformation map: rational combination of the symmetrized basis elements
/// x^rho(gamma, lambda), gamma in Gamma^rho_{2,e}, lambda in P^+.
struct DeformationMap {
  int e;
  int rho;
  std::map<std::pair<Pseudograph, Partition>, Rational> terms;

  void add(const Pseudograph& g, const Partition& lam, Rational c) {
    if (c == 0) return;
    auto key = std::make_pair(g, lam);
    auto it = terms.find(key);
    if (it == terms.end())
      terms.emplace(key, std::move(c));
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms)
      d = std::max(d, k.first.size() + k.second.sum());
    return d;
  }
};

/// Per-degree omega residuals of a deformation map; kappa is an interpolating
/// PBW deformation iff all residuals vanish. Terms x^rho(gamma,lambda) expand
/// as omega(x(gamma,.)) + rho sgn(gamma) omega(x(gamma^t,.)).
inline std::map<int, OmegaResult> jacobi_residual(const DeformationMap& k) {
  std::map<int, OmegaResult> out;
  for (const auto& [key, c] : k.terms) {
    const auto& [g, lam] = key;
    int d = g.size() + lam.sum();
    if (d == 0) continue;  // no condition in degree 0
    auto it = out.find(d);
    if (it == out.end())
      it = out.emplace(d, OmegaResult(k.e, k.rho, d)).first;
    Pseudograph gt = g.transpose();
    if (gt == g) {
      // x^rho(g,lam) = (1 + rho sgn(g)) x(g,lam)
      int f = 1 + k.rho * g.sgn();
      if (f != 0) {
        OmegaResult w = omega_graphical(g, lam, k.rho);
        w *= c * Rational(f);
        it->second += w;
      }
    } else {
      OmegaResult w = omega_graphical(g, lam, k.rho);
      w *= c;
      it->second += w;
      OmegaResult wt = omega_graphical(gt, lam, k.rho);
      wt *= c * Rational(k.rho * g.sgn());
      it->second += wt;
    }
  }
  return out;
}

}  // namespace ospbw
