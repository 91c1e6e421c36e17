#pragma once

#include <map>

#include "ospbw/group_action.hpp"
#include "ospbw/morphism.hpp"
#include "ospbw/partition.hpp"
#include "ospbw/pseudograph.hpp"

namespace ospbw {

/// Orbit representative diagram for a graph given as an explicit edge list:
/// each edge of label L becomes a chain of L+1 arcs through 2L adjacent lower
/// points, each part of size l a closed chain on 2l lower points. Per-vertex
/// upper slots are assigned in listing order, lower points allocated left to
/// right, edges before parts.
inline ArcDiagram build_x_from_edges(int p, int e,
                                     const std::vector<Edge>& edges,
                                     const Partition& lam) {
  int total = lam.sum();
  for (const auto& ed : edges) total += ed.label;
  const int d = total;
  const int K = p * e;
  std::vector<int> next_slot(p + 1, 0);
  int low = K;  // last allocated point
  std::vector<std::pair<int, int>> arcs;
  auto upper_point = [&](int v) { return (v - 1) * e + (++next_slot[v]); };
  for (const auto& ed : edges) {
    int a = upper_point(ed.i);
    int b = upper_point(ed.j);
    int L = ed.label;
    if (L == 0) {
      arcs.emplace_back(a, b);
      continue;
    }
    arcs.emplace_back(a, low + 1);
    for (int k = 1; k < L; ++k) arcs.emplace_back(low + 2 * k, low + 2 * k + 1);
    arcs.emplace_back(low + 2 * L, b);
    low += 2 * L;
  }
  for (int l : lam.parts()) {
    // closed chain on the points low+1 .. low+2l
    for (int k = 1; k < l; ++k) arcs.emplace_back(low + 2 * k, low + 2 * k + 1);
    arcs.emplace_back(low + 1, low + 2 * l);
    low += 2 * l;
  }
  return ArcDiagram(K, 2 * d, std::move(arcs));
}

/// The canonical orbit representative x(gamma, lambda): edges taken in
/// canonical sorted order.
inline ArcDiagram build_x(const Pseudograph& g, const Partition& lam) {
  return build_x_from_edges(g.vertices(), g.valence(), g.edges(), lam);
}

/// Stabilizer order of x(gamma, lambda) from the product formula: each edge
/// type (i,j,l) of multiplicity m contributes 2^{[i=j] m} m!, each part size
/// l of multiplicity m contributes (2l)^m m!.
inline Integer stabilizer_order(const Pseudograph& g, const Partition& lam) {
  Integer o = 1;
  std::map<Edge, int> emult;
  for (const auto& ed : g.edges()) ++emult[ed];
  for (const auto& [ed, m] : emult) {
    if (ed.i == ed.j)
      for (int k = 0; k < m; ++k) o *= 2;
    o *= factorial(m);
  }
  std::map<int, int> pmult;
  for (int l : lam.parts()) ++pmult[l];
  for (const auto& [l, m] : pmult) {
    for (int k = 0; k < m; ++k) o *= 2 * l;
    o *= factorial(m);
  }
  return o;
}

/// f_{p,e,d}(x) = sum_{g in G} chi(g) (g.x), computed by orbit traversal with
/// sign propagation: zero when the sign is inconsistent on the orbit
/// (chi nontrivial on the stabilizer), else #G_x times the signed orbit sum.
inline Morphism symmetrize(const ArcDiagram& x, int p, int e, int d,
                           bool naive = false) {
  if (x.upper() != p * e || x.lower() != 2 * d)
    throw ShapeError("symmetrize: shape mismatch");
  Morphism r(x.upper(), x.lower());
  if (naive) {
    for_each_group_element(p, e, d, [&](const GroupElement& g) {
      r.add_term(act(g, x), PolyT(Rational(g.chi())));
    });
    return r;
  }
  // generators: per-block adjacent transpositions (chi = -1), pair flips
  // (chi = -1), pair-swapping adjacent transpositions (chi = +1)
  std::vector<std::pair<GroupElement, int>> gens;
  for (int b = 0; b < p; ++b)
    for (int s = 1; s < e; ++s) {
      GroupElement g = GroupElement::identity(p, e, d);
      g.theta[b] = perm_transposition(e, s, s + 1);
      gens.emplace_back(g, -1);
    }
  for (int rr = 0; rr < d; ++rr) {
    GroupElement g = GroupElement::identity(p, e, d);
    g.tau[rr] = 1;
    gens.emplace_back(g, -1);
  }
  for (int rr = 1; rr < d; ++rr) {
    GroupElement g = GroupElement::identity(p, e, d);
    g.sigma = perm_transposition(d, rr, rr + 1);
    gens.emplace_back(g, +1);
  }
  std::map<ArcDiagram, int> sign;
  sign[x] = 1;
  std::vector<ArcDiagram> stack{x};
  while (!stack.empty()) {
    ArcDiagram y = stack.back();
    stack.pop_back();
    int sy = sign.at(y);
    for (const auto& [g, chi] : gens) {
      ArcDiagram z = act(g, y);
      auto it = sign.find(z);
      if (it == sign.end()) {
        sign.emplace(z, sy * chi);
        stack.push_back(z);
      } else if (it->second != sy * chi) {
        return Morphism::zero(x.upper(), x.lower());  // chi|stab nontrivial
      }
    }
  }
  Integer stab = Integer(group_order(p, e, d)) / Integer(sign.size());
  for (const auto& [y, s] : sign)
    r.add_term(y, PolyT(Rational(stab * s)));
  return r;
}

/// All (gamma, lambda) with gamma in Gamma_{p,e}, lambda in P^+,
/// |gamma| + |lambda| = d; parametrizes the basis of Hom(T^p L^e V, S^d L^2 V).
inline std::vector<std::pair<Pseudograph, Partition>> enumerate_basis(int p,
                                                                     int e,
                                                                     int d) {
  std::vector<std::pair<Pseudograph, Partition>> out;
  for (int dg = 0; dg <= d; ++dg)
    for (const auto& g : all_pseudographs(p, e, dg, /*odd_loops_only=*/true))
      for (const auto& lam : even_partitions(d - dg)) out.emplace_back(g, lam);
  std::sort(out.begin(), out.end());
  return out;
}

/// Representative of the isomorphism class of gamma under the vertex swap
/// (p = 2): the canonically smaller of gamma, gamma^t.
inline Pseudograph swap_class_rep(const Pseudograph& g) {
  Pseudograph t = g.transpose();
  return t < g ? t : g;
}

/// All (gamma, lambda) with gamma in Gamma^rho_{2,e} (class representatives
/// with gamma != gamma^t, or sgn = rho), lambda in P^+, |gamma|+|lambda| = d.
inline std::vector<std::pair<Pseudograph, Partition>> enumerate_sym_basis(
    int e, int d, int rho) {
  std::vector<std::pair<Pseudograph, Partition>> out;
  for (int dg = 0; dg <= d; ++dg)
    for (const auto& g : all_pseudographs(2, e, dg, /*odd_loops_only=*/true)) {
      Pseudograph t = g.transpose();
      if (t < g) continue;  // keep the class representative only
      if (g == t && g.sgn() != rho) continue;
      for (const auto& lam : even_partitions(d - dg)) out.emplace_back(g, lam);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// x^rho(gamma, lambda) = x(gamma,lambda) + rho sgn(gamma) x(gamma^t,lambda)
/// as a raw (unsymmetrized) diagram combination.
inline Morphism x_rho(const Pseudograph& g, const Partition& lam, int rho) {
  Morphism r{build_x(g, lam)};
  r.add_term(build_x(g.transpose(), lam), PolyT(Rational(rho * g.sgn())));
  return r;
}

/// alt_e^{(x) p}: the source-side antisymmetrizer on p blocks of e points.
inline Morphism alt_blocks(int p, int e) {
  Morphism a = Morphism{ArcDiagram::empty()};
  for (int b = 0; b < p; ++b) a = tensor(a, alt(e));
  return a;
}

/// s_d o x o alt_e^{(x)p}: the hom-space basis element as a full Morphism;
/// equals symmetrize(x) by the symmetrization formula.
inline Morphism full_basis_element(const ArcDiagram& x, int p, int e, int d) {
  return compose(compose(alt_blocks(p, e), Morphism{x}), s_d(d));
}

}  // namespace ospbw
