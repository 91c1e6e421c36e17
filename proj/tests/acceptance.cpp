// End-to-end acceptance harness: one pass/fail line per criterion.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <tuple>

#include "ospbw/classification.hpp"
#include "ospbw/genfunc.hpp"
#include "ospbw/group_action.hpp"
#include "ospbw/specialization.hpp"

using namespace ospbw;

namespace {

using Clock = std::chrono::steady_clock;

bool criterion1_category_axioms() {
  std::mt19937 rng(2026);
  // associativity on random composable triples, <= 8 points per diagram
  for (int it = 0; it < 40; ++it) {
    int k = rng() % 5, l = rng() % 5, m = rng() % 5, n = rng() % 5;
    if ((k + l) % 2) ++l;
    if ((l + m) % 2) ++m;
    if ((m + n) % 2) ++n;
    Morphism a{random_arc_diagram(k, l, rng)};
    Morphism b{random_arc_diagram(l, m, rng)};
    Morphism c{random_arc_diagram(m, n, rng)};
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;
  }
  // interchange law
  for (int it = 0; it < 40; ++it) {
    int k = rng() % 4, l = rng() % 4, m = rng() % 4;
    int k2 = rng() % 4, l2 = rng() % 4, m2 = rng() % 4;
    if ((k + l) % 2) ++l;
    if ((l + m) % 2) ++m;
    if ((k2 + l2) % 2) ++l2;
    if ((l2 + m2) % 2) ++m2;
    ArcDiagram a = random_arc_diagram(k, l, rng);
    ArcDiagram c = random_arc_diagram(l, m, rng);
    ArcDiagram b = random_arc_diagram(k2, l2, rng);
    ArcDiagram dd = random_arc_diagram(l2, m2, rng);
    if (compose(Morphism{tensor(a, b)}, Morphism{tensor(c, dd)}) !=
        tensor(compose(Morphism{a}, Morphism{c}),
               compose(Morphism{b}, Morphism{dd})))
      return false;
  }
  // zig-zag, both sides
  Morphism idm = Morphism::identity(1);
  Morphism zig1 = compose(Morphism{tensor(ArcDiagram::cap(),
                                          ArcDiagram::identity(1))},
                          Morphism{tensor(ArcDiagram::identity(1),
                                          ArcDiagram::cup())});
  Morphism zig2 = compose(Morphism{tensor(ArcDiagram::identity(1),
                                          ArcDiagram::cap())},
                          Morphism{tensor(ArcDiagram::cup(),
                                          ArcDiagram::identity(1))});
  if (zig1 != idm || zig2 != idm) return false;
  // closing cap with cup yields t
  Morphism loop = compose(Morphism{ArcDiagram::cap()},
                          Morphism{ArcDiagram::cup()});
  if (loop != Morphism(ArcDiagram::empty(), PolyT::t_power(1))) return false;
  // cup and cap are symmetric
  if (compose(Morphism{ArcDiagram::cross()}, Morphism{ArcDiagram::cup()}) !=
      Morphism{ArcDiagram::cup()})
    return false;
  if (compose(Morphism{ArcDiagram::cap()}, Morphism{ArcDiagram::cross()}) !=
      Morphism{ArcDiagram::cap()})
    return false;
  return true;
}

bool criterion2_asd_orbits() {
  for (int p = 1; p <= 4; ++p)
    for (int e = 1; p * e <= 4; ++e)
      for (int d = 0; 2 * d <= 6; ++d) {
        if ((p * e + 2 * d) % 2) continue;
        auto diagrams = all_arc_diagrams(p * e, 2 * d);
        std::map<ArcDiagram, int> orbit_id;
        int next = 0;
        for (const auto& x : diagrams) {
          if (orbit_id.count(x)) continue;
          for (const auto& y : orbit(x, p, e, d)) orbit_id[y] = next;
          ++next;
        }
        std::map<ArcSequenceDatum, int> asd_to_orbit;
        for (const auto& x : diagrams) {
          auto [it, ins] = asd_to_orbit.emplace(asd(x, p, e, d),
                                                orbit_id.at(x));
          if (it->second != orbit_id.at(x)) return false;
        }
        if (static_cast<int>(asd_to_orbit.size()) != next) return false;
      }
  return true;
}

bool criterion3_stabilizer_formula() {
  for (auto [p, e] : std::vector<std::pair<int, int>>{
           {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}, {1, 4}, {4, 1}})
    for (int d = 0; d <= 3; ++d)
      for (int dg = 0; dg <= d; ++dg)
        for (const auto& g : all_pseudographs(p, e, dg))
          for (const auto& lam : all_partitions(d - dg))
            if (stabilizer_order(g, lam) !=
                Integer(brute_stabilizer_order(build_x(g, lam), p, e, d)))
              return false;
  return true;
}

bool criterion4_vanishing_and_rank() {
  // even-labelled loops symmetrize to zero
  for (int d : {0, 2})
    if (!symmetrize(build_x(Pseudograph(1, 2, {{1, 1, d}}),
                            Partition::empty()),
                    1, 2, d)
             .is_zero())
      return false;
  // odd partition parts symmetrize to zero
  for (int d : {1, 3})
    if (!symmetrize(build_x(Pseudograph::empty(), Partition({d})), 0, 0, d)
             .is_zero())
      return false;
  // the orbit-representative basis is nonzero and linearly independent
  for (int p = 1; p <= 2; ++p)
    for (int e = 0; e <= 2; ++e)
      for (int d = 0; d <= 3; ++d) {
        if ((p * e) % 2 && d >= 0 && (p * e + 2 * d) % 2) continue;
        auto basis = enumerate_basis(p, e, d);
        std::map<ArcDiagram, int> col;
        Matrix rows;
        for (const auto& [g, lam] : basis) {
          Morphism f = symmetrize(build_x(g, lam), p, e, d);
          if (f.is_zero()) return false;
          std::vector<std::pair<ArcDiagram, PolyT>> terms(f.terms().begin(),
                                                          f.terms().end());
          for (const auto& [dg, c] : terms) {
            if (c.degree() > 0) return false;  // constant in t by design
            col.emplace(dg, static_cast<int>(col.size()));
          }
          rows.emplace_back();
        }
        for (size_t r = 0; r < basis.size(); ++r) {
          Morphism f = symmetrize(build_x(basis[r].first, basis[r].second), p,
                                  e, d);
          rows[r].assign(col.size(), Rational(0));
          for (const auto& [dg, c] : f.terms()) rows[r][col.at(dg)] = c.coeff(0);
        }
        if (row_reduce(rows) != static_cast<int>(basis.size())) return false;
      }
  return true;
}

bool criterion5_omega_oracles() {
  auto sweep = [&](int e, int dmax) {
    for (int d = 1; d <= dmax; ++d)
      for (int dg = 0; dg <= d; ++dg)
        for (const auto& g : all_pseudographs(2, e, dg, true))
          for (const auto& lam : even_partitions(d - dg))
            for (int rho : {1, -1})
              if (omega_direct(g, lam, rho) !=
                  expand_omega(omega_graphical(g, lam, rho)))
                return false;
    return true;
  };
  if (!sweep(1, 4) || !sweep(2, 4) || !sweep(3, 2)) return false;
  // the worked mixed example, including the part-multiplicity factor 8
  Pseudograph g(2, 3, {{1, 1, 0}, {1, 2, 1}, {2, 2, 2}});
  Partition lam({2, 2});
  for (int rho : {1, -1}) {
    OmegaResult w = omega_graphical(g, lam, rho);
    if (w.coefficient(graph_modify_part(g, 2), Partition({2})) != 8)
      return false;
    if (w.coefficient(graph_modify_edge(g, 2, 1), lam) != 1) return false;
  }
  return true;
}

bool criterion6_classification() {
  for (int e = 1; e <= 4; ++e)
    for (int rho : {1, -1})
      for (const auto& rep : classification_audit(e, rho, 4))
        if (!rep.match || rep.kernel_dim != rep.emitted_dim) return false;
  // recursion-produced coefficient 1/2 on the degree-3 moment-map family
  auto k3 = build_kappa_w(-1, 3);
  auto it = k3.map.terms.find(
      {Pseudograph(2, 1, {{1, 2, 1}}), Partition({2})});
  return it != k3.map.terms.end() && it->second == Rational(1, 2);
}

bool criterion7_functoriality() {
  std::mt19937 rng(424242);
  for (int it = 0; it < 200; ++it) {
    int k = rng() % 5, l = rng() % 5, j = rng() % 5;
    if ((k + l) % 2) ++l;
    if ((l + j) % 2) ++j;
    ArcDiagram a = random_arc_diagram(k, l, rng);
    ArcDiagram b = random_arc_diagram(l, j, rng);
    for (auto [m, n] :
         std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {0, 1}, {1, 1}})
      if (specialize(compose(a, b), m, n) !=
          compose(specialize(a, m, n), specialize(b, m, n)))
        return false;
  }
  return true;
}

bool criterion8_specialized_identities() {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 0}, {0, 1}, {1, 1}}) {
    auto rep = verify_form_and_lie(m, n);
    if (!rep.ok_form || !rep.ok_lie) return false;
    for (const auto& fam :
         {build_special(FamilyKind::lie), build_special(FamilyKind::form),
          build_mu_nu(2, 1, Partition({1}), Partition({1})),
          build_kappa_w(-1, 1), build_kappa_w(1, 2), build_kappa_w(-1, 3)})
      if (!specialized_jacobi_zero(fam.map, m, n)) return false;
  }
  return true;
}

bool criterion9_generating_functions() {
  GenFuncContext orth(3, 0);
  for (int N = 0; N <= 1; ++N)
    if (series_coefficient(GFVariant::orthogonal, N, orth) !=
        closed_form_coefficient(GFVariant::orthogonal, N, orth))
      return false;
  auto t_orth = table_ratio(
      kappa_polynomial_table(build_kappa_w(-1, 3).map, orth),
      series_polynomial_table(GFVariant::orthogonal, 1, -1, orth));
  if (!t_orth.ok || !t_orth.seen) return false;
  for (int n : {1, 2}) {
    GenFuncContext symp(0, n);
    for (int N = 0; N <= 1; ++N)
      if (series_coefficient(GFVariant::symplectic, N, symp) !=
          closed_form_coefficient(GFVariant::symplectic, N, symp))
        return false;
    auto t_symp = table_ratio(
        kappa_polynomial_table(build_kappa_w(1, 2).map, symp),
        series_polynomial_table(GFVariant::symplectic, 1, 1, symp));
    if (!t_symp.ok || !t_symp.seen) return false;
  }
  return true;
}

int report(int idx, const char* name, bool (*fn)()) {
  auto start = Clock::now();
  bool ok = fn();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start)
                .count();
  std::cout << "criterion " << idx << " (" << name << "): "
            << (ok ? "PASS" : "FAIL") << " [" << ms << " ms]\n";
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "category axioms", criterion1_category_axioms);
  failed += report(2, "arc-sequence orbit invariant", criterion2_asd_orbits);
  failed += report(3, "stabilizer formula", criterion3_stabilizer_formula);
  failed += report(4, "vanishing and basis rank", criterion4_vanishing_and_rank);
  failed += report(5, "omega oracle equivalence", criterion5_omega_oracles);
  failed += report(6, "deformation classification", criterion6_classification);
  failed += report(7, "specialization functoriality", criterion7_functoriality);
  failed += report(8, "specialized identities", criterion8_specialized_identities);
  failed += report(9, "generating functions", criterion9_generating_functions);
  if (failed) std::cout << failed << " criterion(s) failed\n";
  return failed ? 1 : 0;
}
