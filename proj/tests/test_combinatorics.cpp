#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ospbw/basis.hpp"
#include "ospbw/linalg.hpp"

using namespace ospbw;

TEST_CASE("partitions") {
  Partition l({4, 2, 2, 1});
  CHECK(l.count() == 4);
  CHECK(l.sum() == 9);
  CHECK(l.multiplicity(2) == 2);
  CHECK_FALSE(l.all_even());
  CHECK(all_partitions(5).size() == 7);
  CHECK(even_partitions(4).size() == 2);  // (4), (2,2)
  CHECK(even_partitions(3).empty());
  CHECK(Partition({4, 2, 2}).without_part(2) == Partition({4, 2}));
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("pseudograph basics") {
  Pseudograph g(2, 2, {{1, 2, 0}, {1, 2, 3}});
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.in_Gamma());
  CHECK(g.sgn() == -1);  // one odd-labelled (1,2)-edge
  CHECK(g.transpose() == g);
  Pseudograph loops(2, 2, {{1, 1, 1}, {2, 2, 3}});
  CHECK(loops.sgn() == 1);
  CHECK(loops.transpose() == Pseudograph(2, 2, {{1, 1, 3}, {2, 2, 1}}));
  CHECK_FALSE(Pseudograph(1, 2, {{1, 1, 2}}).in_Gamma());
  CHECK_THROWS(Pseudograph(2, 2, {{1, 2, 0}}));  // valence violated
}

TEST_CASE("pseudograph enumeration") {
  // p=2, e=1: exactly the single edge (1,2,L)
  for (int L = 0; L <= 3; ++L) {
    auto gs = all_pseudographs(2, 1, L);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0] == Pseudograph(2, 1, {{1, 2, L}}));
  }
  // p=1, e=2: one loop, label L; odd-only filter drops even L
  CHECK(all_pseudographs(1, 2, 2).size() == 1);
  CHECK(all_pseudographs(1, 2, 2, true).empty());
  CHECK(all_pseudographs(1, 2, 3, true).size() == 1);
  // p=2, e=2, total 0: double edge (1,2)^2 or two loops (labels 0) --
  // structures: {2x(1,2)}, {loop1,loop2}; labels all 0
  CHECK(all_pseudographs(2, 2, 0).size() == 2);
  // p=2, e=2, total 1: label 1 on one of the above edges: 2 + 2 = ...
  // double edge: labels {0,1}; loops: (1,0) or (0,1)
  CHECK(all_pseudographs(2, 2, 1).size() == 3);
}

TEST_CASE("group action: axioms and the even-loop fixing element") {
  // action law via point permutations on random diagrams
  std::vector<std::tuple<int, int, int>> shapes{{1, 2, 2}, {2, 2, 1},
                                                {3, 2, 0}, {2, 1, 3}};
  for (auto [p, e, d] : shapes) {
    auto diagrams = all_arc_diagrams(p * e, 2 * d);
    const ArcDiagram& x = diagrams[diagrams.size() / 2];
    std::vector<GroupElement> els;
    for_each_group_element(p, e, d,
                           [&](const GroupElement& g) { els.push_back(g); });
    CHECK(static_cast<long long>(els.size()) == group_order(p, e, d));
    const GroupElement& g = els[els.size() / 3];
    const GroupElement& h = els[2 * els.size() / 3];
    CHECK(act(GroupElement::identity(p, e, d), x) == x);
    CHECK(act(g, act(h, x)) ==
          x.relabelled(perm_compose(g.point_perm(), h.point_perm())));
  }
  // single even-labelled loop, p=1, e=2: the reversal element fixes x
  for (int d : {0, 2, 4}) {
    Pseudograph g(1, 2, {{1, 1, d}});
    ArcDiagram x = build_x(g, Partition::empty());
    GroupElement pi = GroupElement::identity(1, 2, d);
    pi.theta[0] = Perm{2, 1};
    for (int r = 1; r <= d; ++r) pi.sigma[r - 1] = d + 1 - r;
    pi.tau.assign(d, 1);
    CHECK(act(pi, x) == x);
    CHECK(pi.chi() == -1);
  }
}

TEST_CASE("build_x shapes and ASD values") {
  // single edge (1,2,0), e=1
  CHECK(build_x(Pseudograph(2, 1, {{1, 2, 0}}), Partition::empty()) ==
        ArcDiagram(2, 0, {{1, 2}}));
  // edge (1,2,M) with lambda = (2,2)
  for (int M = 0; M <= 2; ++M) {
    ArcDiagram x = build_x(Pseudograph(2, 1, {{1, 2, M}}), Partition({2, 2}));
    CHECK(x.upper() == 2);
    CHECK(x.lower() == 2 * (M + 4));
    ArcSequenceDatum expect{{1, 2, M}, {0, 0, 2}, {0, 0, 2}};
    CHECK(asd(x, 2, 1, M + 4) == expect);
  }
  // closed chain only
  CHECK(asd(build_x(Pseudograph::empty(), Partition({3})), 0, 0, 3) ==
        ArcSequenceDatum{{0, 0, 3}});
  // the 8 -> 6 example: loops labelled 1 and 0, edges labelled 0 and 2
  Pseudograph g(2, 4, {{1, 1, 1}, {2, 2, 0}, {1, 2, 0}, {1, 2, 2}});
  ArcDiagram x = build_x(g, Partition::empty());
  CHECK(x.upper() == 8);
  CHECK(x.lower() == 6);
  ArcSequenceDatum expect{{1, 1, 1}, {2, 2, 0}, {1, 2, 0}, {1, 2, 2}};
  CHECK(asd(x, 2, 4, 3) == expect);
}

TEST_CASE("ASD is a separating invariant (brute force, small shapes)") {
  std::vector<std::tuple<int, int, int>> shapes{
      {1, 2, 2}, {2, 1, 2}, {1, 3, 1}, {2, 2, 1}, {1, 4, 1}, {4, 1, 1}};
  for (auto [p, e, d] : shapes) {
    auto diagrams = all_arc_diagrams(p * e, 2 * d);
    // orbit id per diagram
    std::map<ArcDiagram, int> orbit_id;
    int next = 0;
    for (const auto& x : diagrams) {
      if (orbit_id.count(x)) continue;
      for (const auto& y : orbit(x, p, e, d)) orbit_id[y] = next;
      ++next;
    }
    std::map<ArcSequenceDatum, int> asd_to_orbit;
    for (const auto& x : diagrams) {
      auto key = asd(x, p, e, d);
      auto [it, ins] = asd_to_orbit.emplace(key, orbit_id.at(x));
      CHECK(it->second == orbit_id.at(x));  // same ASD => same orbit
    }
    // distinct orbits have distinct ASD
    CHECK(static_cast<int>(asd_to_orbit.size()) == next);
  }
}

TEST_CASE("stabilizer formula matches brute force") {
  CHECK(stabilizer_order(Pseudograph::empty(), Partition({3})) == 6);
  CHECK(stabilizer_order(Pseudograph(2, 2, {{1, 2, 0}, {1, 2, 0}}),
                         Partition::empty()) == 2);
  std::vector<std::pair<int, int>> pes{{1, 2}, {2, 1}, {2, 2}, {1, 3}, {4, 1}};
  for (auto [p, e] : pes)
    for (int d = 0; d <= 3; ++d)
      for (int dg = 0; dg <= d; ++dg)
        for (const auto& g : all_pseudographs(p, e, dg))
          for (const auto& lam : all_partitions(d - dg)) {
            ArcDiagram x = build_x(g, lam);
            CHECK(stabilizer_order(g, lam) ==
                  Integer(brute_stabilizer_order(x, p, e, d)));
          }
}

TEST_CASE("symmetrize: vanishing, naive agreement, formula-f") {
  // even loop kills the symmetrization
  for (int d : {0, 2}) {
    ArcDiagram x = build_x(Pseudograph(1, 2, {{1, 1, d}}), Partition::empty());
    CHECK(symmetrize(x, 1, 2, d).is_zero());
  }
  // odd partition part kills it
  for (int d : {1, 3}) {
    ArcDiagram x = build_x(Pseudograph::empty(), Partition({d}));
    CHECK(symmetrize(x, 0, 0, d).is_zero());
  }
  std::vector<std::tuple<int, int, int>> shapes{
      {1, 2, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {0, 0, 2}};
  for (auto [p, e, d] : shapes)
    for (int dg = 0; dg <= d; ++dg)
      for (const auto& g : all_pseudographs(p, e, dg))
        for (const auto& lam : all_partitions(d - dg)) {
          ArcDiagram x = build_x(g, lam);
          Morphism f = symmetrize(x, p, e, d);
          CHECK(f == symmetrize(x, p, e, d, /*naive=*/true));
          CHECK(f == full_basis_element(x, p, e, d));
          if (!f.is_zero())
            CHECK(f.coeff(x) ==
                  PolyT(Rational(stabilizer_order(g, lam))));
        }
}

TEST_CASE("enumerate_basis") {
  auto b1 = enumerate_basis(0, 0, 2);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].second == Partition({2}));
  auto b2 = enumerate_basis(2, 1, 0);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].first == Pseudograph(2, 1, {{1, 2, 0}}));
  // count matches the exact rank of the symmetrized morphisms
  auto b3 = enumerate_basis(2, 2, 2);
  std::vector<Morphism> ms;
  for (const auto& [g, lam] : b3)
    ms.push_back(symmetrize(build_x(g, lam), 2, 2, 2));
  CHECK(morphisms_rank(ms) == static_cast<int>(b3.size()));
}

TEST_CASE("sgn, transpose and Lemma sign") {
  CHECK(Pseudograph(2, 1, {{1, 2, 3}}).sgn() == -1);
  CHECK(Pseudograph(2, 1, {{1, 2, 2}}).sgn() == 1);
  for (int e = 1; e <= 2; ++e)
    for (int d = 0; d <= 3; ++d)
      for (int dg = 0; dg <= d; ++dg)
        for (const auto& g : all_pseudographs(2, e, dg, true)) {
          CHECK(g.sgn() == g.transpose().sgn());
          for (const auto& lam : even_partitions(d - dg)) {
            Morphism lhs =
                compose(Morphism{block_permutation(Perm{2, 1}, e)},
                        symmetrize(build_x(g, lam), 2, e, d));
            Morphism rhs = symmetrize(build_x(g.transpose(), lam), 2, e, d) *
                           Rational(g.sgn());
            CHECK(lhs == rhs);
          }
        }
}

TEST_CASE("enumerate_sym_basis") {
  auto b = enumerate_sym_basis(1, 0, +1);
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == Pseudograph(2, 1, {{1, 2, 0}}));
  // e=1, d=1: edge (1,2,1) is a symmetric class with sgn -1
  CHECK(enumerate_sym_basis(1, 1, +1).empty());
  CHECK(enumerate_sym_basis(1, 1, -1).size() == 1);
  // symmetrized x^rho elements are linearly independent
  for (int e = 1; e <= 2; ++e)
    for (int rho : {+1, -1})
      for (int d = 0; d <= 3; ++d) {
        auto bs = enumerate_sym_basis(e, d, rho);
        std::vector<Morphism> ms;
        for (const auto& [g, lam] : bs) {
          Morphism m(2 * e, 2 * d);
          Morphism xr = x_rho(g, lam, rho);
          for (const auto& [x, c] : xr.terms())
            m += symmetrize(x, 2, e, d) * c.coeff(0);
          ms.push_back(m);
        }
        CHECK(morphisms_rank(ms) == static_cast<int>(ms.size()));
      }
}
