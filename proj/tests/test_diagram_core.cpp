#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ospbw/morphism.hpp"

using namespace ospbw;

namespace {

ArcDiagram random_diagram(int k, int l, std::mt19937& rng) {
  std::vector<int> pts(k + l);
  std::iota(pts.begin(), pts.end(), 1);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<std::pair<int, int>> arcs;
  for (size_t i = 0; i + 1 < pts.size(); i += 2)
    arcs.emplace_back(pts[i], pts[i + 1]);
  return ArcDiagram(k, l, std::move(arcs));
}

Perm random_perm(int n, std::mt19937& rng) {
  Perm p = perm_identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("PolyT arithmetic is exact and canonical") {
  PolyT a(std::vector<Rational>{Rational(1), Rational(2)});  // 1 + 2t
  PolyT b(std::vector<Rational>{Rational(-1), Rational(-2)});
  CHECK((a + b).is_zero());
  CHECK(PolyT::t_power(0) == PolyT::one());
  CHECK((a * PolyT::t_power(2)).degree() == 3);
  PolyT c = a;
  c /= Rational(2);
  CHECK(c.coeff(1) == Rational(1));
  CHECK(a.eval(Rational(3)) == Rational(7));
  CHECK(PolyT(std::vector<Rational>{Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("cap then cup composes to t times the empty diagram") {
  Morphism cap{ArcDiagram::cap()};
  Morphism cup{ArcDiagram::cup()};
  Morphism r = compose(cap, cup);
  CHECK(r.upper() == 0);
  CHECK(r.lower() == 0);
  CHECK(r.term_count() == 1);
  CHECK(r.coeff(ArcDiagram::empty()) == PolyT::t_power(1));
}

TEST_CASE("identity is neutral for composition") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    int k = 2 * (i % 3), l = 2 + 2 * (i % 2);
    ArcDiagram x = random_diagram(k, l, rng);
    Morphism mx{x};
    CHECK(compose(mx, Morphism::identity(l)) == mx);
    CHECK(compose(Morphism::identity(k), mx) == mx);
  }
}

TEST_CASE("worked composition with one closed loop") {
  // The two diagrams of the example display: the 4->4 diagram is applied
  // first, the 4->2 diagram second; one loop forms among the shared points.
  ArcDiagram g(4, 4, {{1, 6}, {2, 8}, {3, 4}, {5, 7}});
  ArcDiagram f(4, 2, {{1, 3}, {2, 5}, {4, 6}});
  Morphism r = compose(Morphism{g}, Morphism{f});
  ArcDiagram expected(4, 2, {{1, 5}, {2, 6}, {3, 4}});
  CHECK(r.term_count() == 1);
  CHECK(r.coeff(expected) == PolyT::t_power(1));
}

TEST_CASE("tensor examples") {
  CHECK(tensor(Morphism::identity(1), Morphism::identity(1)) ==
        Morphism::identity(2));
  std::mt19937 rng(11);
  ArcDiagram x = random_diagram(3, 3, rng);
  Morphism unit{ArcDiagram::empty()};
  CHECK(tensor(Morphism{x}, unit) == Morphism{x});
  CHECK(tensor(unit, Morphism{x}) == Morphism{x});
  // cup (x) cross, as in the example display
  ArcDiagram r = tensor(ArcDiagram::cup(), ArcDiagram::cross());
  CHECK(r == ArcDiagram(4, 2, {{1, 2}, {3, 6}, {4, 5}}));
}

TEST_CASE("shape mismatch is rejected") {
  Morphism cup{ArcDiagram::cup()};
  CHECK_THROWS_AS(compose(cup, cup), ShapeError);
}

TEST_CASE("permutation diagrams") {
  CHECK(permutation_diagram(perm_identity(3)) == ArcDiagram::identity(3));
  CHECK(permutation_diagram(perm_transposition(2, 1, 2)) ==
        ArcDiagram::cross());
  // (1,2) then (2,3) is the product (2,3)(1,2) = the 3-cycle (1,3,2)
  Morphism a{permutation_diagram(perm_transposition(3, 1, 2))};
  Morphism b{permutation_diagram(perm_transposition(3, 2, 3))};
  Perm threecycle = perm_cycle(3, {1, 3, 2});
  CHECK(compose(a, b) == Morphism{permutation_diagram(threecycle)});
}

TEST_CASE("permutation_diagram is a group homomorphism") {
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    Perm s = random_perm(4, rng), t = random_perm(4, rng);
    Morphism lhs = compose(Morphism{permutation_diagram(s)},
                           Morphism{permutation_diagram(t)});
    CHECK(lhs == Morphism{permutation_diagram(perm_compose(t, s))});
    Morphism inv = compose(Morphism{permutation_diagram(s)},
                           Morphism{permutation_diagram(perm_inverse(s))});
    CHECK(inv == Morphism::identity(4));
  }
}

TEST_CASE("block permutations") {
  CHECK(block_permutation(perm_transposition(2, 1, 2), 1) ==
        permutation_diagram(perm_transposition(2, 1, 2)));
  // blocks of size 2: strands (1,2) <-> (3,4)
  CHECK(block_permutation(perm_transposition(2, 1, 2), 2) ==
        permutation_diagram(Perm{3, 4, 1, 2}));
  CHECK(block_permutation(perm_identity(3), 2) == ArcDiagram::identity(6));
}

TEST_CASE("symmetrizers") {
  CHECK(symmetrizer(1, +1, 3) == Morphism::identity(3));
  CHECK(symmetrizer(1, -1, 2) == Morphism::identity(2));
  Morphism a2 = alt(2);
  Morphism expected = Morphism::identity(2) - Morphism{ArcDiagram::cross()};
  CHECK(a2 == expected);
  for (int n = 0; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m)
      for (int sign : {+1, -1}) {
        Morphism s = symmetrizer(n, sign, m);
        CHECK(compose(s, s) == s * Rational(factorial(n)));
      }
}

TEST_CASE("cyc") {
  CHECK(cyc(1) == Morphism::identity(1) * Rational(-1));
  Morphism c2 = Morphism{ArcDiagram::cross()} - Morphism::identity(2);
  CHECK(cyc(2) == c2);
  for (int e = 1; e <= 4; ++e) {
    Morphism a = alt(e);
    CHECK(compose(cyc(e), a) == a * Rational(-e));
    CHECK(compose(a, cyc(e)) == a * Rational(-e));
  }
}

TEST_CASE("s_d") {
  CHECK(s_d(0) == Morphism{ArcDiagram::empty()});
  CHECK(s_d(1) == alt(2));
  Morphism s2 = s_d(2);
  CHECK(s2.term_count() == 8);  // |S_2 wr S_2| distinct group elements
  CHECK(compose(s2, s2) == s2 * Rational(8));
  // both factorization orders agree
  Morphism a = tensor(tensor(Morphism::identity(0), alt(2)), alt(2));
  CHECK(s2 == compose(symmetrizer(2, +1, 2), a));
  Morphism s3 = s_d(3);
  CHECK(compose(s3, s3) == s3 * Rational(48));
}

TEST_CASE("associativity on random composable triples") {
  std::mt19937 rng(101);
  for (int i = 0; i < 40; ++i) {
    int k = rng() % 3, l = rng() % 3, m = rng() % 3, n = rng() % 3;
    if ((k + l) % 2) ++l;
    if ((l + m) % 2) ++m;
    if ((m + n) % 2) ++n;
    Morphism a{random_diagram(k, l, rng)};
    Morphism b{random_diagram(l, m, rng)};
    Morphism c{random_diagram(m, n, rng)};
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("interchange law") {
  std::mt19937 rng(103);
  for (int i = 0; i < 40; ++i) {
    int k = rng() % 3, l = rng() % 3, m = rng() % 3, n = rng() % 3;
    if ((k + l) % 2) ++l;
    if ((m + n) % 2) ++n;
    int p = rng() % 3, q = rng() % 3;
    if ((l + p) % 2) ++p;
    if ((n + q) % 2) ++q;
    Morphism a{random_diagram(k, l, rng)}, b{random_diagram(m, n, rng)};
    Morphism c{random_diagram(l, p, rng)}, d{random_diagram(n, q, rng)};
    CHECK(compose(tensor(a, b), tensor(c, d)) ==
          tensor(compose(a, c), compose(b, d)));
  }
}

TEST_CASE("duality zig-zag and cup/cap symmetry") {
  Morphism cap{ArcDiagram::cap()}, cup{ArcDiagram::cup()};
  Morphism id1 = Morphism::identity(1);
  CHECK(compose(tensor(cap, id1), tensor(id1, cup)) == id1);
  CHECK(compose(tensor(id1, cap), tensor(cup, id1)) == id1);
  Morphism cross{ArcDiagram::cross()};
  CHECK(compose(cross, cup) == cup);
  CHECK(compose(cap, cross) == cap);
}

TEST_CASE("arc diagram enumeration counts odd double factorials") {
  CHECK(all_arc_diagrams(0, 2).size() == 1);
  CHECK(all_arc_diagrams(2, 2).size() == 3);
  CHECK(all_arc_diagrams(4, 2).size() == 15);
  CHECK(all_arc_diagrams(4, 4).size() == 105);
  CHECK(all_arc_diagrams(1, 1).size() == 1);
}
