#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ospbw/basis.hpp"
#include "ospbw/json_io.hpp"
#include "ospbw/specialization.hpp"

using namespace ospbw;

TEST_CASE("arc diagram round-trip and canonical arc order") {
  std::mt19937 rng(99);
  for (int it = 0; it < 20; ++it) {
    int k = rng() % 5, l = rng() % 5;
    if ((k + l) % 2) ++l;
    ArcDiagram d = random_arc_diagram(k, l, rng);
    Json j = arc_diagram_to_json(d);
    CHECK(arc_diagram_from_json(j) == d);
    // wire order: ascending pairs, sorted lexicographically
    for (size_t i = 0; i < j["arcs"].size(); ++i) {
      CHECK(j["arcs"][i][0].get<int>() < j["arcs"][i][1].get<int>());
      if (i > 0) CHECK(j["arcs"][i - 1] < j["arcs"][i]);
    }
    // re-emission is bit-identical
    CHECK(arc_diagram_to_json(arc_diagram_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("morphism round-trip keeps polynomial coefficients exact") {
  Morphism m(2, 2);
  m.add_term(ArcDiagram::identity(2),
             PolyT({Rational(-3, 7), Rational(0), Rational(22, 5)}));
  m.add_term(ArcDiagram::cross(), PolyT(Rational(1, 3)));
  Json j = morphism_to_json(m);
  Morphism back = morphism_from_json(j);
  CHECK(back == m);
  CHECK(morphism_to_json(back).dump() == j.dump());

  // ascending powers of t, as [num, den] decimal strings
  for (const auto& t : j["terms"])
    if (t["diagram"]["arcs"].size() == 2 &&
        t["diagram"]["arcs"][0][1].get<int>() == 3) {
      CHECK(t["coeff"].size() == 3);
      CHECK(t["coeff"][0][0].get<std::string>() == "-3");
      CHECK(t["coeff"][0][1].get<std::string>() == "7");
      CHECK(t["coeff"][2][0].get<std::string>() == "22");
    }
}

TEST_CASE("morphism round-trip on a structured example") {
  Morphism s = s_d(2);
  CHECK(morphism_from_json(morphism_to_json(s)) == s);
}

TEST_CASE("pseudograph and partition round-trip") {
  Pseudograph g(2, 3, {{1, 1, 3}, {1, 2, 0}, {2, 2, 1}});
  CHECK(pseudograph_from_json(pseudograph_to_json(g)) == g);
  Partition lam({4, 2, 2});
  Json j = partition_to_json(lam);
  CHECK(j.is_array());
  CHECK(partition_from_json(j) == lam);
  CHECK(partition_from_json(Json::array()) == Partition::empty());
}

TEST_CASE("omega result round-trip") {
  Pseudograph g(2, 1, {{1, 2, 3}});
  OmegaResult r = omega_graphical(g, Partition::empty(), -1);
  Json j = omega_result_to_json(r);
  OmegaResult back = omega_result_from_json(j);
  CHECK(back == r);
  CHECK(back.degree() == r.degree());
  CHECK(omega_result_to_json(back).dump() == j.dump());
}

TEST_CASE("supermap round-trip") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}}) {
    SuperMap f = specialize(s_d(2), m, n);
    Json j = supermap_to_json(f);
    SuperMap back = supermap_from_json(j);
    CHECK(back == f);
    CHECK(supermap_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("malformed objects are rejected with a format error") {
  CHECK_THROWS_AS(arc_diagram_from_json(Json{{"upper", 1}}), JsonFormatError);
  CHECK_THROWS_AS(
      morphism_from_json(Json{{"upper", 0}, {"lower", 0}, {"terms", 7}}),
      JsonFormatError);
  CHECK_THROWS_AS(partition_from_json(Json{{"parts", 1}}), JsonFormatError);
  CHECK_THROWS_AS(rational_from_string("1/0x"), JsonFormatError);
  Json bad_coeff = Json{
      {"upper", 0},
      {"lower", 2},
      {"terms",
       Json::array({Json{{"coeff", Json::array({Json::array({"1", "0"})})},
                         {"diagram", arc_diagram_to_json(ArcDiagram::cap())}}})}};
  CHECK_THROWS_AS(morphism_from_json(bad_coeff), JsonFormatError);
}

TEST_CASE("shape violations surface as shape errors, not crashes") {
  Json j = Json{{"upper", 2},
                {"lower", 1},
                {"arcs", Json::array({Json::array({1, 2})})}};
  CHECK_THROWS_AS(arc_diagram_from_json(j), ShapeError);
}
