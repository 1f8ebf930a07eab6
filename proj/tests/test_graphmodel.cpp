/**
 * @file test_graphmodel.cpp
 * @brief Tests for the unoriented-graph state model: orientation counts,
 *        expansion shapes, anchor values, the R0-R3 identities, the three-way
 *        resolution engine, and cross-engine agreement.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "graphmodel.hpp"
#include "jaeger.hpp"
#include "kauffman_direct.hpp"
#include "memo.hpp"
#include "oracles.hpp"
#include "slnpoly.hpp"

using namespace kauffman;

namespace {

FourValentGraph loops_graph(int k) {
  PlanarMap m;
  m.free_loops = k;
  return FourValentGraph{m};
}

/// One vertex, both adjacent leg pairs closed into loops.
FourValentGraph curl_graph() {
  PlanarMap m;
  m.sites = 1;
  m.pairing = {1, 0, 3, 2};
  m.outer_dart = 0;
  return FourValentGraph{m};
}

/// Two vertices joined by four parallel edges (the closed-up bigon).
FourValentGraph theta_graph() {
  PlanarMap m;
  m.sites = 2;
  m.pairing = {7, 6, 5, 4, 3, 2, 1, 0};
  m.outer_dart = 0;
  return FourValentGraph{m};
}

/// The bigon closed by an arc at each vertex instead.
FourValentGraph pinched_bigon() {
  PlanarMap m;
  m.sites = 2;
  m.pairing = {1, 0, 5, 4, 3, 2, 7, 6};
  m.outer_dart = 0;
  return FourValentGraph{m};
}

LaurentPoly delta(int n) { return unknot_value(n); }

LaurentPoly curl_value(int n) {
  return (quantum_integer(2 * n - 2) + quantum_integer(2)) * delta(n);
}

std::multiset<std::string> value_multiset(const std::vector<LaurentPoly>& vals) {
  std::multiset<std::string> out;
  for (const LaurentPoly& v : vals) out.insert(v.to_text());
  return out;
}

}  // namespace

TEST_CASE("admissible orientations: counts and classifications") {
  SUBCASE("free loops take both directions") {
    const auto one_loop = admissible_orientations(loops_graph(1));
    REQUIRE(one_loop.size() == 2);
    std::multiset<int> signs;
    for (const auto& ao : one_loop) {
      REQUIRE(ao.orientation.loop_signs.size() == 1);
      signs.insert(ao.orientation.loop_signs[0]);
    }
    CHECK(signs == std::multiset<int>{-1, 1});
    CHECK(admissible_orientations(loops_graph(0)).size() == 1);
    CHECK(admissible_orientations(loops_graph(2)).size() == 4);
  }

  SUBCASE("curl graph: four orientations, two of each kind") {
    const auto orients = admissible_orientations(curl_graph());
    REQUIRE(orients.size() == 4);
    int alternating = 0;
    for (const auto& ao : orients) {
      int in_count = 0;
      for (int d = 0; d < 4; ++d) in_count += ao.orientation.inward[d];
      CHECK(in_count == 2);
      alternating += ao.alternating[0];
    }
    CHECK(alternating == 2);
  }

  SUBCASE("closed bigons") {
    const auto theta = admissible_orientations(theta_graph());
    REQUIRE(theta.size() == 6);
    int both_alt = 0;
    int both_crossing = 0;
    for (const auto& ao : theta) {
      if (ao.alternating[0] && ao.alternating[1]) ++both_alt;
      if (!ao.alternating[0] && !ao.alternating[1]) ++both_crossing;
    }
    CHECK(both_alt == 2);
    CHECK(both_crossing == 4);
    CHECK(admissible_orientations(pinched_bigon()).size() == 8);
  }

  SUBCASE("open bigon supports ten compatible orientations") {
    // The bigon tangle before closing: two shared edges plus four free legs.
    // Counting balanced direction patterns directly gives the term count of
    // the two-vertex expansion.
    int count = 0;
    for (int m = 0; m < 64; ++m) {
      const int e1_into_u = m & 1 ? 1 : 0;
      const int e2_into_u = m & 2 ? 1 : 0;
      const int in_u = e1_into_u + e2_into_u + ((m >> 2) & 1) + ((m >> 3) & 1);
      const int in_w = (1 - e1_into_u) + (1 - e2_into_u) + ((m >> 4) & 1) + ((m >> 5) & 1);
      if (in_u == 2 && in_w == 2) ++count;
    }
    CHECK(count == 10);
  }
}

TEST_CASE("alternating expansion shapes") {
  SUBCASE("crossing-type orientations expand to themselves") {
    const FourValentGraph curl = curl_graph();
    for (const auto& ao : admissible_orientations(curl)) {
      if (ao.alternating[0]) continue;
      const auto terms = alternating_vertex_expand(curl, ao);
      REQUIRE(terms.size() == 1);
      CHECK(terms[0].coeff == LaurentPoly::one());
      CHECK(terms[0].web.graph.map.sites == 1);
      for (int d = 0; d < 4; ++d) CHECK(terms[0].splice[d] == -1);
    }
  }

  SUBCASE("one alternating vertex gives weights q and 1/q") {
    const FourValentGraph curl = curl_graph();
    for (const auto& ao : admissible_orientations(curl)) {
      if (!ao.alternating[0]) continue;
      const auto terms = alternating_vertex_expand(curl, ao);
      REQUIRE(terms.size() == 2);
      std::vector<LaurentPoly> coeffs{terms[0].coeff, terms[1].coeff};
      CHECK(value_multiset(coeffs) ==
            value_multiset({LaurentPoly::q_power(1), LaurentPoly::q_power(-1)}));
      for (const auto& term : terms) CHECK(term.web.graph.map.sites == 0);
    }
  }

  SUBCASE("two alternating vertices give q^2, 1, 1, q^-2") {
    const FourValentGraph bigon = pinched_bigon();
    bool found = false;
    for (const auto& ao : admissible_orientations(bigon)) {
      if (!ao.alternating[0] || !ao.alternating[1]) continue;
      found = true;
      const auto terms = alternating_vertex_expand(bigon, ao);
      REQUIRE(terms.size() == 4);
      std::vector<LaurentPoly> coeffs;
      for (const auto& term : terms) coeffs.push_back(term.coeff);
      CHECK(value_multiset(coeffs) ==
            value_multiset({LaurentPoly::q_power(2), LaurentPoly::one(),
                            LaurentPoly::one(), LaurentPoly::q_power(-2)}));
      break;
    }
    CHECK(found);
  }
}

TEST_CASE("graph evaluation anchors") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(graph_eval(loops_graph(1), n) == delta(n));
    CHECK(graph_eval(loops_graph(3), n) == delta(n).pow(3));
    CHECK(graph_eval(curl_graph(), n) == curl_value(n));
    CHECK(graph_eval(theta_graph(), n) ==
          (quantum_integer(2 * n - 3) + LaurentPoly::one()) * delta(n) +
              quantum_integer(2) * curl_value(n));
  }
}

TEST_CASE("graph evaluation rejects bad input") {
  CHECK_THROWS_AS(graph_eval(curl_graph(), 1), std::invalid_argument);
  FourValentGraph no_outer = curl_graph();
  no_outer.map.outer_dart = -1;
  CHECK_THROWS_AS(graph_eval(no_outer, 2), std::invalid_argument);

  PlanarMap big;
  big.sites = 17;
  big.pairing.resize(17 * 4);
  for (int s = 0; s < 17; ++s) {
    big.pairing[4 * s + 0] = 4 * s + 1;
    big.pairing[4 * s + 1] = 4 * s + 0;
    big.pairing[4 * s + 2] = 4 * s + 3;
    big.pairing[4 * s + 3] = 4 * s + 2;
  }
  big.outer_dart = 0;
  CHECK_THROWS_AS(graph_eval(FourValentGraph{big}, 2), std::invalid_argument);
}

TEST_CASE("per-orientation curl contributions") {
  const FourValentGraph curl = curl_graph();
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    const LaurentPoly qn = quantum_integer(n);
    const LaurentPoly cross_pos =
        LaurentPoly::q_power(2 - 2 * n) *
        (LaurentPoly::q_power(1) * qn * qn - LaurentPoly::q_power(n) * qn);
    const LaurentPoly cross_neg =
        LaurentPoly::q_power(2 * n - 2) *
        (LaurentPoly::q_power(-1) * qn * qn - LaurentPoly::q_power(-n) * qn);
    const LaurentPoly alt_a =
        LaurentPoly::q_power(2 - n) * qn + LaurentPoly::q_power(-1) * qn * qn;
    const LaurentPoly alt_b =
        LaurentPoly::q_power(1) * qn * qn + LaurentPoly::q_power(n - 2) * qn;

    std::vector<LaurentPoly> got;
    LaurentPoly total;
    for (const auto& ao : admissible_orientations(curl)) {
      got.push_back(orientation_value(curl, ao, n));
      total += got.back();
    }
    CHECK(value_multiset(got) == value_multiset({cross_pos, cross_neg, alt_a, alt_b}));
    CHECK(total == curl_value(n));
  }
}

TEST_CASE("three-way resolution: explicit one-crossing identity") {
  for (const std::string name : {"curl_pos", "curl_neg"}) {
    for (int n = 2; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const LinkDiagram d = fixture(name);
      const LaurentPoly direct = kauffman_state_sum(d, n);
      const LaurentPoly right = kauffman_state_sum(splice_site(d, 0, true), n);
      const LaurentPoly left = kauffman_state_sum(splice_site(d, 0, false), n);
      const LaurentPoly vertex = graph_eval(underlying_graph(d), n);
      CHECK(direct == LaurentPoly::q_power(1) * right + LaurentPoly::q_power(-1) * left -
                          vertex);
    }
  }
}

TEST_CASE("three-way resolution: switch relation at every crossing") {
  const LaurentPoly z = q_power_difference(1);
  for (const std::string name : {"hopf", "trefoil_right", "figure_eight"}) {
    const LinkDiagram d = fixture(name);
    for (int s = 0; s < d.map.sites; ++s) {
      CAPTURE(name);
      CAPTURE(s);
      const LaurentPoly lhs =
          kauffman_state_sum(d, 2) - kauffman_state_sum(switch_crossing(d, s), 2);
      const LaurentPoly rhs = z * (kauffman_state_sum(splice_site(d, s, true), 2) -
                                   kauffman_state_sum(splice_site(d, s, false), 2));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cross-engine agreement on fixtures") {
  for (const std::string& name : fixture_names()) {
    for (int n = 2; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const LinkDiagram d = fixture(name);
      const LaurentPoly by_graph = kauffman_state_sum(d, n);
      CHECK(by_graph == kauffman_skein(d, n));
      CHECK(by_graph == jaeger_kauffman(d, n));
    }
  }
  CHECK_THROWS_AS(kauffman_state_sum(fixture("hopf"), 1), std::invalid_argument);
}

TEST_CASE("resolution sum ignores orientation and rejects big diagrams") {
  LinkDiagram d = fixture("trefoil_right");
  REQUIRE(d.orientation.has_value());
  LinkDiagram plain = d;
  plain.orientation.reset();
  CHECK(kauffman_state_sum(d, 2) == kauffman_state_sum(plain, 2));

  LinkDiagram big = fixture("curl_pos");
  for (int i = 0; i < 12; ++i) big = insert_curl(big, 0, i % 2 ? 1 : -1);
  REQUIRE(big.map.sites == 13);
  CHECK_THROWS_AS(kauffman_state_sum(big, 2), std::invalid_argument);
}

TEST_CASE("outer face and relabeling invariance") {
  SUBCASE("any outer dart gives the same value") {
    std::vector<LaurentPoly> vals;
    for (int outer = 0; outer < 8; ++outer) {
      skein_memo_clear();
      FourValentGraph g = theta_graph();
      g.map.outer_dart = outer;
      vals.push_back(graph_eval(g, 2));
    }
    for (const LaurentPoly& v : vals) CHECK(v == vals[0]);

    skein_memo_clear();
    FourValentGraph c = curl_graph();
    c.map.outer_dart = 2;
    CHECK(graph_eval(c, 3) == curl_value(3));
  }

  SUBCASE("site relabeling and slot rotation") {
    LinkDiagram wrapped;
    wrapped.map = theta_graph().map;
    wrapped.over_slot = {0, 0};
    const LinkDiagram moved = relabeled(wrapped, {1, 0}, {1, 3});
    skein_memo_clear();
    const LaurentPoly base = graph_eval(theta_graph(), 2);
    skein_memo_clear();
    CHECK(graph_eval(FourValentGraph{moved.map}, 2) == base);
    skein_memo_clear();
    CHECK(graph_eval(FourValentGraph{reflected(wrapped).map}, 2) == base);
  }
}

TEST_CASE("graph identities hold in every standard closure") {
  for (const GraphIdentity id :
       {GraphIdentity::R0, GraphIdentity::R1, GraphIdentity::R2, GraphIdentity::R3}) {
    const auto closures = standard_closures(id);
    REQUIRE(closures.size() >= 3);
    for (std::size_t c = 0; c < closures.size(); ++c) {
      for (int n = 2; n <= 4; ++n) {
        CAPTURE(static_cast<int>(id));
        CAPTURE(c);
        CAPTURE(n);
        CHECK(check_graph_identity(id, closures[c], n));
      }
    }
  }
}

TEST_CASE("identity checker rejects ill-fitting closures") {
  CHECK_THROWS_AS(check_graph_identity(GraphIdentity::R1, GraphClosure{{1, 0, 3, 2}, 0, false, false}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_graph_identity(GraphIdentity::R2, GraphClosure{{2, 3, 0, 1}, 0, false, false}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_graph_identity(GraphIdentity::R2, GraphClosure{{0, 1, 2, 3}, 0, false, false}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_graph_identity(GraphIdentity::R0, GraphClosure{{}, 0, false, true}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_graph_identity(GraphIdentity::R2, GraphClosure{{1, 0, 3, 2}, -1, false, false}, 2),
                  std::invalid_argument);
}

TEST_CASE("serial and parallel engines agree") {
  skein_memo_clear();
  const LaurentPoly par_graph = graph_eval(theta_graph(), 3);
  skein_memo_clear();
  CHECK(graph_eval_serial(theta_graph(), 3) == par_graph);

  skein_memo_clear();
  const LaurentPoly par_sum = kauffman_state_sum(fixture("trefoil_right"), 2);
  skein_memo_clear();
  CHECK(kauffman_state_sum_serial(fixture("trefoil_right"), 2) == par_sum);
}

TEST_CASE("resolution engine is invariant along a random move trail") {
  std::mt19937 rng(271828);
  const LinkDiagram start = fixture("hopf");
  const LaurentPoly base = kauffman_state_sum(start, 2);
  const auto trail = testing::random_reidemeister_trail(start, 6, 5, rng);
  for (std::size_t i = 0; i < trail.size(); ++i) {
    CAPTURE(i);
    CHECK(kauffman_state_sum(trail[i], 2) == base);
  }
}
