/**
 * @file test_jaeger.cpp
 * @brief Tests for the oriented state-sum engine.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "fixtures.hpp"
#include "jaeger.hpp"
#include "kauffman_direct.hpp"
#include "laurent.hpp"
#include "oracles.hpp"
#include "slnpoly.hpp"

using namespace kauffman;
namespace kt = kauffman::testing;

namespace {

const LaurentPoly z = q_power_difference(1);

/// q^{(1-n) rot(d)} R(d), the rotation-corrected oriented evaluation.
LaurentPoly corrected(const LinkDiagram& d, int n) {
  return LaurentPoly::monomial((1 - n) * rotation_number(d), 1) *
         sln_link(d, n);
}

}  // namespace

TEST_CASE("crossingless diagrams") {
  LinkDiagram empty;
  empty.map.outer_dart = -1;
  for (int n : {2, 3}) {
    CAPTURE(n);
    CHECK(jaeger_kauffman(empty, n) == LaurentPoly::one());
    // The unknot has exactly two states (the two loop signs); their
    // rotation factors recover delta = q^{n-1}[n] + q^{1-n}[n].
    CHECK(jaeger_states(fixture("unknot")).size() == 2);
    CHECK(jaeger_kauffman(fixture("unknot"), n) == unknot_value(n));
  }
}

TEST_CASE("state table of the positive curl") {
  const LinkDiagram d = fixture("curl_pos");
  const std::vector<SpliceState> states = jaeger_states(d);
  REQUIRE(states.size() == 4);
  // (splice choice at the one site, rotation number) pairs.
  std::multiset<std::pair<int, int>> seen;
  for (const SpliceState& s : states)
    seen.insert({int(s.choices[0]), s.rot});
  const std::multiset<std::pair<int, int>> expected = {
      {0, +2}, {0, -2}, {1, 0}, {2, +1}};
  CHECK(seen == expected);
  // The four terms at n = 2: the kept crossing contributes q^{-2}*q^2 [2]
  // and q^{+2}*q^2 [2], the right splice (q - q^-1) [2]^2 (two circles,
  // rotations cancelling), the left splice -(q - q^-1) q^-1 [2].
  LaurentPoly total;
  for (const SpliceState& s : states) {
    const LaurentPoly term = jaeger_term(d, s, 2);
    total += term;
    const LaurentPoly two = quantum_integer(2);
    if (s.choices[0] == 0 && s.rot == +2) CHECK(term == two);
    if (s.choices[0] == 0 && s.rot == -2) CHECK(term == two.shifted(4));
    if (s.choices[0] == 1) CHECK(term == z * two * two);
    if (s.choices[0] == 2) CHECK(term == z * two.shifted(-1) *
                                             LaurentPoly::constant(-1));
  }
  CHECK(total == unknot_value(2).shifted(3));
  CHECK(total == kauffman_skein(d, 2));
}

TEST_CASE("state counts match the brute-force enumeration") {
  for (const std::string name : {"curl_pos", "curl_neg", "hopf"}) {
    CAPTURE(name);
    const LinkDiagram d = fixture(name);
    CHECK(jaeger_states(d).size() == kt::brute_force_state_count(d));
  }
}

TEST_CASE("agrees with the direct engine on every fixture") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    const LinkDiagram d = fixture(name);
    for (int n : {2, 3}) {
      CAPTURE(n);
      CHECK(jaeger_kauffman(d, n) == kauffman_skein(d, n));
    }
  }
  CHECK_THROWS_AS(jaeger_kauffman(fixture("unknot"), 1),
                  std::invalid_argument);
}

TEST_CASE("rotation-corrected skein identity at every crossing") {
  // q^{(1-n) rot} R satisfies the same Conway relation as R: the rotation
  // number is blind to which strand is on top and to the coherent splice.
  for (const std::string name : {"hopf", "trefoil_right", "figure_eight"}) {
    CAPTURE(name);
    LinkDiagram d = fixture(name);
    d.orientation = default_orientation(d.map);
    for (int n : {2, 3}) {
      CAPTURE(n);
      for (int s = 0; s < d.map.sites; ++s) {
        const bool pos = crossing_sign(d, s) > 0;
        const LinkDiagram& dpos = pos ? d : switch_crossing(d, s);
        const LinkDiagram dneg = switch_crossing(dpos, s);
        const LinkDiagram smooth = splice_site(dpos, s, true);
        CHECK(corrected(dpos, n) - corrected(dneg, n) ==
              z * corrected(smooth, n));
      }
    }
  }
}

TEST_CASE("rotation-corrected evaluation is R2-invariant") {
  LinkDiagram d = fixture("trefoil_left");
  d.orientation = default_orientation(d.map);
  int a = -1;
  int b = -1;
  // Find two darts on a common face to poke one strand over the other.
  const std::vector<int> face = d.map.face_ids();
  for (int x = 0; x < d.map.darts() && a < 0; ++x)
    for (int y = x + 1; y < d.map.darts(); ++y)
      if (face[x] == face[y] && PlanarMap::site_of(x) != PlanarMap::site_of(y)) {
        a = x;
        b = y;
        break;
      }
  REQUIRE(a >= 0);
  const LinkDiagram poked = apply_reidemeister(d, Move::R2, {a, b});
  for (int n : {2, 3}) {
    CAPTURE(n);
    CHECK(corrected(poked, n) == corrected(d, n));
  }
  // The full state sum is invariant as well.
  CHECK(jaeger_kauffman(poked, 2) == jaeger_kauffman(d, 2));
}

TEST_CASE("serial and parallel state sums coincide") {
  for (const std::string name : {"curl_neg", "hopf", "trefoil_right"}) {
    CAPTURE(name);
    const LinkDiagram d = fixture(name);
    CHECK(jaeger_kauffman(d, 2) == jaeger_kauffman_serial(d, 2));
    CHECK(jaeger_kauffman(d, 3) == jaeger_kauffman_serial(d, 3));
  }
}

TEST_CASE("state dump is replayable JSON") {
  const LinkDiagram d = fixture("hopf");
  std::ostringstream out;
  dump_states(d, 2, out);
  std::istringstream in(out.str());
  std::string line;
  LaurentPoly sum;
  std::size_t rows = 0;
  nlohmann::json last;
  while (std::getline(in, line)) {
    const nlohmann::json row = nlohmann::json::parse(line);
    last = row;
    if (row.contains("term")) {
      sum += LaurentPoly::parse(row["term"].get<std::string>());
      ++rows;
      CHECK(row["inward"].size() == std::size_t(d.map.darts()));
      CHECK(row["choices"].size() == std::size_t(d.map.sites));
    }
  }
  CHECK(rows == jaeger_states(d).size());
  CHECK(sum == jaeger_kauffman(d, 2));
  REQUIRE(last.contains("total"));
  CHECK(LaurentPoly::parse(last["total"].get<std::string>()) == sum);
  CHECK(last["states"].get<std::size_t>() == rows);
}
