/**
 * @file test_parallel.cpp
 * @brief Agreement between the OpenMP kernels and their serial reference
 *        implementations, plus memo-cache capacity behaviour.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "graphmodel.hpp"
#include "jaeger.hpp"
#include "kauffman_direct.hpp"
#include "memo.hpp"
#include "slnpoly.hpp"

using namespace kauffman;

namespace {

FourValentGraph theta_graph() {
  PlanarMap m;
  m.sites = 2;
  m.pairing = {7, 6, 5, 4, 3, 2, 1, 0};
  m.outer_dart = 0;
  return FourValentGraph{m};
}

}  // namespace

TEST_CASE("oriented state sum: parallel equals serial") {
  for (const std::string& name : fixture_names()) {
    for (int n = 2; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const LinkDiagram d = fixture(name);
      skein_memo_clear();
      const LaurentPoly par = jaeger_kauffman(d, n);
      skein_memo_clear();
      CHECK(par == jaeger_kauffman_serial(d, n));
    }
  }
}

TEST_CASE("graph engines: parallel equals serial") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    const LinkDiagram d = fixture(name);
    skein_memo_clear();
    const LaurentPoly par = kauffman_state_sum(d, 2);
    skein_memo_clear();
    CHECK(par == kauffman_state_sum_serial(d, 2));
  }
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    skein_memo_clear();
    const LaurentPoly par = graph_eval(theta_graph(), n);
    skein_memo_clear();
    CHECK(par == graph_eval_serial(theta_graph(), n));
  }
}

TEST_CASE("memo cache honours SKEIN_MEMO_CAP") {
  const LinkDiagram d = fixture("figure_eight");

  SUBCASE("capped runs stay within bound and stay correct") {
    skein_memo_clear();
    const LaurentPoly expected = kauffman_skein(d, 2);

    setenv("SKEIN_MEMO_CAP", "5", 1);
    skein_memo_clear();  // re-reads the cap
    CHECK(kauffman_skein(d, 2) == expected);
    CHECK(skein_memo_size() <= 5);

    setenv("SKEIN_MEMO_CAP", "0", 1);
    skein_memo_clear();
    CHECK(kauffman_skein(d, 2) == expected);
    CHECK(skein_memo_size() == 0);

    unsetenv("SKEIN_MEMO_CAP");
    skein_memo_clear();
    CHECK(kauffman_skein(d, 2) == expected);
    CHECK(skein_memo_size() > 5);
  }

  SUBCASE("unparsable caps mean unlimited") {
    setenv("SKEIN_MEMO_CAP", "many", 1);
    skein_memo_clear();
    const LaurentPoly expected = kauffman_skein(d, 2);
    CHECK(skein_memo_size() > 0);
    unsetenv("SKEIN_MEMO_CAP");
    skein_memo_clear();
    CHECK(kauffman_skein(d, 2) == expected);
  }
}

TEST_CASE("shared memo serves all engines without cross-talk") {
  // Interleave engines and ranks; every value must be reproducible from a
  // cold cache.
  const LinkDiagram d = fixture("trefoil_left");
  skein_memo_clear();
  const LaurentPoly a1 = kauffman_skein(d, 2);
  const LaurentPoly b1 = kauffman_state_sum(d, 2);
  const LaurentPoly c1 = sln_link(d, 2);
  const LaurentPoly a2 = kauffman_skein(d, 3);
  skein_memo_clear();
  CHECK(kauffman_skein(d, 3) == a2);
  CHECK(sln_link(d, 2) == c1);
  CHECK(kauffman_state_sum(d, 2) == b1);
  CHECK(kauffman_skein(d, 2) == a1);
  CHECK(a1 == b1);
}
