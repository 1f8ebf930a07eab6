/**
 * @file fixtures.cpp
 * @brief Construction of the named reference diagrams.
 */
#include "fixtures.hpp"

#include <stdexcept>

namespace kauffman {

namespace {

/// Crossingless circle.
LinkDiagram make_unknot() {
  LinkDiagram d;
  d.map.free_loops = 1;
  d.orientation = Orientation{{}, {1}};
  return d;
}

/**
 * One-crossing kinked circle.  The big lobe joins slots 0 and 1, the small
 * lobe slots 2 and 3; the outer face is the corner gap at slot 0.  With the
 * strand through slots {1,3} over, the curl is positive.
 */
LinkDiagram make_curl(int sign) {
  LinkDiagram d;
  d.map.sites = 1;
  d.map.pairing = {1, 0, 3, 2};
  d.map.outer_dart = 0;
  d.over_slot = {static_cast<uint8_t>(sign > 0 ? 1 : 0)};
  d.orientation = Orientation{{1, 0, 0, 1}, {}};
  return d;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "unknot",       "curl_pos",     "curl_neg", "hopf",
      "trefoil_right", "trefoil_left", "figure_eight"};
  return names;
}

LinkDiagram fixture(const std::string& name) {
  if (name == "unknot") return make_unknot();
  if (name == "curl_pos") return make_curl(+1);
  if (name == "curl_neg") return make_curl(-1);
  if (name == "hopf") return parse_pd("X(4,1,3,2) X(2,3,1,4)");
  if (name == "trefoil_right") return parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  if (name == "trefoil_left") return mirror(fixture("trefoil_right"));
  if (name == "figure_eight")
    return parse_pd("X(3,8,4,1) X(1,7,2,6) X(7,4,8,5) X(5,3,6,2)");
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace kauffman
