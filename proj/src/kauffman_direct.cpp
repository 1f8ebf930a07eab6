/**
 * @file kauffman_direct.cpp
 * @brief Descending-diagram skein recursion for the Kauffman polynomial.
 */
#include "kauffman_direct.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "memo.hpp"
#include "slnpoly.hpp"

namespace kauffman {

namespace {

/// True when the inward dart @p arrival lies on the over strand of its site.
bool arrives_over(const LinkDiagram& d, int arrival) {
  return (PlanarMap::slot_of(arrival) & 1) ==
         d.over_slot[PlanarMap::site_of(arrival)];
}

/**
 * @brief First site whose first visit arrives on the under strand, or -1.
 *
 * Strand components are walked in increasing id order, each from its
 * smallest dart pointing along the reference orientation; a diagram with no
 * bad site is descending, i.e. an unlink whose components are stacked in
 * walk order.  The reference orientation depends only on the underlying
 * 4-valent map, so switching crossings never changes the walk itself.
 */
int first_bad_site(const LinkDiagram& d, const Orientation& o) {
  const PlanarMap& m = d.map;
  const std::vector<int> comp = component_ids(m);
  const int ncomp =
      m.sites == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<int> start(ncomp, m.darts());
  for (int x = 0; x < m.darts(); ++x)
    if (!o.inward[x]) start[comp[x]] = std::min(start[comp[x]], x);
  std::vector<uint8_t> anchored(m.sites, 0);
  for (int c = 0; c < ncomp; ++c) {
    int x = start[c];
    do {
      const int a = m.alpha(x);
      const int s = PlanarMap::site_of(a);
      if (!anchored[s]) {
        anchored[s] = 1;
        if (!arrives_over(d, a)) return s;
      }
      x = PlanarMap::sigma2(a);
    } while (x != start[c]);
  }
  return -1;
}

/**
 * @brief Self-writhe of each strand component under @p o.
 *
 * Only self-crossings count; their signs do not depend on which way the
 * component is oriented, so the result is an invariant of the unoriented
 * diagram.
 */
std::vector<int> component_self_writhes(const LinkDiagram& d,
                                        const Orientation& o) {
  LinkDiagram t = d;
  t.orientation = o;
  const std::vector<int> comp = component_ids(d.map);
  const int ncomp =
      d.map.sites == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<int> w(ncomp, 0);
  for (int s = 0; s < d.map.sites; ++s) {
    const int ca = comp[PlanarMap::dart_at(s, 0)];
    const int cb = comp[PlanarMap::dart_at(s, 1)];
    if (ca == cb) w[ca] += crossing_sign(t, s);
  }
  return w;
}

LaurentPoly kauffman_eval(const LinkDiagram& d, int n);

/// Connected, loop-free, unoriented diagram.
LaurentPoly kauffman_connected(const LinkDiagram& d, int n) {
  const std::string key =
      "K" + std::to_string(n) + "|" + canonical_key(d, false);
  LaurentPoly value;
  if (skein_memo().find(key, value)) return value;
  const Orientation ref = default_orientation(d.map);
  const int s = first_bad_site(d, ref);
  if (s < 0) {
    value = LaurentPoly::one();
    const LaurentPoly delta = unknot_value(n);
    for (int w : component_self_writhes(d, ref))
      value *= delta.shifted((2 * n - 1) * w);
  } else {
    // Switching the bad crossing changes the value by (q - q^-1) times the
    // difference of the two smoothings; no sign cases arise because the
    // switch itself swaps the roles of the two smoothings.
    value = kauffman_eval(switch_crossing(d, s), n);
    value += q_power_difference(1) *
             (kauffman_eval(splice_site(d, s, true), n) -
              kauffman_eval(splice_site(d, s, false), n));
  }
  skein_memo().store(key, value);
  return value;
}

/// Any unoriented diagram: strips free loops, splits connected components.
LaurentPoly kauffman_eval(const LinkDiagram& d, int n) {
  LaurentPoly out =
      unknot_value(n).pow(static_cast<unsigned>(d.map.free_loops));
  if (d.map.sites == 0) return out;
  const int ncomp = d.map.component_count();
  for (int c = 0; c < ncomp; ++c)
    out *= kauffman_connected(component_diagram(d, c), n);
  return out;
}

}  // namespace

LaurentPoly kauffman_skein(const LinkDiagram& d, int n) {
  if (n < 2) throw std::invalid_argument("kauffman_skein requires n >= 2");
  LinkDiagram plain = d;
  plain.orientation.reset();
  return kauffman_eval(plain, n);
}

}  // namespace kauffman
