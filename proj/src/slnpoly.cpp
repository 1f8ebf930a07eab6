/**
 * @file slnpoly.cpp
 * @brief Descending-diagram evaluation of the sl(n) polynomial and the
 *        vertex expansion for oriented graphs.
 */
#include "slnpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "memo.hpp"

namespace kauffman {

MemoCache& skein_memo() {
  static MemoCache cache;
  return cache;
}

std::size_t skein_memo_size() { return skein_memo().size(); }

void skein_memo_clear() { skein_memo().clear(); }

namespace {

/// True when the inward dart @p arrival lies on the over strand of its site.
bool arrives_over(const LinkDiagram& d, int arrival) {
  return (PlanarMap::slot_of(arrival) & 1) ==
         d.over_slot[PlanarMap::site_of(arrival)];
}

/**
 * @brief First site whose first visit arrives on the under strand, or -1.
 *
 * The walk follows each strand component from its smallest outward dart in
 * flow direction, components in increasing id order; a diagram with no such
 * site is descending (every strand passes over everything visited later).
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

/// Self-writhe of each strand component (mixed crossings excluded).
std::vector<int> component_self_writhes(const LinkDiagram& d) {
  const std::vector<int> comp = component_ids(d.map);
  const int ncomp =
      d.map.sites == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<int> w(ncomp, 0);
  for (int s = 0; s < d.map.sites; ++s) {
    const int ca = comp[PlanarMap::dart_at(s, 0)];
    const int cb = comp[PlanarMap::dart_at(s, 1)];
    if (ca == cb) w[ca] += crossing_sign(d, s);
  }
  return w;
}

LaurentPoly sln_eval(const LinkDiagram& d, int n);

/// Connected, loop-free oriented diagram.
LaurentPoly sln_connected(const LinkDiagram& d, int n) {
  const std::string key = "R" + std::to_string(n) + "|" + canonical_key(d, true);
  LaurentPoly value;
  if (skein_memo().find(key, value)) return value;
  const int s = first_bad_site(d, *d.orientation);
  if (s < 0) {
    value = LaurentPoly::one();
    for (int w : component_self_writhes(d))
      value *= quantum_integer(n).shifted(n * w);
  } else {
    // Conway skein at the first non-descending crossing: the diagram equals
    // the switched diagram plus-or-minus (q - q^-1) times the coherent
    // smoothing, the sign and the smoothing side given by the crossing sign.
    const int sign = crossing_sign(d, s);
    value = sln_eval(switch_crossing(d, s), n);
    const LaurentPoly skein =
        q_power_difference(1) * sln_eval(splice_site(d, s, sign > 0), n);
    if (sign > 0)
      value += skein;
    else
      value -= skein;
  }
  skein_memo().store(key, value);
  return value;
}

/// Any oriented diagram: strips free loops, splits connected components.
LaurentPoly sln_eval(const LinkDiagram& d, int n) {
  LaurentPoly out =
      quantum_integer(n).pow(static_cast<unsigned>(d.map.free_loops));
  if (d.map.sites == 0) return out;
  const int ncomp = d.map.component_count();
  for (int c = 0; c < ncomp; ++c) out *= sln_connected(component_diagram(d, c), n);
  return out;
}

/// The inward dart a at site v whose sigma(a) is inward too (crossing type).
int coherent_in_dart(const Orientation& o, int v) {
  for (int slot = 0; slot < 4; ++slot) {
    const int x = PlanarMap::dart_at(v, slot);
    if (o.inward[x] && o.inward[PlanarMap::sigma(x)]) return x;
  }
  throw std::invalid_argument("vertex is not of crossing type");
}

}  // namespace

LaurentPoly sln_link(const LinkDiagram& d, int n) {
  if (n < 2) throw std::invalid_argument("sl(n) evaluation needs n >= 2");
  d.validate();
  if (!d.orientation)
    throw std::invalid_argument("sln_link requires an oriented diagram");
  return sln_eval(d, n);
}

LaurentPoly moy_graph(const OrientedGraph& g, int n) {
  if (n < 2) throw std::invalid_argument("sl(n) evaluation needs n >= 2");
  g.validate();
  const PlanarMap& m = g.graph.map;
  const int V = m.sites;
  if (V > 25) throw std::invalid_argument("vertex expansion too large");
  LaurentPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << V); ++mask) {
    // Vertices in the subset are smoothed coherently (weight q each); the
    // rest are kept as positive crossings (weight -1 each).
    SplicePairing splice(m.darts(), -1);
    std::vector<uint8_t> removed(V, 0);
    int smoothed = 0;
    for (int v = 0; v < V; ++v) {
      if (!((mask >> v) & 1)) continue;
      removed[v] = 1;
      ++smoothed;
      const int a = coherent_in_dart(g.orientation, v);
      const int p = PlanarMap::sigma_inv(a);
      splice[a] = p;
      splice[p] = a;
      const int b = PlanarMap::sigma(a);
      const int q = PlanarMap::sigma2(a);
      splice[b] = q;
      splice[q] = b;
    }
    const ContractionResult cr = contract(m, removed, splice);
    LinkDiagram d;
    d.map = cr.map;
    d.over_slot.assign(cr.map.sites, 0);
    Orientation o;
    o.inward.assign(cr.map.darts(), 0);
    for (int x = 0; x < m.darts(); ++x)
      if (cr.dart_map[x] != -1) o.inward[cr.dart_map[x]] = g.orientation.inward[x];
    o.loop_signs = g.orientation.loop_signs;
    o.loop_signs.resize(cr.map.free_loops, 1);
    for (int v = 0; v < V; ++v) {
      if (removed[v]) continue;
      // A positive crossing under the flow: the over strand's inward dart is
      // the one followed by another inward dart counterclockwise.
      const int a = coherent_in_dart(g.orientation, v);
      d.over_slot[cr.site_map[v]] =
          static_cast<uint8_t>(PlanarMap::slot_of(a) & 1);
    }
    d.orientation = std::move(o);
    const int kept = V - smoothed;
    total += LaurentPoly::monomial(smoothed, (kept & 1) ? -1 : 1) * sln_eval(d, n);
  }
  return total;
}

}  // namespace kauffman
