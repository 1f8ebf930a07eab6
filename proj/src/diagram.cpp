/**
 * @file diagram.cpp
 * @brief Link diagram and 4-valent graph operations.
 */
#include "diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kauffman {

void LinkDiagram::validate() const {
  map.validate();
  if (static_cast<int>(over_slot.size()) != map.sites)
    throw std::invalid_argument("over_slot size must equal site count");
  for (uint8_t o : over_slot)
    if (o > 1) throw std::invalid_argument("over_slot entries must be 0 or 1");
  if (orientation) {
    const Orientation& o = *orientation;
    if (static_cast<int>(o.inward.size()) != map.darts() ||
        static_cast<int>(o.loop_signs.size()) != map.free_loops)
      throw std::invalid_argument("orientation size mismatch");
    for (int d = 0; d < map.darts(); ++d) {
      if ((o.inward[d] ^ o.inward[map.alpha(d)]) != 1)
        throw std::invalid_argument("orientation incoherent along an edge");
      if ((o.inward[d] ^ o.inward[PlanarMap::sigma2(d)]) != 1)
        throw std::invalid_argument("orientation incoherent along a strand");
    }
    for (int8_t s : o.loop_signs)
      if (s != 1 && s != -1) throw std::invalid_argument("loop sign must be +1 or -1");
  }
}

void OrientedGraph::validate() const {
  graph.validate();
  const PlanarMap& m = graph.map;
  if (static_cast<int>(orientation.inward.size()) != m.darts() ||
      static_cast<int>(orientation.loop_signs.size()) != m.free_loops)
    throw std::invalid_argument("orientation size mismatch");
  for (int d = 0; d < m.darts(); ++d) {
    if ((orientation.inward[d] ^ orientation.inward[m.alpha(d)]) != 1)
      throw std::invalid_argument("orientation incoherent along an edge");
    // Crossing type: each strand carries flow through the vertex.
    if ((orientation.inward[d] ^ orientation.inward[PlanarMap::sigma2(d)]) != 1)
      throw std::invalid_argument("vertex is not crossing type");
  }
}

FourValentGraph underlying_graph(const LinkDiagram& d) { return FourValentGraph{d.map}; }

// ---------------------------------------------------------------- components

namespace {

/// Traversal that continues straight through a site: next outward dart.
int strand_next(const PlanarMap& m, int d) { return PlanarMap::sigma2(m.alpha(d)); }

/// Orbit id per dart under strand_next; orbits indexed by discovery order.
std::vector<int> traversal_orbits(const PlanarMap& m, int& orbit_count) {
  std::vector<int> id(m.darts(), -1);
  int next = 0;
  for (int d = 0; d < m.darts(); ++d) {
    if (id[d] != -1) continue;
    int x = d;
    while (id[x] == -1) {
      id[x] = next;
      x = strand_next(m, x);
    }
    ++next;
  }
  orbit_count = next;
  return id;
}

}  // namespace

std::vector<int> component_ids(const PlanarMap& m) {
  int orbit_count = 0;
  const std::vector<int> orbit = traversal_orbits(m, orbit_count);
  // Each component is a pair of mutually reversed orbits {O, alpha(O)}.
  std::vector<int> orbit_min(orbit_count, m.darts());
  for (int d = 0; d < m.darts(); ++d)
    orbit_min[orbit[d]] = std::min(orbit_min[orbit[d]], d);
  std::vector<int> comp_min(m.darts(), -1);
  for (int d = 0; d < m.darts(); ++d) {
    const int a = orbit[d];
    const int b = orbit[m.alpha(d)];
    if (a == b) throw std::logic_error("strand traversal reverses onto itself");
    comp_min[d] = std::min(orbit_min[a], orbit_min[b]);
  }
  // Renumber by increasing representative dart.
  std::vector<int> reps;
  for (int d = 0; d < m.darts(); ++d)
    if (comp_min[d] == d) reps.push_back(d);
  std::vector<int> result(m.darts(), -1);
  for (int d = 0; d < m.darts(); ++d) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), comp_min[d]);
    result[d] = static_cast<int>(it - reps.begin());
  }
  return result;
}

int component_count_strands(const PlanarMap& m) {
  if (m.sites == 0) return 0;
  const std::vector<int> id = component_ids(m);
  return 1 + *std::max_element(id.begin(), id.end());
}

Orientation default_orientation(const PlanarMap& m) {
  Orientation o;
  o.inward.assign(m.darts(), 0);
  o.loop_signs.assign(m.free_loops, 1);
  int orbit_count = 0;
  const std::vector<int> orbit = traversal_orbits(m, orbit_count);
  std::vector<int> orbit_min(orbit_count, m.darts());
  for (int d = 0; d < m.darts(); ++d)
    orbit_min[orbit[d]] = std::min(orbit_min[orbit[d]], d);
  for (int d = 0; d < m.darts(); ++d) {
    // Outward iff d's orbit is the one holding the component's smallest dart.
    const int own = orbit_min[orbit[d]];
    const int other = orbit_min[orbit[m.alpha(d)]];
    o.inward[d] = own < other ? 0 : 1;
  }
  return o;
}

std::vector<Orientation> all_orientations(const PlanarMap& m) {
  const Orientation base = default_orientation(m);
  const int ncomp = component_count_strands(m);
  const int nloops = m.free_loops;
  std::vector<int> comp;
  if (m.sites > 0) comp = component_ids(m);
  std::vector<Orientation> out;
  const int total = 1 << (ncomp + nloops);
  out.reserve(total);
  for (int mask = 0; mask < total; ++mask) {
    Orientation o = base;
    for (int d = 0; d < m.darts(); ++d)
      if ((mask >> comp[d]) & 1) o.inward[d] ^= 1;
    for (int l = 0; l < nloops; ++l)
      if ((mask >> (ncomp + l)) & 1) o.loop_signs[l] = -1;
    out.push_back(std::move(o));
  }
  return out;
}

Orientation reversed(const Orientation& o) {
  Orientation r = o;
  for (auto& b : r.inward) b ^= 1;
  for (auto& s : r.loop_signs) s = static_cast<int8_t>(-s);
  return r;
}

// ------------------------------------------------------------ oriented data

int crossing_sign(const LinkDiagram& d, int s) {
  if (!d.orientation) throw std::invalid_argument("crossing_sign needs an orientation");
  const Orientation& o = *d.orientation;
  const int under0 = PlanarMap::dart_at(s, d.over_slot[s] ^ 1);
  const int u = o.inward[under0] ? under0 : PlanarMap::sigma2(under0);
  // Positive when the over strand comes in at the cw neighbour of under-in.
  return o.inward[PlanarMap::sigma_inv(u)] ? +1 : -1;
}

int writhe(const LinkDiagram& d) {
  if (!d.orientation)
    throw std::invalid_argument("writhe requires an oriented diagram");
  int w = 0;
  for (int s = 0; s < d.map.sites; ++s) w += crossing_sign(d, s);
  return w;
}

int self_writhe_sum(const LinkDiagram& d) {
  if (d.map.sites == 0) return 0;
  LinkDiagram tmp = d;
  if (!tmp.orientation) tmp.orientation = default_orientation(d.map);
  const std::vector<int> comp = component_ids(d.map);
  int w = 0;
  for (int s = 0; s < d.map.sites; ++s)
    if (comp[PlanarMap::dart_at(s, 0)] == comp[PlanarMap::dart_at(s, 1)])
      w += crossing_sign(tmp, s);
  return w;
}

SplicePairing seifert_pairing(const PlanarMap& m, const Orientation& o) {
  if (static_cast<int>(o.inward.size()) != m.darts())
    throw std::invalid_argument("orientation size mismatch");
  SplicePairing splice(m.darts(), -1);
  for (int s = 0; s < m.sites; ++s) {
    int a = -1;
    for (int slot = 0; slot < 4; ++slot) {
      const int x = PlanarMap::dart_at(s, slot);
      if (o.inward[x] && o.inward[PlanarMap::sigma(x)]) {
        a = x;
        break;
      }
    }
    if (a == -1)
      throw std::invalid_argument("site without adjacent inward pair");
    // Coherent smoothing: {a, sigma^3 a} and {sigma a, sigma^2 a}.
    const int b = PlanarMap::sigma_inv(a);
    splice[a] = b;
    splice[b] = a;
    splice[PlanarMap::sigma(a)] = PlanarMap::sigma2(a);
    splice[PlanarMap::sigma2(a)] = PlanarMap::sigma(a);
  }
  return splice;
}

int seifert_circle_count(const LinkDiagram& d) {
  const Orientation o =
      d.orientation ? *d.orientation : default_orientation(d.map);
  if (d.map.sites == 0) return d.map.free_loops;
  return circle_count(d.map, seifert_pairing(d.map, o)) + d.map.free_loops;
}

int rotation_number(const LinkDiagram& d) {
  if (!d.orientation)
    throw std::invalid_argument("rotation_number requires an orientation");
  if (d.map.sites == 0) {
    int total = 0;
    for (int8_t s : d.orientation->loop_signs) total += s;
    return total;
  }
  return signed_circle_sum(d.map, seifert_pairing(d.map, *d.orientation),
                           *d.orientation);
}

int rotation_number(const OrientedGraph& g) {
  const PlanarMap& m = g.graph.map;
  if (m.sites == 0) {
    int total = 0;
    for (int8_t s : g.orientation.loop_signs) total += s;
    return total;
  }
  return signed_circle_sum(m, seifert_pairing(m, g.orientation), g.orientation);
}

// ------------------------------------------------------------------- editing

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (auto& o : r.over_slot) o ^= 1;
  return r;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int site) {
  LinkDiagram r = d;
  r.over_slot.at(site) ^= 1;
  return r;
}

LinkDiagram splice_site(const LinkDiagram& d, int site, bool right_splice) {
  if (site < 0 || site >= d.map.sites) throw std::invalid_argument("bad site");
  SplicePairing splice(d.map.darts(), -1);
  const int u = PlanarMap::dart_at(site, d.over_slot[site] ^ 1);
  for (int x : {u, PlanarMap::sigma2(u)}) {
    const int p = right_splice ? PlanarMap::sigma(x) : PlanarMap::sigma_inv(x);
    splice[x] = p;
    splice[p] = x;
  }
  std::vector<uint8_t> removed(d.map.sites, 0);
  removed[site] = 1;
  const ContractionResult cr = contract(d.map, removed, splice);
  LinkDiagram out;
  out.map = cr.map;
  out.over_slot.reserve(d.map.sites - 1);
  for (int s = 0; s < d.map.sites; ++s)
    if (s != site) out.over_slot.push_back(d.over_slot[s]);
  if (d.orientation) {
    // Transport the orientation when the splice respects the flow; otherwise
    // the result is unoriented.  New loop signs are placeholders; nothing
    // downstream reads signs of loops created by splicing.
    bool coherent = true;
    for (int x = 4 * site; x < 4 * site + 4; ++x)
      coherent &= (d.orientation->inward[x] ^ d.orientation->inward[splice[x]]) == 1;
    if (coherent) {
      Orientation o;
      o.inward.assign(out.map.darts(), 0);
      for (int x = 0; x < d.map.darts(); ++x)
        if (cr.dart_map[x] != -1) o.inward[cr.dart_map[x]] = d.orientation->inward[x];
      o.loop_signs = d.orientation->loop_signs;
      o.loop_signs.resize(out.map.free_loops, 1);
      out.orientation = std::move(o);
    }
  }
  return out;
}

LinkDiagram relabeled(const LinkDiagram& d, const std::vector<int>& site_perm,
                      const std::vector<int>& slot_rot) {
  if (static_cast<int>(site_perm.size()) != d.map.sites ||
      static_cast<int>(slot_rot.size()) != d.map.sites)
    throw std::invalid_argument("permutation size mismatch");
  auto newdart = [&](int x) {
    return PlanarMap::dart_at(site_perm[PlanarMap::site_of(x)],
                              (PlanarMap::slot_of(x) + slot_rot[PlanarMap::site_of(x)]) & 3);
  };
  LinkDiagram r;
  r.map.sites = d.map.sites;
  r.map.free_loops = d.map.free_loops;
  r.map.pairing.assign(d.map.darts(), -1);
  for (int x = 0; x < d.map.darts(); ++x) r.map.pairing[newdart(x)] = newdart(d.map.alpha(x));
  r.map.outer_dart = d.map.outer_dart >= 0 ? newdart(d.map.outer_dart) : -1;
  r.over_slot.assign(d.map.sites, 0);
  for (int s = 0; s < d.map.sites; ++s)
    r.over_slot[site_perm[s]] = static_cast<uint8_t>((d.over_slot[s] + slot_rot[s]) & 1);
  if (d.orientation) {
    Orientation o;
    o.inward.assign(d.map.darts(), 0);
    for (int x = 0; x < d.map.darts(); ++x) o.inward[newdart(x)] = d.orientation->inward[x];
    o.loop_signs = d.orientation->loop_signs;
    r.orientation = std::move(o);
  }
  return r;
}

LinkDiagram reflected(const LinkDiagram& d) {
  auto newdart = [](int x) {
    return PlanarMap::dart_at(PlanarMap::site_of(x), (4 - PlanarMap::slot_of(x)) & 3);
  };
  LinkDiagram r;
  r.map.sites = d.map.sites;
  r.map.free_loops = d.map.free_loops;
  r.map.pairing.assign(d.map.darts(), -1);
  for (int x = 0; x < d.map.darts(); ++x) r.map.pairing[newdart(x)] = newdart(d.map.alpha(x));
  // Reflection reverses the cyclic order, so the gap left of a dart becomes
  // the gap on the reflected dart's other side.
  r.map.outer_dart = d.map.outer_dart >= 0
                         ? PlanarMap::sigma_inv(newdart(d.map.outer_dart))
                         : -1;
  r.over_slot = d.over_slot;  // the {0,2}/{1,3} split is reflection-invariant
  if (d.orientation) {
    Orientation o;
    o.inward.assign(d.map.darts(), 0);
    for (int x = 0; x < d.map.darts(); ++x) o.inward[newdart(x)] = d.orientation->inward[x];
    for (int8_t s : d.orientation->loop_signs)
      o.loop_signs.push_back(static_cast<int8_t>(-s));
    r.orientation = std::move(o);
  }
  return r;
}

LinkDiagram insert_curl(const LinkDiagram& d, int x, int sign) {
  if (x < 0 || x >= d.map.darts()) throw std::invalid_argument("bad dart");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const int y = d.map.alpha(x);
  const int u = d.map.sites;  // new site
  LinkDiagram r = d;
  r.map.sites += 1;
  r.map.pairing.resize(r.map.darts());
  const int u0 = PlanarMap::dart_at(u, 0), u1 = PlanarMap::dart_at(u, 1);
  const int u2 = PlanarMap::dart_at(u, 2), u3 = PlanarMap::dart_at(u, 3);
  r.map.pairing[x] = u0;
  r.map.pairing[u0] = x;
  r.map.pairing[y] = u1;
  r.map.pairing[u1] = y;
  r.map.pairing[u2] = u3;
  r.map.pairing[u3] = u2;
  r.over_slot.push_back(sign > 0 ? 1 : 0);
  if (d.orientation) {
    Orientation o = *d.orientation;
    o.inward.resize(r.map.darts());
    o.inward[u0] = d.orientation->inward[x] ^ 1;
    o.inward[u2] = o.inward[u0] ^ 1;
    o.inward[u1] = d.orientation->inward[y] ^ 1;
    o.inward[u3] = o.inward[u1] ^ 1;
    r.orientation = std::move(o);
  }
  return r;
}

namespace {

/// Face orbit (as a dart cycle under phi = alpha o sigma) containing d.
std::vector<int> face_cycle(const PlanarMap& m, int d) {
  std::vector<int> cycle;
  int x = d;
  do {
    cycle.push_back(x);
    x = m.alpha(PlanarMap::sigma(x));
  } while (x != d);
  return cycle;
}

/// True when the strand through dart x is the over strand at x's site.
bool strand_is_over(const LinkDiagram& d, int x) {
  return (PlanarMap::slot_of(x) & 1) == d.over_slot[PlanarMap::site_of(x)];
}

LinkDiagram r2_insert(const LinkDiagram& d, int x, int y) {
  if (x < 0 || x >= d.map.darts() || y < 0 || y >= d.map.darts())
    throw std::invalid_argument("bad dart");
  if (x == y || y == d.map.alpha(x))
    throw std::invalid_argument("R2 insert needs two distinct edges");
  const std::vector<int> face = d.map.face_ids();
  if (face[x] != face[y])
    throw std::invalid_argument("R2 insert needs darts on one face");
  const int xbar = d.map.alpha(x);
  const int ybar = d.map.alpha(y);
  const int u = d.map.sites, w = d.map.sites + 1;
  LinkDiagram r = d;
  r.map.sites += 2;
  r.map.pairing.resize(r.map.darts());
  auto U = [&](int slot) { return PlanarMap::dart_at(u, slot); };
  auto W = [&](int slot) { return PlanarMap::dart_at(w, slot); };
  auto join = [&](int p, int q) {
    r.map.pairing[p] = q;
    r.map.pairing[q] = p;
  };
  // Compass frame at both new sites: E,N,W,S = slots 0,1,2,3.  The strand of
  // x runs along the bottom of the shared face, the strand of y along the
  // top; the poked strand of x arches over through u (west) and w (east).
  join(x, U(3));
  join(U(1), W(1));
  join(W(3), xbar);
  join(y, W(0));
  join(W(2), U(0));
  join(U(2), ybar);
  r.over_slot.push_back(1);  // strand of x over at u
  r.over_slot.push_back(1);  // and at w
  if (d.orientation) {
    Orientation o = *d.orientation;
    o.inward.resize(r.map.darts());
    o.inward[U(3)] = o.inward[x] ^ 1;
    o.inward[U(1)] = o.inward[U(3)] ^ 1;
    o.inward[W(1)] = o.inward[U(1)] ^ 1;
    o.inward[W(3)] = o.inward[W(1)] ^ 1;
    o.inward[W(0)] = o.inward[y] ^ 1;
    o.inward[W(2)] = o.inward[W(0)] ^ 1;
    o.inward[U(0)] = o.inward[W(2)] ^ 1;
    o.inward[U(2)] = o.inward[U(0)] ^ 1;
    r.orientation = std::move(o);
  }
  r.validate();
  return r;
}

LinkDiagram r2_remove(const LinkDiagram& d, int a) {
  if (a < 0 || a >= d.map.darts()) throw std::invalid_argument("bad dart");
  const std::vector<int> cycle = face_cycle(d.map, a);
  if (cycle.size() != 2) throw std::invalid_argument("R2 remove needs a bigon face");
  const int p = cycle[0], rdart = cycle[1];
  const int s1 = PlanarMap::site_of(p), s2 = PlanarMap::site_of(rdart);
  if (s1 == s2) throw std::invalid_argument("bigon is a curl, not an R2 pair");
  // Bigon edges {sigma p, r} and {sigma r, p}; one of them must be the over
  // strand at both sites.
  const int e1s1 = PlanarMap::sigma(p), e1s2 = rdart;
  const int e2s1 = p, e2s2 = PlanarMap::sigma(rdart);
  const bool e1_over = strand_is_over(d, e1s1) && strand_is_over(d, e1s2);
  const bool e2_over = strand_is_over(d, e2s1) && strand_is_over(d, e2s2);
  if (!e1_over && !e2_over)
    throw std::invalid_argument("bigon strands are clasped, not poked");
  SplicePairing splice(d.map.darts(), -1);
  for (int s : {s1, s2})
    for (int slot = 0; slot < 4; ++slot) {
      const int dd = PlanarMap::dart_at(s, slot);
      splice[dd] = PlanarMap::sigma2(dd);  // strands pass straight through
    }
  std::vector<uint8_t> removed(d.map.sites, 0);
  removed[s1] = removed[s2] = 1;
  const ContractionResult cr = contract(d.map, removed, splice);
  LinkDiagram out;
  out.map = cr.map;
  for (int s = 0; s < d.map.sites; ++s)
    if (!removed[s]) out.over_slot.push_back(d.over_slot[s]);
  if (d.orientation) {
    Orientation o;
    o.inward.assign(out.map.darts(), 0);
    for (int xo = 0; xo < d.map.darts(); ++xo)
      if (cr.dart_map[xo] != -1) o.inward[cr.dart_map[xo]] = d.orientation->inward[xo];
    o.loop_signs = d.orientation->loop_signs;
    o.loop_signs.resize(out.map.free_loops, 1);
    out.orientation = std::move(o);
  }
  out.validate();
  return out;
}

LinkDiagram r3_slide(const LinkDiagram& d, int a) {
  if (a < 0 || a >= d.map.darts()) throw std::invalid_argument("bad dart");
  const std::vector<int> cycle = face_cycle(d.map, a);
  if (cycle.size() != 3) throw std::invalid_argument("R3 needs a triangle face");
  const std::array<int, 3> dd = {cycle[0], cycle[1], cycle[2]};
  const std::array<int, 3> site = {PlanarMap::site_of(dd[0]), PlanarMap::site_of(dd[1]),
                                   PlanarMap::site_of(dd[2])};
  if (site[0] == site[1] || site[1] == site[2] || site[0] == site[2])
    throw std::invalid_argument("R3 needs three distinct crossings");
  // Strand i runs along the triangle side from site i to site i+1, attaching
  // at sigma(d_i) and d_{i+1}.  t_i records whether strand i passes over
  // strand i-1 at site i; a cyclic pattern admits no slide.
  std::array<bool, 3> t{};
  for (int i = 0; i < 3; ++i) t[i] = strand_is_over(d, PlanarMap::sigma(dd[i]));
  if (t[0] == t[1] && t[1] == t[2])
    throw std::invalid_argument("triangle over/under pattern is cyclic");

  LinkDiagram r = d;
  // Outer-face transport.  The slide rearranges the regions around the
  // triangle: the triangle flips into the opposite gap at each site, the
  // region pinched at the corner of site i reopens along the new side that
  // avoids site i, and each old side-region closes into the corner of the
  // site it avoided.  Regions not touching the three sites keep their darts.
  std::vector<int> outer_cands;
  if (d.map.outer_dart >= 0) {
    const std::vector<int> face = d.map.face_ids();
    const int F = face[d.map.outer_dart];
    bool nonlocal = false;
    for (int x = 0; x < d.map.darts() && !nonlocal; ++x) {
      if (face[x] != F) continue;
      const int sx = PlanarMap::site_of(x);
      if (sx != site[0] && sx != site[1] && sx != site[2]) {
        outer_cands.push_back(x);
        nonlocal = true;
      }
    }
    if (!nonlocal) {
      if (face[dd[0]] == F) outer_cands.push_back(PlanarMap::sigma2(dd[0]));
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (face[PlanarMap::sigma2(dd[i])] == F)  // corner region at site i
          outer_cands.push_back(PlanarMap::sigma_inv(dd[j]));
        if (face[PlanarMap::sigma(dd[i])] == F ||
            face[PlanarMap::sigma_inv(dd[j])] == F)  // side region i
          outer_cands.push_back(dd[k]);
      }
    }
  }
  // Half-edge reattachment: tails formerly at sigma^3 d_i move to d_{i+1},
  // tails formerly at sigma^2 d_{i+1} move to sigma d_i, the three triangle
  // sides are discarded, and the flipped triangle {sigma^2 d_{i+1},
  // sigma^3 d_i} is added.
  std::vector<int> attach(d.map.darts(), -1);
  for (int x = 0; x < d.map.darts(); ++x) attach[x] = x;
  std::vector<uint8_t> boundary(d.map.darts(), 0);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    attach[PlanarMap::sigma_inv(dd[i])] = dd[j];            // sigma^3 d_i -> d_{i+1}
    attach[PlanarMap::sigma2(dd[j])] = PlanarMap::sigma(dd[i]);  // sigma^2 d_{i+1} -> sigma d_i
    boundary[PlanarMap::sigma(dd[i])] = 1;
    boundary[dd[j]] = 1;
  }
  std::vector<int> np(d.map.darts(), -1);
  for (int xo = 0; xo < d.map.darts(); ++xo) {
    const int yo = d.map.alpha(xo);
    if (xo > yo) continue;
    if (boundary[xo] && boundary[yo]) continue;  // old triangle side
    np[attach[xo]] = attach[yo];
    np[attach[yo]] = attach[xo];
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int pnew = PlanarMap::sigma2(dd[j]);
    const int qnew = PlanarMap::sigma_inv(dd[i]);
    np[pnew] = qnew;
    np[qnew] = pnew;
  }
  r.map.pairing = np;
  if (!outer_cands.empty()) {
    const std::vector<int> nface = r.map.face_ids();
    for (int c : outer_cands)
      if (nface[c] != nface[outer_cands.front()])
        throw std::logic_error("outer face transport split across the slide");
    r.map.outer_dart = outer_cands.front();
  }
  if (d.orientation) {
    Orientation o = *d.orientation;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      o.inward[dd[j]] = d.orientation->inward[PlanarMap::sigma_inv(dd[i])];
      o.inward[PlanarMap::sigma2(dd[j])] = o.inward[dd[j]] ^ 1;
      o.inward[PlanarMap::sigma(dd[i])] =
          d.orientation->inward[PlanarMap::sigma2(dd[j])];
      o.inward[PlanarMap::sigma_inv(dd[i])] = o.inward[PlanarMap::sigma(dd[i])] ^ 1;
    }
    r.orientation = std::move(o);
  }
  r.validate();
  return r;
}

}  // namespace

LinkDiagram apply_reidemeister(const LinkDiagram& d, Move move, MoveLocation loc) {
  switch (move) {
    case Move::R2:
      return loc.b >= 0 ? r2_insert(d, loc.a, loc.b) : r2_remove(d, loc.a);
    case Move::R3:
      return r3_slide(d, loc.a);
  }
  throw std::invalid_argument("unknown move");
}

// ------------------------------------------------------------------ PD input

namespace {

struct PdToken {
  std::string name;
  std::vector<long> args;
};

std::vector<PdToken> tokenize_pd(const std::string& text) {
  std::vector<PdToken> tokens;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    PdToken tok;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
      tok.name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i++]))));
    if (tok.name.empty())
      throw std::invalid_argument("expected a PD token name");
    skip();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw std::invalid_argument("expected '(' after PD token name");
    const char close = text[i] == '(' ? ')' : ']';
    ++i;
    while (true) {
      skip();
      if (i < text.size() && text[i] == close) {
        ++i;
        break;
      }
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) {
        // Allow single letters L/R as arguments (outer face side).
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
          const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
          if (c != 'l' && c != 'r')
            throw std::invalid_argument("expected a number in PD token");
          tok.args.push_back(c == 'l' ? -1 : -2);
          ++i;
          continue;
        }
        throw std::invalid_argument("expected a number in PD token");
      }
      long v = std::stol(text.substr(start, i - start));
      tok.args.push_back(neg ? -v : v);
    }
    tokens.push_back(std::move(tok));
    skip();
  }
  return tokens;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  const std::vector<PdToken> tokens = tokenize_pd(text);
  std::vector<std::array<long, 4>> crossings;
  long outer_label = -1;
  bool outer_right = false;
  for (const PdToken& tok : tokens) {
    if (tok.name == "x") {
      if (tok.args.size() != 4)
        throw std::invalid_argument("crossing token needs exactly 4 edge labels");
      crossings.push_back({tok.args[0], tok.args[1], tok.args[2], tok.args[3]});
    } else if (tok.name == "outer") {
      if (tok.args.size() != 2 || tok.args[0] <= 0 ||
          (tok.args[1] != -1 && tok.args[1] != -2))
        throw std::invalid_argument("outer token needs (edge, L|R)");
      outer_label = tok.args[0];
      outer_right = tok.args[1] == -2;
    } else {
      throw std::invalid_argument("unknown PD token: " + tok.name);
    }
  }

  LinkDiagram d;
  d.map.sites = static_cast<int>(crossings.size());
  d.map.pairing.assign(d.map.darts(), -1);
  d.over_slot.assign(d.map.sites, 1);  // tuple slot 0 is the incoming under edge
  if (d.map.sites == 0) {
    d.orientation = Orientation{};
    if (outer_label > 0) throw std::invalid_argument("outer token without crossings");
    return d;
  }

  // Tuple order is clockwise from the incoming under edge; slots run ccw.
  static constexpr int kTupleSlot[4] = {0, 3, 2, 1};
  std::map<long, std::vector<int>> occurrences;  // label -> darts, textual order
  for (int s = 0; s < d.map.sites; ++s)
    for (int pos = 0; pos < 4; ++pos)
      occurrences[crossings[s][pos]].push_back(PlanarMap::dart_at(s, kTupleSlot[pos]));
  for (const auto& [label, darts] : occurrences) {
    if (label <= 0) throw std::invalid_argument("edge labels must be positive");
    if (darts.size() != 2)
      throw std::invalid_argument("edge label " + std::to_string(label) +
                                  " must appear exactly twice");
    d.map.pairing[darts[0]] = darts[1];
    d.map.pairing[darts[1]] = darts[0];
  }

  // Outer face: left of the highest label's first occurrence, or as overridden.
  long chosen = outer_label > 0 ? outer_label : occurrences.rbegin()->first;
  auto it = occurrences.find(chosen);
  if (it == occurrences.end())
    throw std::invalid_argument("outer token names a missing edge");
  d.map.outer_dart = outer_label > 0 && outer_right
                         ? PlanarMap::sigma_inv(it->second[0])
                         : it->second[0];
  d.map.validate();

  // Orientation recovery.  Under strands anchor flow (slot 0 in, slot 2 out);
  // components without under passages use label numbering (labels increase by
  // one along the flow with a single wrap).  Incoherent numbering leaves the
  // diagram unoriented.
  int orbit_count = 0;
  const std::vector<int> orbit = traversal_orbits(d.map, orbit_count);
  std::vector<long> dart_label(d.map.darts(), 0);
  for (const auto& [label, darts] : occurrences)
    for (int x : darts) dart_label[x] = label;

  const std::vector<int> comp = component_ids(d.map);
  const int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
  // The two orbits of each component.
  std::vector<std::array<int, 2>> comp_orbits(ncomp, {-1, -1});
  for (int x = 0; x < d.map.darts(); ++x) {
    auto& co = comp_orbits[comp[x]];
    if (co[0] == -1 || co[0] == orbit[x]) {
      co[0] = orbit[x];
    } else if (co[1] == -1 || co[1] == orbit[x]) {
      co[1] = orbit[x];
    }
  }
  // Label range per component (for wrap detection).
  std::vector<long> comp_min(ncomp, LONG_MAX), comp_max(ncomp, 0);
  for (int x = 0; x < d.map.darts(); ++x) {
    comp_min[comp[x]] = std::min(comp_min[comp[x]], dart_label[x]);
    comp_max[comp[x]] = std::max(comp_max[comp[x]], dart_label[x]);
  }

  auto orbit_ok = [&](int c, int out_orbit) {
    // Checks both anchors and numbering for the direction whose outward darts
    // form out_orbit.
    for (int x = 0; x < d.map.darts(); ++x) {
      if (comp[x] != c || orbit[x] != out_orbit) continue;
      // x outward; its strand partner is inward.
      const int in_dart = PlanarMap::sigma2(x);
      if (PlanarMap::slot_of(x) == 0 || PlanarMap::slot_of(in_dart) == 2)
        return false;  // under anchors: slot 0 inward, slot 2 outward
      const long lin = dart_label[in_dart], lout = dart_label[x];
      if (!(lout == lin + 1 || (lin == comp_max[c] && lout == comp_min[c])))
        return false;
    }
    return true;
  };

  Orientation o;
  o.inward.assign(d.map.darts(), 0);
  bool oriented = true;
  for (int c = 0; c < ncomp && oriented; ++c) {
    const bool ok0 = orbit_ok(c, comp_orbits[c][0]);
    const bool ok1 = orbit_ok(c, comp_orbits[c][1]);
    int out_orbit;
    if (ok0 && !ok1) {
      out_orbit = comp_orbits[c][0];
    } else if (ok1 && !ok0) {
      out_orbit = comp_orbits[c][1];
    } else if (ok0 && ok1) {
      out_orbit = std::min(comp_orbits[c][0], comp_orbits[c][1]);
    } else {
      oriented = false;
      break;
    }
    for (int x = 0; x < d.map.darts(); ++x)
      if (comp[x] == c) o.inward[x] = orbit[x] == out_orbit ? 0 : 1;
  }
  if (oriented) d.orientation = std::move(o);
  d.validate();
  return d;
}

// ---------------------------------------------------------------------- JSON

namespace {

nlohmann::json map_to_json(const PlanarMap& m) {
  nlohmann::json j;
  j["sites"] = m.sites;
  j["pairing"] = m.pairing;
  j["free_loops"] = m.free_loops;
  j["outer_dart"] = m.outer_dart;
  return j;
}

PlanarMap map_from_json(const nlohmann::json& j) {
  PlanarMap m;
  m.sites = j.at("sites").get<int>();
  m.pairing = j.at("pairing").get<std::vector<int>>();
  m.free_loops = j.value("free_loops", 0);
  m.outer_dart = j.value("outer_dart", m.sites > 0 ? 0 : -1);
  return m;
}

std::optional<Orientation> orientation_from_json(const nlohmann::json& j,
                                                 const PlanarMap& m) {
  if (!j.contains("orientation") || j["orientation"].is_null()) return std::nullopt;
  Orientation o;
  o.inward = j["orientation"].at("inward").get<std::vector<uint8_t>>();
  o.loop_signs = j["orientation"].value("loop_signs", std::vector<int8_t>{});
  o.loop_signs.resize(m.free_loops, 1);
  return o;
}

void orientation_to_json(nlohmann::json& j, const Orientation& o) {
  j["orientation"] = {{"inward", o.inward}, {"loop_signs", o.loop_signs}};
}

}  // namespace

nlohmann::json to_json(const LinkDiagram& d) {
  nlohmann::json j = map_to_json(d.map);
  j["over_slot"] = d.over_slot;
  if (d.orientation) orientation_to_json(j, *d.orientation);
  return j;
}

LinkDiagram diagram_from_json(const nlohmann::json& j) {
  LinkDiagram d;
  d.map = map_from_json(j);
  d.over_slot = j.at("over_slot").get<std::vector<uint8_t>>();
  d.orientation = orientation_from_json(j, d.map);
  d.validate();
  return d;
}

nlohmann::json to_json(const FourValentGraph& g) { return map_to_json(g.map); }

FourValentGraph graph_from_json(const nlohmann::json& j) {
  FourValentGraph g;
  g.map = map_from_json(j);
  g.validate();
  return g;
}

// ------------------------------------------------------------ canonical form

namespace {

/// BFS code of one connected diagram from a start dart.
std::string bfs_code(const LinkDiagram& d, int start, bool with_orientation) {
  const PlanarMap& m = d.map;
  std::vector<int> visit_idx(m.sites, -1);
  std::vector<int> ref_slot(m.sites, -1);
  std::vector<int> order;
  order.reserve(m.sites);
  visit_idx[PlanarMap::site_of(start)] = 0;
  ref_slot[PlanarMap::site_of(start)] = PlanarMap::slot_of(start);
  order.push_back(PlanarMap::site_of(start));
  for (size_t k = 0; k < order.size(); ++k) {
    const int s = order[k];
    for (int rel = 0; rel < 4; ++rel) {
      const int x = PlanarMap::dart_at(s, (ref_slot[s] + rel) & 3);
      const int p = m.alpha(x);
      const int ps = PlanarMap::site_of(p);
      if (visit_idx[ps] == -1) {
        visit_idx[ps] = static_cast<int>(order.size());
        ref_slot[ps] = PlanarMap::slot_of(p);
        order.push_back(ps);
      }
    }
  }
  std::ostringstream code;
  for (int s : order) {
    for (int rel = 0; rel < 4; ++rel) {
      const int x = PlanarMap::dart_at(s, (ref_slot[s] + rel) & 3);
      const int p = m.alpha(x);
      const int ps = PlanarMap::site_of(p);
      code << visit_idx[ps] << '.' << ((PlanarMap::slot_of(p) - ref_slot[ps]) & 3) << ',';
    }
    code << 'o' << ((d.over_slot[s] + ref_slot[s]) & 1) << ';';
    if (with_orientation && d.orientation) {
      for (int rel = 0; rel < 4; ++rel)
        code << int(d.orientation->inward[PlanarMap::dart_at(s, (ref_slot[s] + rel) & 3)]);
      code << ';';
    }
  }
  return code.str();
}

}  // namespace

LinkDiagram component_diagram(const LinkDiagram& d, int c) {
  const std::vector<int> comp = d.map.site_component_ids();
  std::vector<int> site_map(d.map.sites, -1);
  int next = 0;
  for (int s = 0; s < d.map.sites; ++s)
    if (comp[s] == c) site_map[s] = next++;
  if (next == 0) throw std::invalid_argument("no such component");
  LinkDiagram sub;
  sub.map.sites = next;
  sub.map.pairing.assign(4 * next, -1);
  sub.map.outer_dart = 0;
  sub.over_slot.assign(next, 0);
  Orientation so;
  so.inward.assign(4 * next, 0);
  for (int s = 0; s < d.map.sites; ++s) {
    if (comp[s] != c) continue;
    sub.over_slot[site_map[s]] = d.over_slot[s];
    for (int slot = 0; slot < 4; ++slot) {
      const int x = PlanarMap::dart_at(s, slot);
      const int p = d.map.alpha(x);
      sub.map.pairing[PlanarMap::dart_at(site_map[s], slot)] =
          PlanarMap::dart_at(site_map[PlanarMap::site_of(p)], PlanarMap::slot_of(p));
      if (d.orientation) so.inward[PlanarMap::dart_at(site_map[s], slot)] =
          d.orientation->inward[x];
    }
  }
  if (d.orientation) sub.orientation = std::move(so);
  return sub;
}

std::string canonical_key(const LinkDiagram& d, bool include_orientation) {
  std::string key = "L" + std::to_string(d.map.free_loops) + ";";
  if (d.map.sites == 0) return key;
  const std::vector<int> comp = d.map.site_component_ids();
  const int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::string> component_keys;
  for (int c = 0; c < ncomp; ++c) {
    const LinkDiagram sub = component_diagram(d, c);
    std::string best;
    for (int start = 0; start < sub.map.darts(); ++start) {
      std::string code = bfs_code(sub, start, include_orientation);
      if (best.empty() || code < best) best = std::move(code);
    }
    component_keys.push_back(std::move(best));
  }
  std::sort(component_keys.begin(), component_keys.end());
  for (const std::string& k : component_keys) key += k + "|";
  return key;
}

}  // namespace kauffman
