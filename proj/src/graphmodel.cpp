/**
 * @file graphmodel.cpp
 * @brief Orientation state sums for unoriented 4-valent graphs, the three-way
 *        crossing resolution, and the R0-R3 graph identity checker.
 */
#include "graphmodel.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "memo.hpp"
#include "slnpoly.hpp"

namespace kauffman {
namespace {

/// Sites this large would need more orientation states than is sane to sum.
constexpr int kMaxGraphSites = 16;
/// Bound on the 3^sites resolution sum.
constexpr int kMaxResolutionSites = 12;

void link(SplicePairing& sp, int a, int b) {
  sp[a] = b;
  sp[b] = a;
}

/// Memo key of a graph value: the map's canonical form, orientation-free.
std::string graph_key(const FourValentGraph& g, int n) {
  LinkDiagram plain;
  plain.map = g.map;
  plain.over_slot.assign(static_cast<std::size_t>(g.map.sites), 0);
  return "G" + std::to_string(n) + "|" + canonical_key(plain, false);
}

/// Enumerates balanced edge directions by depth-first search over edges.
/// edge_of maps a dart to the index of its edge in edges.
void enumerate_inward(const PlanarMap& m, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& edge_of, std::size_t at,
                      std::vector<uint8_t>& inward, std::vector<int>& in_count,
                      const std::vector<int8_t>& loop_signs,
                      std::vector<AdmissibleOrientation>& out) {
  if (at == edges.size()) {
    AdmissibleOrientation ao;
    ao.orientation.inward = inward;
    ao.orientation.loop_signs = loop_signs;
    ao.alternating.assign(static_cast<std::size_t>(m.sites), 0);
    for (int s = 0; s < m.sites; ++s) {
      const int first = PlanarMap::dart_at(s, 0);
      // A balanced site holds its inward pair on adjacent slots (crossing
      // type) or on opposite slots {0,2} / {1,3} (alternating).
      if (inward[static_cast<std::size_t>(first)] && inward[static_cast<std::size_t>(first + 2)])
        ao.alternating[static_cast<std::size_t>(s)] = 1;
      if (inward[static_cast<std::size_t>(first + 1)] && inward[static_cast<std::size_t>(first + 3)])
        ao.alternating[static_cast<std::size_t>(s)] = 1;
    }
    out.push_back(std::move(ao));
    return;
  }
  const auto [x, y] = edges[at];
  for (const int in_dart : {x, y}) {
    const int site = PlanarMap::site_of(in_dart);
    if (in_count[static_cast<std::size_t>(site)] == 2) continue;
    inward[static_cast<std::size_t>(in_dart)] = 1;
    ++in_count[static_cast<std::size_t>(site)];
    // A touched site dies once its inward slots can no longer be filled by
    // the edges still to come; checking at every touch catches every site,
    // because a site's undecided count only drops when it is touched.
    bool feasible = true;
    for (const int d : {x, y}) {
      const int s = PlanarMap::site_of(d);
      int undecided = 0;
      for (int sl = 0; sl < 4; ++sl)
        if (edge_of[static_cast<std::size_t>(PlanarMap::dart_at(s, sl))] >
            static_cast<int>(at))
          ++undecided;
      if (in_count[static_cast<std::size_t>(s)] + undecided < 2) feasible = false;
    }
    if (feasible)
      enumerate_inward(m, edges, edge_of, at + 1, inward, in_count, loop_signs, out);
    inward[static_cast<std::size_t>(in_dart)] = 0;
    --in_count[static_cast<std::size_t>(site)];
  }
}

/// Coherent-smoothing channels at a crossing-type site, written into sp.
void seifert_channels(const PlanarMap&, const Orientation& o, int site, SplicePairing& sp) {
  int a = -1;
  for (int sl = 0; sl < 4; ++sl) {
    const int d = PlanarMap::dart_at(site, sl);
    if (o.inward[d] && o.inward[PlanarMap::sigma(d)]) {
      a = d;
      break;
    }
  }
  if (a < 0) throw std::logic_error("site is not crossing type");
  link(sp, a, PlanarMap::sigma_inv(a));
  link(sp, PlanarMap::sigma(a), PlanarMap::sigma2(a));
}

LaurentPoly graph_eval_core(const FourValentGraph& g, int n, bool parallel) {
  if (n < 2) throw std::invalid_argument("graph evaluation requires n >= 2");
  g.validate();
  if (g.map.sites > 0 && g.map.outer_dart < 0)
    throw std::invalid_argument("graph with vertices needs an outer face");
  if (g.map.sites > kMaxGraphSites)
    throw std::invalid_argument("graph too large for the orientation sum");
  const std::string key = graph_key(g, n);
  LaurentPoly value;
  if (skein_memo().find(key, value)) return value;

  const std::vector<AdmissibleOrientation> orients = admissible_orientations(g);
  const std::int64_t count = static_cast<std::int64_t>(orients.size());
  LaurentPoly total;
#pragma omp parallel if (parallel)
  {
    LaurentPoly local;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t i = 0; i < count; ++i)
      local += orientation_value(g, orients[static_cast<std::size_t>(i)], n);
#pragma omp critical
    total += local;
  }
  skein_memo().store(key, total);
  return total;
}

LaurentPoly kauffman_state_sum_core(const LinkDiagram& d, int n, bool parallel) {
  if (n < 2) throw std::invalid_argument("kauffman_state_sum requires n >= 2");
  d.validate();
  const int sites = d.map.sites;
  if (sites > kMaxResolutionSites)
    throw std::invalid_argument("diagram too large for the resolution sum");
  std::int64_t patterns = 1;
  for (int i = 0; i < sites; ++i) patterns *= 3;

  LaurentPoly total;
#pragma omp parallel if (parallel)
  {
    LaurentPoly local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t p = 0; p < patterns; ++p) {
      std::vector<uint8_t> removed(static_cast<std::size_t>(sites), 0);
      SplicePairing sp(static_cast<std::size_t>(d.map.darts()), -1);
      int qexp = 0;
      bool negate = false;
      std::int64_t rest = p;
      for (int v = 0; v < sites; ++v, rest /= 3) {
        const int choice = static_cast<int>(rest % 3);
        if (choice == 0) {  // the crossing stays as a rigid vertex, weight -1
          negate = !negate;
          continue;
        }
        removed[static_cast<std::size_t>(v)] = 1;
        const int u = PlanarMap::dart_at(v, d.over_slot[static_cast<std::size_t>(v)] ? 0 : 1);
        if (choice == 1) {  // right splice at the under dart, weight q
          link(sp, u, PlanarMap::sigma(u));
          link(sp, PlanarMap::sigma2(u), PlanarMap::sigma_inv(u));
          ++qexp;
        } else {  // left splice, weight q^-1
          link(sp, u, PlanarMap::sigma_inv(u));
          link(sp, PlanarMap::sigma(u), PlanarMap::sigma2(u));
          --qexp;
        }
      }
      const ContractionResult cr = contract(d.map, removed, sp);
      local += LaurentPoly::monomial(qexp, negate ? -1 : 1) *
               graph_eval_serial(FourValentGraph{cr.map}, n);
    }
#pragma omp critical
    total += local;
  }
  return total;
}

// ------------------------------------------------------- identity tangles

/**
 * @brief A graph tangle: sites, internal edges, and an ordered boundary.
 *
 * stub[p] is the dart reaching boundary position p (-1 when the position is
 * an end of a crossing-free arc through the tangle, listed in stub_arcs).
 * Boundary positions are indexed in cyclic order.
 */
struct Tangle {
  int sites = 0;
  int free_loops = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stub;
  std::vector<std::pair<int, int>> stub_arcs;
};

/// One side of an identity: coefficient-tangle pairs to be summed.
using Side = std::vector<std::pair<LaurentPoly, Tangle>>;

struct IdentitySides {
  Side lhs;
  Side rhs;
  int stubs = 0;
};

void validate_closure(const GraphClosure& c, int stubs) {
  if (static_cast<int>(c.stub_pairing.size()) != stubs)
    throw std::invalid_argument("closure pairs " + std::to_string(c.stub_pairing.size()) +
                                " stubs but the identity has " + std::to_string(stubs));
  for (int i = 0; i < stubs; ++i) {
    const int j = c.stub_pairing[static_cast<std::size_t>(i)];
    if (j < 0 || j >= stubs || j == i || c.stub_pairing[static_cast<std::size_t>(j)] != i)
      throw std::invalid_argument("closure stub pairing is not a fixed-point-free involution");
  }
  for (int a = 0; a < stubs; ++a) {
    const int b = c.stub_pairing[static_cast<std::size_t>(a)];
    if (b <= a) continue;
    for (int x = a + 1; x < b; ++x) {
      const int y = c.stub_pairing[static_cast<std::size_t>(x)];
      if (y < a || y > b) throw std::invalid_argument("closure stub pairing crosses itself");
    }
  }
  if (c.spectator_loops < 0) throw std::invalid_argument("negative spectator loop count");
  if (c.through_vertex && stubs == 0)
    throw std::invalid_argument("through_vertex needs a stub to route");
}

/// Closes a tangle into a graph, with the closure's extra context.
FourValentGraph compose(Tangle t, const GraphClosure& c) {
  const int stubs = static_cast<int>(t.stub.size());
  if (c.through_vertex) {
    const int z = t.sites++;
    const int zd = 4 * z;
    if (t.stub[0] >= 0) {
      t.edges.emplace_back(t.stub[0], zd + 0);
    } else {
      for (auto it = t.stub_arcs.begin(); it != t.stub_arcs.end(); ++it) {
        if (it->first != 0 && it->second != 0) continue;
        const int other = it->first == 0 ? it->second : it->first;
        t.stub_arcs.erase(it);
        t.stub[static_cast<std::size_t>(other)] = zd + 0;
        break;
      }
    }
    t.stub[0] = zd + 3;
    t.edges.emplace_back(zd + 1, zd + 2);
  }
  if (c.spectator_curl) {
    const int s = t.sites++;
    t.edges.emplace_back(4 * s + 0, 4 * s + 1);
    t.edges.emplace_back(4 * s + 2, 4 * s + 3);
  }

  std::vector<int> arc_partner(static_cast<std::size_t>(stubs), -1);
  for (const auto& [i, j] : t.stub_arcs) {
    arc_partner[static_cast<std::size_t>(i)] = j;
    arc_partner[static_cast<std::size_t>(j)] = i;
  }
  std::vector<uint8_t> done(static_cast<std::size_t>(stubs), 0);
  std::vector<std::pair<int, int>> edges = t.edges;
  int loops = t.free_loops + c.spectator_loops;
  for (int p = 0; p < stubs; ++p) {
    if (done[static_cast<std::size_t>(p)] || t.stub[static_cast<std::size_t>(p)] < 0) continue;
    done[static_cast<std::size_t>(p)] = 1;
    int cur = c.stub_pairing[static_cast<std::size_t>(p)];
    while (t.stub[static_cast<std::size_t>(cur)] < 0) {
      done[static_cast<std::size_t>(cur)] = 1;
      const int hop = arc_partner[static_cast<std::size_t>(cur)];
      done[static_cast<std::size_t>(hop)] = 1;
      cur = c.stub_pairing[static_cast<std::size_t>(hop)];
    }
    done[static_cast<std::size_t>(cur)] = 1;
    edges.emplace_back(t.stub[static_cast<std::size_t>(p)], t.stub[static_cast<std::size_t>(cur)]);
  }
  for (int p = 0; p < stubs; ++p) {  // circles made of arcs and closure pairs only
    if (done[static_cast<std::size_t>(p)]) continue;
    int cur = p;
    do {
      done[static_cast<std::size_t>(cur)] = 1;
      const int hop = arc_partner[static_cast<std::size_t>(cur)];
      done[static_cast<std::size_t>(hop)] = 1;
      cur = c.stub_pairing[static_cast<std::size_t>(hop)];
    } while (cur != p);
    ++loops;
  }

  PlanarMap m;
  m.sites = t.sites;
  m.pairing.assign(static_cast<std::size_t>(4 * t.sites), -1);
  for (const auto& [x, y] : edges) {
    m.pairing[static_cast<std::size_t>(x)] = y;
    m.pairing[static_cast<std::size_t>(y)] = x;
  }
  m.free_loops = loops;
  m.outer_dart = t.sites > 0 ? 0 : -1;
  FourValentGraph g{m};
  g.validate();
  return g;
}

/**
 * Tangle data for the four identities.  R2's boundary reads (b, a, c, d)
 * around the bigon; R3's six boundary positions read (west, northwest,
 * northeast, east, southeast, southwest), the vertex legs pointing to the
 * four diagonal positions and the sliding strand entering west.
 */
IdentitySides identity_sides(GraphIdentity id, int n) {
  const LaurentPoly one = LaurentPoly::one();
  const LaurentPoly minus_one = LaurentPoly::constant(-1);
  IdentitySides out;
  switch (id) {
    case GraphIdentity::R0: {
      Tangle circle;
      circle.free_loops = 1;
      Tangle nothing;
      out.lhs.emplace_back(one, circle);
      out.rhs.emplace_back(unknot_value(n), nothing);
      out.stubs = 0;
      return out;
    }
    case GraphIdentity::R1: {
      Tangle kink;
      kink.sites = 1;
      kink.edges = {{2, 3}};
      kink.stub = {0, 1};
      Tangle arc;
      arc.stub = {-1, -1};
      arc.stub_arcs = {{0, 1}};
      out.lhs.emplace_back(one, kink);
      out.rhs.emplace_back(quantum_integer(2 * n - 2) + quantum_integer(2), arc);
      out.stubs = 2;
      return out;
    }
    case GraphIdentity::R2: {
      Tangle bigon;  // vertices U, W joined by two parallel edges
      bigon.sites = 2;
      bigon.edges = {{2, 5}, {3, 4}};
      bigon.stub = {0, 1, 6, 7};
      Tangle capcup;
      capcup.stub = {-1, -1, -1, -1};
      capcup.stub_arcs = {{0, 1}, {2, 3}};
      Tangle vertex;
      vertex.sites = 1;
      vertex.stub = {0, 1, 2, 3};
      out.lhs.emplace_back(one, bigon);
      out.rhs.emplace_back(quantum_integer(2 * n - 3) + one, capcup);
      out.rhs.emplace_back(quantum_integer(2), vertex);
      out.stubs = 4;
      return out;
    }
    case GraphIdentity::R3:
      break;
  }

  // R3: ten tangles, five per side; positions (W, NW, NE, E, SE, SW).
  // Vertex V uses slots (0=NE, 1=NW, 2=SW, 3=SE); the strand vertices W1, W2
  // use slots (0=toward E, 1=up, 2=toward W, 3=down).
  const LaurentPoly corner = minus_one * (quantum_integer(2 * n - 4));
  Tangle a1;  // strand passing below V through W1 (left) and W2 (right)
  a1.sites = 3;
  a1.edges = {{5, 2}, {4, 10}, {9, 3}};
  a1.stub = {6, 1, 0, 8, 11, 7};
  Tangle b1;  // V alone, strand turned back below
  b1.sites = 1;
  b1.stub = {2, 1, 0, 3, -1, -1};
  b1.stub_arcs = {{4, 5}};
  Tangle c1;  // V pushed northwest, corner arc west-southwest
  c1.sites = 1;
  c1.stub = {-1, 1, 0, 3, 2, -1};
  c1.stub_arcs = {{0, 5}};
  Tangle d1;  // V pushed northeast, corner arc east-southeast
  d1.sites = 1;
  d1.stub = {2, 1, 0, -1, -1, 3};
  d1.stub_arcs = {{3, 4}};
  Tangle e1;  // all three strands turned back
  e1.stub = {-1, -1, -1, -1, -1, -1};
  e1.stub_arcs = {{0, 5}, {1, 2}, {3, 4}};

  Tangle a2;  // the slid picture: strand passing above V
  a2.sites = 3;
  a2.edges = {{1, 7}, {4, 10}, {0, 11}};
  a2.stub = {6, 5, 9, 8, 3, 2};
  Tangle b2;
  b2.sites = 1;
  b2.stub = {1, -1, -1, 0, 3, 2};
  b2.stub_arcs = {{1, 2}};
  Tangle c2;
  c2.sites = 1;
  c2.stub = {1, 0, -1, -1, 3, 2};
  c2.stub_arcs = {{2, 3}};
  Tangle d2;
  d2.sites = 1;
  d2.stub = {-1, -1, 1, 0, 3, 2};
  d2.stub_arcs = {{0, 1}};
  Tangle e2;
  e2.stub = {-1, -1, -1, -1, -1, -1};
  e2.stub_arcs = {{0, 1}, {4, 5}, {2, 3}};

  out.lhs.emplace_back(one, a1);
  out.lhs.emplace_back(one, b1);
  out.lhs.emplace_back(minus_one, c1);
  out.lhs.emplace_back(minus_one, d1);
  out.lhs.emplace_back(corner, e1);
  out.rhs.emplace_back(one, a2);
  out.rhs.emplace_back(one, b2);
  out.rhs.emplace_back(minus_one, c2);
  out.rhs.emplace_back(minus_one, d2);
  out.rhs.emplace_back(corner, e2);
  out.stubs = 6;
  return out;
}

}  // namespace

std::vector<AdmissibleOrientation> admissible_orientations(const FourValentGraph& g) {
  g.validate();
  const PlanarMap& m = g.map;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_of(static_cast<std::size_t>(m.darts()), -1);
  for (int d = 0; d < m.darts(); ++d) {
    if (d >= m.alpha(d)) continue;
    edge_of[static_cast<std::size_t>(d)] = static_cast<int>(edges.size());
    edge_of[static_cast<std::size_t>(m.alpha(d))] = static_cast<int>(edges.size());
    edges.emplace_back(d, m.alpha(d));
  }

  const std::uint64_t sign_patterns = 1ull << m.free_loops;
  std::vector<int8_t> signs(static_cast<std::size_t>(m.free_loops), 1);
  std::vector<uint8_t> inward(static_cast<std::size_t>(m.darts()), 0);
  std::vector<int> in_count(static_cast<std::size_t>(m.sites), 0);
  std::vector<AdmissibleOrientation> out;
  for (std::uint64_t mask = 0; mask < sign_patterns; ++mask) {
    for (int l = 0; l < m.free_loops; ++l)
      signs[static_cast<std::size_t>(l)] = (mask >> l) & 1 ? -1 : 1;
    enumerate_inward(m, edges, edge_of, 0, inward, in_count, signs, out);
  }
  return out;
}

std::vector<WebTerm> alternating_vertex_expand(const FourValentGraph& g,
                                               const AdmissibleOrientation& ao) {
  const PlanarMap& m = g.map;
  std::vector<int> alt_sites;
  std::vector<uint8_t> removed(static_cast<std::size_t>(m.sites), 0);
  for (int s = 0; s < m.sites; ++s) {
    if (!ao.alternating[static_cast<std::size_t>(s)]) continue;
    alt_sites.push_back(s);
    removed[static_cast<std::size_t>(s)] = 1;
  }

  std::vector<WebTerm> out;
  const std::size_t k = alt_sites.size();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    SplicePairing sp(static_cast<std::size_t>(m.darts()), -1);
    int qexp = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const int s = alt_sites[t];
      const int d0 = PlanarMap::dart_at(s, 0);
      const int a = ao.orientation.inward[static_cast<std::size_t>(d0)] ? d0 : d0 + 1;
      if ((mask >> t) & 1) {  // counterclockwise channel, weight q^-1
        link(sp, a, PlanarMap::sigma(a));
        link(sp, PlanarMap::sigma2(a), PlanarMap::sigma_inv(a));
        --qexp;
      } else {  // clockwise channel, weight q
        link(sp, a, PlanarMap::sigma_inv(a));
        link(sp, PlanarMap::sigma2(a), PlanarMap::sigma(a));
        ++qexp;
      }
    }
    ContractionResult cr = contract(m, removed, sp);
    Orientation on;
    on.inward.assign(static_cast<std::size_t>(cr.map.darts()), 0);
    for (int d = 0; d < m.darts(); ++d) {
      const int nd = cr.dart_map[static_cast<std::size_t>(d)];
      if (nd >= 0) on.inward[static_cast<std::size_t>(nd)] =
          ao.orientation.inward[static_cast<std::size_t>(d)];
    }
    // Circle signs are accounted for on the uncontracted map, so the web's
    // own loop signs are irrelevant to its strand evaluation.
    on.loop_signs.assign(static_cast<std::size_t>(cr.map.free_loops), 1);
    WebTerm term;
    term.coeff = LaurentPoly::monomial(qexp);
    term.web = OrientedGraph{FourValentGraph{std::move(cr.map)}, std::move(on)};
    term.splice = std::move(sp);
    out.push_back(std::move(term));
  }
  return out;
}

LaurentPoly orientation_value(const FourValentGraph& g, const AdmissibleOrientation& ao,
                              int n) {
  if (n < 2) throw std::invalid_argument("graph evaluation requires n >= 2");
  if (g.map.sites > 0 && g.map.outer_dart < 0)
    throw std::invalid_argument("graph with vertices needs an outer face");
  LaurentPoly value;
  for (const WebTerm& term : alternating_vertex_expand(g, ao)) {
    SplicePairing full = term.splice;
    for (int s = 0; s < g.map.sites; ++s)
      if (!ao.alternating[static_cast<std::size_t>(s)])
        seifert_channels(g.map, ao.orientation, s, full);
    const int rot = signed_circle_sum(g.map, full, ao.orientation);
    value += term.coeff * LaurentPoly::monomial((1 - n) * rot) * moy_graph(term.web, n);
  }
  return value;
}

LaurentPoly graph_eval(const FourValentGraph& g, int n) {
  return graph_eval_core(g, n, true);
}

LaurentPoly graph_eval_serial(const FourValentGraph& g, int n) {
  return graph_eval_core(g, n, false);
}

LaurentPoly kauffman_state_sum(const LinkDiagram& d, int n) {
  return kauffman_state_sum_core(d, n, true);
}

LaurentPoly kauffman_state_sum_serial(const LinkDiagram& d, int n) {
  return kauffman_state_sum_core(d, n, false);
}

std::vector<GraphClosure> standard_closures(GraphIdentity id) {
  switch (id) {
    case GraphIdentity::R0:
      return {
          {{}, 0, false, false},
          {{}, 1, false, false},
          {{}, 0, true, false},
          {{}, 2, true, false},
      };
    case GraphIdentity::R1:
      return {
          {{1, 0}, 0, false, false},
          {{1, 0}, 1, false, false},
          {{1, 0}, 0, false, true},
          {{1, 0}, 0, true, false},
      };
    case GraphIdentity::R2:
      return {
          {{1, 0, 3, 2}, 0, false, false},
          {{3, 2, 1, 0}, 0, false, false},
          {{1, 0, 3, 2}, 0, false, true},
          {{3, 2, 1, 0}, 1, true, false},
      };
    case GraphIdentity::R3:
      return {
          {{1, 0, 3, 2, 5, 4}, 0, false, false},
          {{1, 0, 5, 4, 3, 2}, 0, false, false},
          {{3, 2, 1, 0, 5, 4}, 0, false, false},
          {{5, 2, 1, 4, 3, 0}, 0, false, false},
          {{5, 4, 3, 2, 1, 0}, 0, false, false},
          {{1, 0, 3, 2, 5, 4}, 0, false, true},
          {{5, 2, 1, 4, 3, 0}, 1, false, false},
      };
  }
  return {};
}

bool check_graph_identity(GraphIdentity id, const GraphClosure& closure, int n) {
  const IdentitySides sides = identity_sides(id, n);
  validate_closure(closure, sides.stubs);
  LaurentPoly lhs;
  for (const auto& [coeff, tangle] : sides.lhs)
    lhs += coeff * graph_eval(compose(tangle, closure), n);
  LaurentPoly rhs;
  for (const auto& [coeff, tangle] : sides.rhs)
    rhs += coeff * graph_eval(compose(tangle, closure), n);
  return lhs == rhs;
}

}  // namespace kauffman
