/**
 * @file jaeger.cpp
 * @brief Oriented state-sum engine: splice patterns, admissible
 *        orientations, and the weighted evaluation.
 */
#include "jaeger.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "slnpoly.hpp"

namespace kauffman {

namespace {

constexpr int kMaxSites = 20;

/// A fixed under dart of site v (the other is its sigma^2 image).
int under_dart(const LinkDiagram& d, int v) {
  return PlanarMap::dart_at(v, d.over_slot[v] ? 0 : 1);
}

/// True when dart a lies on the under strand of its site.
bool is_under(const LinkDiagram& d, int a) {
  const int v = PlanarMap::site_of(a);
  return (PlanarMap::slot_of(a) & 1) == (d.over_slot[v] ? 0 : 1);
}

/// Writes the two channels of a spliced site into @p sp.
void set_channels(const LinkDiagram& d, int v, int choice, SplicePairing& sp) {
  const int u = under_dart(d, v);
  const int s1 = PlanarMap::sigma(u);
  const int s2 = PlanarMap::sigma2(u);
  const int s3 = PlanarMap::sigma(s2);
  if (choice == 1) {  // right splice: under turns toward sigma
    sp[u] = s1;
    sp[s1] = u;
    sp[s2] = s3;
    sp[s3] = s2;
  } else {  // left splice
    sp[u] = s3;
    sp[s3] = u;
    sp[s1] = s2;
    sp[s2] = s1;
  }
}

/// One undirected circuit of a spliced diagram, walked forward once.
struct Circuit {
  std::vector<int> leaving;  ///< darts exited along, in forward order
  int dirs = 3;              ///< bit 0: forward admissible, bit 1: backward
};

/**
 * @brief Decomposes the diagram, spliced per @p choices, into circuits.
 *
 * The forward walk leaves along dart y, arrives at alpha(y) and continues
 * through the site (or through the splice channel).  A circuit through at
 * least one spliced site admits at most one direction: the one entering
 * every spliced site on the under strand.
 */
std::vector<Circuit> find_circuits(const LinkDiagram& d,
                                   const std::vector<uint8_t>& choices,
                                   const SplicePairing& sp) {
  const PlanarMap& m = d.map;
  std::vector<Circuit> out;
  std::vector<uint8_t> seen(m.darts(), 0);
  for (int x = 0; x < m.darts(); ++x) {
    if (seen[x]) continue;
    Circuit c;
    int unders = 0;
    int overs = 0;
    int y = x;
    do {
      seen[y] = 1;
      c.leaving.push_back(y);
      const int a = m.alpha(y);
      seen[a] = 1;
      const int v = PlanarMap::site_of(a);
      if (choices[v]) {
        (is_under(d, a) ? unders : overs) += 1;
        y = sp[a];
      } else {
        y = PlanarMap::sigma2(a);
      }
    } while (y != x);
    if (unders + overs > 0)
      c.dirs = (overs == 0) ? 1 : (unders == 0 ? 2 : 0);
    out.push_back(std::move(c));
  }
  return out;
}

/// Orientation induced by picking a direction for every circuit.
Orientation orient_circuits(const PlanarMap& m,
                            const std::vector<Circuit>& circuits,
                            const std::vector<int>& direction,
                            unsigned loop_mask) {
  Orientation o;
  o.inward.assign(m.darts(), 0);
  for (std::size_t i = 0; i < circuits.size(); ++i)
    for (int y : circuits[i].leaving) {
      if (direction[i] == 0)
        o.inward[m.alpha(y)] = 1;  // forward: arrivals point inward
      else
        o.inward[y] = 1;  // backward: the forward exits become arrivals
    }
  o.loop_signs.assign(m.free_loops, +1);
  for (int l = 0; l < m.free_loops; ++l)
    if (loop_mask >> l & 1u) o.loop_signs[l] = -1;
  return o;
}

/// Rotation number: splice channels at spliced sites, coherent smoothing
/// at the crossings kept in place.
int state_rotation(const LinkDiagram& d, const std::vector<uint8_t>& choices,
                   const SplicePairing& sp, const Orientation& o) {
  SplicePairing full = sp;
  for (int v = 0; v < d.map.sites; ++v) {
    if (choices[v]) continue;
    int a = PlanarMap::dart_at(v, 0);
    while (!(o.inward[a] && o.inward[PlanarMap::sigma(a)]))
      a = PlanarMap::sigma(a);
    const int prev = PlanarMap::sigma(PlanarMap::sigma2(a));
    full[a] = prev;
    full[prev] = a;
    full[PlanarMap::sigma(a)] = PlanarMap::sigma2(a);
    full[PlanarMap::sigma2(a)] = PlanarMap::sigma(a);
  }
  return signed_circle_sum(d.map, full, o);
}

/// Product of the per-splice weights: +(q - q^-1) right, -(q - q^-1) left.
LaurentPoly pattern_weight(const std::vector<uint8_t>& choices) {
  LaurentPoly w = LaurentPoly::one();
  const LaurentPoly z = q_power_difference(1);
  for (uint8_t c : choices)
    if (c == 1)
      w *= z;
    else if (c == 2)
      w *= z * LaurentPoly::constant(-1);
  return w;
}

/// Residual diagram of a pattern: spliced sites contracted away, surviving
/// crossings keeping their over strand, orientation transported.
LinkDiagram residual_diagram(const LinkDiagram& d,
                             const std::vector<uint8_t>& choices,
                             const SplicePairing& sp, const Orientation& o) {
  std::vector<uint8_t> removed(choices.begin(), choices.end());
  for (uint8_t& r : removed) r = r ? 1 : 0;
  const ContractionResult cr = contract(d.map, removed, sp);
  LinkDiagram res;
  res.map = cr.map;
  res.over_slot.assign(res.map.sites, 0);
  for (int v = 0; v < d.map.sites; ++v)
    if (cr.site_map[v] >= 0) res.over_slot[cr.site_map[v]] = d.over_slot[v];
  Orientation ro;
  ro.inward.assign(res.map.darts(), 0);
  for (int x = 0; x < d.map.darts(); ++x)
    if (cr.dart_map[x] >= 0) ro.inward[cr.dart_map[x]] = o.inward[x];
  ro.loop_signs.assign(res.map.free_loops, +1);
  res.orientation = std::move(ro);
  return res;
}

/// Calls @p emit for every admissible state of one splice pattern.
template <typename Emit>
void for_each_state(const LinkDiagram& d, const std::vector<uint8_t>& choices,
                    const Emit& emit) {
  SplicePairing sp(d.map.darts(), -1);
  for (int v = 0; v < d.map.sites; ++v)
    if (choices[v]) set_channels(d, v, choices[v], sp);
  const std::vector<Circuit> circuits = find_circuits(d, choices, sp);
  for (const Circuit& c : circuits)
    if (c.dirs == 0) return;  // no orientation enters every splice under
  std::vector<int> direction(circuits.size(), -1);
  for (std::size_t i = 0; i < circuits.size(); ++i)
    direction[i] = (circuits[i].dirs & 1) ? 0 : 1;
  const unsigned nloops = static_cast<unsigned>(d.map.free_loops);
  for (;;) {
    for (unsigned mask = 0; mask < (1u << nloops); ++mask) {
      const Orientation o = orient_circuits(d.map, circuits, direction, mask);
      const int rot = state_rotation(d, choices, sp, o);
      emit(o, sp, rot);
    }
    // Odometer over the circuits that admit both directions.
    std::size_t i = 0;
    for (; i < circuits.size(); ++i) {
      if (circuits[i].dirs != 3) continue;
      if (direction[i] == 0) {
        direction[i] = 1;
        break;
      }
      direction[i] = 0;
    }
    if (i == circuits.size()) return;
  }
}

/// Sum of all state contributions of one pattern.
LaurentPoly pattern_sum(const LinkDiagram& d,
                        const std::vector<uint8_t>& choices, int n) {
  const LaurentPoly weight = pattern_weight(choices);
  LaurentPoly total;
  for_each_state(d, choices,
                 [&](const Orientation& o, const SplicePairing& sp, int rot) {
                   total += LaurentPoly::monomial((1 - n) * rot, 1) *
                            sln_link(residual_diagram(d, choices, sp, o), n);
                 });
  return weight * total;
}

std::vector<uint8_t> decode_pattern(uint64_t p, int sites) {
  std::vector<uint8_t> choices(sites, 0);
  for (int v = 0; v < sites; ++v) {
    choices[v] = static_cast<uint8_t>(p % 3);
    p /= 3;
  }
  return choices;
}

uint64_t pattern_count(const LinkDiagram& d) {
  if (d.map.sites > kMaxSites)
    throw std::invalid_argument("diagram too large for the state sum");
  uint64_t npat = 1;
  for (int v = 0; v < d.map.sites; ++v) npat *= 3;
  return npat;
}

LaurentPoly jaeger_core(const LinkDiagram& d, int n, bool parallel) {
  if (n < 2) throw std::invalid_argument("jaeger_kauffman requires n >= 2");
  const uint64_t npat = pattern_count(d);
  LaurentPoly total;
#pragma omp parallel if (parallel)
  {
    LaurentPoly local;
#pragma omp for schedule(dynamic, 16) nowait
    for (int64_t p = 0; p < static_cast<int64_t>(npat); ++p)
      local += pattern_sum(d, decode_pattern(static_cast<uint64_t>(p),
                                             d.map.sites),
                           n);
#pragma omp critical
    total += local;
  }
  return total;
}

}  // namespace

std::vector<SpliceState> jaeger_states(const LinkDiagram& d) {
  const uint64_t npat = pattern_count(d);
  std::vector<SpliceState> out;
  for (uint64_t p = 0; p < npat; ++p) {
    const std::vector<uint8_t> choices = decode_pattern(p, d.map.sites);
    const LaurentPoly weight = pattern_weight(choices);
    for_each_state(d, choices,
                   [&](const Orientation& o, const SplicePairing&, int rot) {
                     SpliceState s;
                     s.choices = choices;
                     s.orientation = o;
                     s.weight = weight;
                     s.rot = rot;
                     out.push_back(std::move(s));
                   });
  }
  return out;
}

LaurentPoly jaeger_term(const LinkDiagram& d, const SpliceState& s, int n) {
  SplicePairing sp(d.map.darts(), -1);
  for (int v = 0; v < d.map.sites; ++v)
    if (s.choices[v]) set_channels(d, v, s.choices[v], sp);
  return s.weight * LaurentPoly::monomial((1 - n) * s.rot, 1) *
         sln_link(residual_diagram(d, s.choices, sp, s.orientation), n);
}

LaurentPoly jaeger_kauffman(const LinkDiagram& d, int n) {
  return jaeger_core(d, n, true);
}

LaurentPoly jaeger_kauffman_serial(const LinkDiagram& d, int n) {
  return jaeger_core(d, n, false);
}

void dump_states(const LinkDiagram& d, int n, std::ostream& out) {
  if (n < 2) throw std::invalid_argument("dump_states requires n >= 2");
  LaurentPoly total;
  std::size_t count = 0;
  for (const SpliceState& s : jaeger_states(d)) {
    const LaurentPoly term = jaeger_term(d, s, n);
    total += term;
    ++count;
    nlohmann::json row;
    row["choices"] = std::vector<int>(s.choices.begin(), s.choices.end());
    row["inward"] = std::vector<int>(s.orientation.inward.begin(),
                                     s.orientation.inward.end());
    row["loop_signs"] = std::vector<int>(s.orientation.loop_signs.begin(),
                                         s.orientation.loop_signs.end());
    row["rot"] = s.rot;
    row["weight"] = s.weight.to_text();
    row["term"] = term.to_text();
    out << row.dump() << "\n";
  }
  nlohmann::json tail;
  tail["states"] = count;
  tail["total"] = total.to_text();
  out << tail.dump() << "\n";
}

}  // namespace kauffman
