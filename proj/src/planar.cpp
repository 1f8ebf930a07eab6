/**
 * @file planar.cpp
 * @brief Faces, planarity checks, signed splice circles, and contraction.
 */
#include "planar.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace kauffman {

void PlanarMap::validate() const {
  const int n = darts();
  if (static_cast<int>(pairing.size()) != n)
    throw std::invalid_argument("pairing size must be 4 * sites");
  if (sites < 0 || free_loops < 0)
    throw std::invalid_argument("negative site or loop count");
  for (int d = 0; d < n; ++d) {
    if (pairing[d] < 0 || pairing[d] >= n)
      throw std::invalid_argument("pairing entry out of range");
    if (pairing[d] == d) throw std::invalid_argument("pairing has a fixed point");
    if (pairing[pairing[d]] != d)
      throw std::invalid_argument("pairing is not an involution");
  }
  if (sites > 0) {
    if (outer_dart < 0 || outer_dart >= n)
      throw std::invalid_argument("outer_dart out of range");
    // Per-component sphere Euler characteristic: V - E + F = 2 with E = 2V
    // and F summed over components, i.e. faces == 2C + E - V = 2C + V.
    if (face_count() != 2 * component_count() + sites)
      throw std::invalid_argument("non-planar rotation system");
  }
}

std::vector<int> PlanarMap::face_ids() const {
  const int n = darts();
  std::vector<int> id(n, -1);
  int next = 0;
  for (int d = 0; d < n; ++d) {
    if (id[d] != -1) continue;
    int x = d;
    while (id[x] == -1) {
      id[x] = next;
      x = pairing[sigma(x)];  // phi = alpha o sigma
    }
    ++next;
  }
  return id;
}

int PlanarMap::face_count() const {
  const std::vector<int> id = face_ids();
  return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

std::vector<int> PlanarMap::site_component_ids() const {
  UnionFind uf(sites);
  for (int d = 0; d < darts(); ++d) uf.unite(site_of(d), site_of(pairing[d]));
  std::vector<int> id(sites, -1);
  int next = 0;
  for (int s = 0; s < sites; ++s) {
    int root = uf.find(s);
    if (id[root] == -1) id[root] = next++;
    id[s] = id[root];
  }
  return id;
}

int PlanarMap::component_count() const {
  const std::vector<int> id = site_component_ids();
  return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

namespace {

/// Checks that `splice` restricted to each site is a fixed-point-free
/// involution pairing adjacent darts (a non-crossing smoothing).
void check_splice(const PlanarMap& m, const SplicePairing& splice) {
  if (static_cast<int>(splice.size()) != m.darts())
    throw std::invalid_argument("splice pairing has wrong size");
  for (int d = 0; d < m.darts(); ++d) {
    const int p = splice[d];
    if (p != PlanarMap::sigma(d) && p != PlanarMap::sigma_inv(d))
      throw std::invalid_argument("splice must pair adjacent darts");
    if (splice[p] != d) throw std::invalid_argument("splice is not an involution");
  }
}

}  // namespace

int circle_count(const PlanarMap& m, const SplicePairing& splice) {
  check_splice(m, splice);
  const int n = m.darts();
  std::vector<uint8_t> seen(n, 0);
  int orbits = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = splice[m.alpha(x)];
    }
    ++orbits;
  }
  // Each circle is traced once per direction.
  return orbits / 2;
}

int signed_circle_sum(const PlanarMap& m, const SplicePairing& splice,
                      const Orientation& o) {
  int loop_total = 0;
  if (static_cast<int>(o.loop_signs.size()) != m.free_loops)
    throw std::invalid_argument("loop sign count mismatch");
  for (int8_t s : o.loop_signs) loop_total += s;
  if (m.sites == 0) return loop_total;

  check_splice(m, splice);
  const int n = m.darts();
  if (static_cast<int>(o.inward.size()) != n)
    throw std::invalid_argument("orientation size mismatch");
  for (int d = 0; d < n; ++d) {
    if ((o.inward[d] ^ o.inward[m.alpha(d)]) != 1)
      throw std::invalid_argument("orientation incoherent along an edge");
    if ((o.inward[d] ^ o.inward[splice[d]]) != 1)
      throw std::invalid_argument("orientation incoherent across a splice");
  }
  if (m.outer_dart < 0 || m.outer_dart >= n)
    throw std::invalid_argument("outer_dart required for signed circles");

  // A disconnected map leaves the relative placement of its components
  // unspecified; treat them as drawn side by side and sum the components
  // independently.  The component holding outer_dart keeps it; every other
  // component uses its lowest dart's face as its own unbounded region.
  const std::vector<int> comp = m.site_component_ids();
  const int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  if (ncomp > 1) {
    const int outer_comp = comp[static_cast<std::size_t>(PlanarMap::site_of(m.outer_dart))];
    int total = loop_total;
    for (int k = 0; k < ncomp; ++k) {
      std::vector<int> site_map(static_cast<std::size_t>(m.sites), -1);
      int kept = 0;
      for (int s = 0; s < m.sites; ++s)
        if (comp[static_cast<std::size_t>(s)] == k) site_map[static_cast<std::size_t>(s)] = kept++;
      PlanarMap sub;
      sub.sites = kept;
      sub.pairing.assign(static_cast<std::size_t>(4 * kept), -1);
      SplicePairing ssplice(static_cast<std::size_t>(4 * kept), -1);
      Orientation so;
      so.inward.assign(static_cast<std::size_t>(4 * kept), 0);
      const auto remap = [&](int d) {
        return PlanarMap::dart_at(site_map[static_cast<std::size_t>(PlanarMap::site_of(d))],
                                  PlanarMap::slot_of(d));
      };
      for (int d = 0; d < n; ++d) {
        if (comp[static_cast<std::size_t>(PlanarMap::site_of(d))] != k) continue;
        const int nd = remap(d);
        sub.pairing[static_cast<std::size_t>(nd)] = remap(m.alpha(d));
        ssplice[static_cast<std::size_t>(nd)] = remap(splice[static_cast<std::size_t>(d)]);
        so.inward[static_cast<std::size_t>(nd)] = o.inward[static_cast<std::size_t>(d)];
      }
      sub.outer_dart = k == outer_comp ? remap(m.outer_dart) : 0;
      total += signed_circle_sum(sub, ssplice, so);
    }
    return total;
  }

  const std::vector<int> face = m.face_ids();
  const int nfaces = 1 + *std::max_element(face.begin(), face.end());

  // Merge the two channel gaps at every site.  With pairs {d, sigma(d)} the
  // chord hugs the gap (d, sigma d); the two gaps NOT hugged start at the
  // darts x with splice[x] == sigma_inv(x).
  UnionFind region(nfaces);
  for (int s = 0; s < m.sites; ++s) {
    int first = -1;
    for (int slot = 0; slot < 4; ++slot) {
      const int x = PlanarMap::dart_at(s, slot);
      if (splice[x] != PlanarMap::sigma_inv(x)) continue;
      if (first == -1) {
        first = x;
      } else {
        region.unite(face[first], face[x]);
      }
    }
  }

  // Trace circles following the flow: out-dart -> alpha (arrive) -> splice.
  std::vector<int> circle(n, -1);
  std::vector<int> starts;  // one outward representative per circle
  for (int d = 0; d < n; ++d) {
    if (circle[d] != -1 || o.inward[d]) continue;
    const int c = static_cast<int>(starts.size());
    starts.push_back(d);
    int x = d;
    while (circle[x] == -1) {
      circle[x] = c;                 // outward dart
      circle[m.alpha(x)] = c;        // its inward partner (same edge)
      x = splice[m.alpha(x)];
    }
  }
  const int ncircles = static_cast<int>(starts.size());

  // Region-adjacency walls, each labeled by the circle that contributes it:
  // one wall per map edge (between its two side faces) and one per chord
  // (between the hugged pocket and the gap on the chord's far side).
  struct Wall {
    int a, b, label;
  };
  std::vector<Wall> walls;
  walls.reserve(n + n / 2);
  for (int d = 0; d < n; ++d) {
    if (d < m.alpha(d))
      walls.push_back({region.find(face[d]), region.find(face[m.alpha(d)]), circle[d]});
    if (splice[d] == PlanarMap::sigma(d))
      walls.push_back({region.find(face[d]), region.find(face[PlanarMap::sigma(d)]), circle[d]});
  }
  std::vector<std::vector<int>> walls_at(nfaces);
  for (int w = 0; w < static_cast<int>(walls.size()); ++w) {
    walls_at[walls[w].a].push_back(w);
    walls_at[walls[w].b].push_back(w);
  }

  const int outer = region.find(face[m.outer_dart]);

  int total = loop_total;
  std::vector<int> visit_mark(nfaces, -1);
  for (int c = 0; c < ncircles; ++c) {
    // Right side of outward dart d is the face orbit of sigma_inv(d); it must
    // agree (after merging) along the whole circle.
    const int right = region.find(face[PlanarMap::sigma_inv(starts[c])]);
    {
      int x = starts[c];
      do {
        if (region.find(face[PlanarMap::sigma_inv(x)]) != right)
          throw std::logic_error("inconsistent right region along a circle");
        x = splice[m.alpha(x)];
      } while (x != starts[c]);
    }
    // BFS from the right region avoiding this circle's own walls.
    bool reached = (right == outer);
    if (!reached) {
      std::queue<int> q;
      q.push(right);
      visit_mark[right] = c;
      while (!q.empty() && !reached) {
        const int r = q.front();
        q.pop();
        for (int w : walls_at[r]) {
          if (walls[w].label == c) continue;
          const int other = walls[w].a == r ? walls[w].b : walls[w].a;
          if (visit_mark[other] == c) continue;
          visit_mark[other] = c;
          if (other == outer) {
            reached = true;
            break;
          }
          q.push(other);
        }
      }
    }
    total += reached ? +1 : -1;
  }
  return total;
}

ContractionResult contract(const PlanarMap& m, const std::vector<uint8_t>& removed,
                           const SplicePairing& splice) {
  if (static_cast<int>(removed.size()) != m.sites)
    throw std::invalid_argument("removed mask has wrong size");
  ContractionResult r;
  r.site_map.assign(m.sites, -1);
  int kept = 0;
  for (int s = 0; s < m.sites; ++s)
    if (!removed[s]) r.site_map[s] = kept++;
  r.map.sites = kept;
  r.map.free_loops = m.free_loops;
  r.map.pairing.assign(4 * kept, -1);
  r.dart_map.assign(m.darts(), -1);
  for (int d = 0; d < m.darts(); ++d)
    if (!removed[PlanarMap::site_of(d)])
      r.dart_map[d] = PlanarMap::dart_at(r.site_map[PlanarMap::site_of(d)],
                                         PlanarMap::slot_of(d));

  // Validate splice entries at removed sites only.
  for (int d = 0; d < m.darts(); ++d) {
    if (!removed[PlanarMap::site_of(d)]) continue;
    const int p = splice[d];
    if ((p != PlanarMap::sigma(d) && p != PlanarMap::sigma_inv(d) &&
         p != PlanarMap::sigma2(d)) ||
        PlanarMap::site_of(p) != PlanarMap::site_of(d) || splice[p] != d || p == d)
      throw std::invalid_argument("invalid splice at a removed site");
  }

  std::vector<uint8_t> consumed(m.darts(), 0);
  // Join kept darts through chains of removed sites.
  for (int d = 0; d < m.darts(); ++d) {
    if (removed[PlanarMap::site_of(d)]) continue;
    int x = m.alpha(d);
    while (removed[PlanarMap::site_of(x)]) {
      consumed[x] = 1;
      consumed[splice[x]] = 1;
      x = m.alpha(splice[x]);
    }
    r.map.pairing[r.dart_map[d]] = r.dart_map[x];
  }
  // Circles living entirely on removed sites: trace leftover darts.
  std::vector<uint8_t> seen(m.darts(), 0);
  int orbits = 0;
  for (int d = 0; d < m.darts(); ++d) {
    if (!removed[PlanarMap::site_of(d)] || consumed[d] || seen[d]) continue;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = m.alpha(splice[x]);
    }
    ++orbits;
  }
  r.new_loops = orbits / 2;
  r.map.free_loops += r.new_loops;
  // Transport the outer face.  Contraction only merges regions, so any
  // surviving dart on the old outer face still has the outer region on its
  // left; walk the face orbit until one is found.  If the whole orbit is
  // removed the choice is conventional (dart 0).
  r.map.outer_dart = kept > 0 ? 0 : -1;
  if (m.outer_dart >= 0 && m.sites > 0 && kept > 0) {
    int x = m.outer_dart;
    do {
      if (!removed[PlanarMap::site_of(x)]) {
        r.map.outer_dart = r.dart_map[x];
        break;
      }
      x = m.alpha(PlanarMap::sigma(x));  // phi = alpha o sigma
    } while (x != m.outer_dart);
  }
  return r;
}

}  // namespace kauffman
