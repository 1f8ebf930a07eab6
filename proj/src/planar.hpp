/**
 * @file planar.hpp
 * @brief Combinatorial planar maps with 4-valent sites: faces, planarity
 *        validation, splice circles with signs, and site contraction.
 *
 * A map with V sites has darts 0..4V-1; dart d = 4*site + slot where slots
 * 0,1,2,3 run counterclockwise around the site.  The rotation sigma sends a
 * dart to the next slot ccw; the edge involution alpha pairs dart ends.
 * Crossing-free circles with no sites on them are tracked separately by a
 * count (free_loops).
 *
 * Face convention: faces are the orbits of phi = alpha o sigma, and the face
 * of dart d is the orbit containing d, representing the corner gap between d
 * and sigma(d) — i.e. the face to the LEFT of walking d away from its site.
 * The face to the RIGHT of outward d is the orbit containing sigma_inv(d).
 */
#pragma once

#include <cstdint>
#include <vector>

namespace kauffman {

/**
 * @brief A direction assignment: one inward bit per dart plus a sign per
 *        free loop (+1 counterclockwise, -1 clockwise).
 *
 * A dart is inward when the strand flows along it into its site.  Coherence
 * (exactly one inward endpoint per edge) is checked by consumers.
 */
struct Orientation {
  std::vector<uint8_t> inward;   ///< per dart: 1 if the flow enters the site
  std::vector<int8_t> loop_signs;  ///< per free loop: +1 ccw, -1 cw
};

/**
 * @brief Planar map with 4-valent sites plus free loops.
 */
struct PlanarMap {
  int sites = 0;             ///< number of 4-valent sites
  std::vector<int> pairing;  ///< dart involution alpha (size 4*sites)
  int free_loops = 0;        ///< crossing-free circles not touching any site
  int outer_dart = -1;       ///< face left of this dart is the outer face

  int darts() const { return 4 * sites; }
  static int site_of(int d) { return d >> 2; }
  static int slot_of(int d) { return d & 3; }
  static int dart_at(int site, int slot) { return 4 * site + slot; }
  static int sigma(int d) { return (d & ~3) | ((d + 1) & 3); }      ///< ccw
  static int sigma_inv(int d) { return (d & ~3) | ((d + 3) & 3); }  ///< cw
  static int sigma2(int d) { return d ^ 2; }  ///< opposite slot
  int alpha(int d) const { return pairing[d]; }

  /**
   * @brief Checks structural invariants.
   *
   * pairing must be a fixed-point-free involution, and the rotation system
   * must be planar: with E = 2V edges, V sites, C sited connected components,
   * the face count must equal 2C + E - V (sphere Euler characteristic per
   * component).  Free loops are excluded from the formula.
   *
   * @throws std::invalid_argument on violation.
   */
  void validate() const;

  /// Orbit id of each dart under phi = alpha o sigma (face ids, 0-based).
  std::vector<int> face_ids() const;
  int face_count() const;

  /// Connected component id of each site (via shared edges), 0-based.
  std::vector<int> site_component_ids() const;
  int component_count() const;
};

/**
 * @brief Per-site splice: splice[d] = dart that d is joined to at its site.
 *
 * Each site's four darts are paired by a fixed-point-free involution whose
 * two pairs are adjacent (each dart pairs with sigma(d) or sigma_inv(d)),
 * so the splice is a planar (non-crossing) smoothing of the site.
 */
using SplicePairing = std::vector<int>;

/**
 * @brief Sum of circle signs of the system obtained by splicing every site,
 *        plus the free-loop signs.
 *
 * Splicing every site of a connected planar diagram leaves a disjoint union
 * of embedded circles; each bounds a disk on one side.  A circle counts +1
 * when walking along its flow the unbounded region lies reachable from its
 * RIGHT side (the circle runs counterclockwise around its interior), else
 * -1.  Reachability is computed in the region-adjacency graph: regions are
 * original faces merged through the splice channels, and walls are edge and
 * chord segments labeled by the circle that contributed them; a circle's
 * right region may reach the outer region through walls of OTHER circles
 * only.  This yields +/-k nesting behaviour, e.g. two nested ccw circles
 * contribute +2.
 *
 * A map with several site components does not record how the components sit
 * relative to each other; they are treated as drawn side by side, the
 * component holding outer_dart keeping it while every other component uses
 * its lowest dart's face as its own unbounded region.  Sums over all coherent
 * orientations are independent of that convention.
 *
 * Requires an orientation coherent with the splice (each spliced pair has
 * one inward and one outward dart) and, when sites > 0, a valid outer_dart.
 *
 * @throws std::invalid_argument on incoherent input.
 */
int signed_circle_sum(const PlanarMap& m, const SplicePairing& splice,
                      const Orientation& o);

/// Number of circles after splicing every site (free loops NOT included).
int circle_count(const PlanarMap& m, const SplicePairing& splice);

/**
 * @brief Result of removing a set of sites from a map.
 */
struct ContractionResult {
  PlanarMap map;              ///< kept sites, renumbered in increasing order
  int new_loops = 0;          ///< circles formed entirely of removed sites
  std::vector<int> dart_map;  ///< old dart -> new dart (-1 if removed)
  std::vector<int> site_map;  ///< old site -> new site (-1 if removed)
};

/**
 * @brief Removes marked sites, joining strands through each removed site by
 *        its splice pairing.
 *
 * Strand arcs running through removed sites become single edges of the new
 * map; circles lying entirely on removed sites are added to new_loops (the
 * result map's free_loops = input free_loops + new_loops).  splice entries at
 * kept sites are ignored.  The outer face is transported: contraction only
 * merges regions, so the first surviving dart of the old outer face orbit
 * still has the outer region on its left and becomes the new outer_dart
 * (conventionally dart 0 when the whole orbit is removed, -1 when no sites
 * remain).
 */
ContractionResult contract(const PlanarMap& m, const std::vector<uint8_t>& removed,
                           const SplicePairing& splice);

/// Union-find helper used across the library.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Returns true if the two sets were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace kauffman
