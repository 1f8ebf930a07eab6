/**
 * @file diagram.hpp
 * @brief Link diagrams and unoriented 4-valent graphs over planar maps:
 *        PD input, orientations, writhe, rotation numbers, Reidemeister
 *        surgery, mirrors, canonical keys, and JSON I/O.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planar.hpp"

namespace kauffman {

/**
 * @brief An unoriented link diagram: a planar map whose sites are crossings.
 *
 * over_slot[s] selects the over strand at site s: 1 means the strand through
 * slots {1,3} passes over, 0 means the strand through slots {0,2} does.
 * orientation is optional; unoriented diagrams can be evaluated by the
 * Kauffman engines but have no writhe.
 */
struct LinkDiagram {
  PlanarMap map;
  std::vector<uint8_t> over_slot;          ///< per site, 0 or 1
  std::optional<Orientation> orientation;  ///< absent for unoriented input

  /// @throws std::invalid_argument on structural violations.
  void validate() const;
};

/**
 * @brief An unoriented 4-valent graph: a planar map whose sites are rigid
 *        vertices (no over/under data).
 */
struct FourValentGraph {
  PlanarMap map;

  void validate() const { map.validate(); }
};

/**
 * @brief A 4-valent graph with a balanced orientation in which every vertex
 *        is of crossing type (the two inward darts lie on different strands,
 *        i.e. they are sigma-adjacent).
 */
struct OrientedGraph {
  FourValentGraph graph;
  Orientation orientation;

  /// @throws std::invalid_argument if a vertex is not crossing type.
  void validate() const;
};

/// Forgets over/under data.
FourValentGraph underlying_graph(const LinkDiagram& d);

// ---------------------------------------------------------------- components

/**
 * @brief Strand components of the map (strands continue straight through
 *        sites: slot k joins slot k+2).
 *
 * Returns one entry per dart; components are numbered by their smallest dart.
 */
std::vector<int> component_ids(const PlanarMap& m);
int component_count_strands(const PlanarMap& m);

/**
 * @brief The orientation that directs each strand component along the
 *        traversal orbit containing its smallest dart, and every free loop
 *        counterclockwise.
 */
Orientation default_orientation(const PlanarMap& m);

/// All 2^(components) * 2^(loops) orientations (component direction choices).
std::vector<Orientation> all_orientations(const PlanarMap& m);

/// Reverses every component and loop.
Orientation reversed(const Orientation& o);

// ------------------------------------------------------------ oriented data

/**
 * @brief Sign of the crossing at site s of an oriented diagram: +1 when the
 *        over strand's inward dart is sigma^3 of the under strand's inward
 *        dart (equivalently sigma(under-out) = over-in), else -1.
 */
int crossing_sign(const LinkDiagram& d, int s);

/// Sum of crossing signs.  @throws std::invalid_argument if unoriented.
int writhe(const LinkDiagram& d);

/**
 * @brief Sum of crossing signs over self-crossings only (both strands of the
 *        site on one component), using an arbitrary per-component direction;
 *        self-crossing signs do not depend on that choice, so this is defined
 *        for unoriented diagrams too.
 */
int self_writhe_sum(const LinkDiagram& d);

/**
 * @brief The coherent smoothing at every site: inward dart a with sigma(a)
 *        inward too is paired {a, sigma^3 a} and {sigma a, sigma^2 a}.
 *
 * Defined whenever both inward darts are sigma-adjacent at every site
 * (always true for oriented link diagrams and crossing-type graph vertices).
 */
SplicePairing seifert_pairing(const PlanarMap& m, const Orientation& o);

/// Number of circles after the coherent smoothing at every site.
int seifert_circle_count(const LinkDiagram& d);

/**
 * @brief Whitney rotation number of an oriented diagram (the sum of signed
 *        circles after coherently smoothing every crossing, plus loop signs).
 */
int rotation_number(const LinkDiagram& d);

/// Rotation number of a crossing-type oriented graph (same smoothing rule).
int rotation_number(const OrientedGraph& g);

// ------------------------------------------------------------------- editing

/// Over/under exchanged at every crossing.  Values transform by q -> q^-1.
LinkDiagram mirror(const LinkDiagram& d);

/// Over/under exchanged at one crossing.
LinkDiagram switch_crossing(const LinkDiagram& d, int site);

/**
 * @brief Replaces site s by the splice that pairs each under dart u with
 *        sigma(u) (right splice, when right_splice) or with sigma_inv(u)
 *        (left splice), contracting the site away.
 */
LinkDiagram splice_site(const LinkDiagram& d, int site, bool right_splice);

/// Relabels sites and rotates slot frames (for canonical-form testing).
LinkDiagram relabeled(const LinkDiagram& d, const std::vector<int>& site_perm,
                      const std::vector<int>& slot_rot);

/// Left-right flip of the plane (reverses sigma).  Produces the mirror image.
LinkDiagram reflected(const LinkDiagram& d);

/**
 * @brief Adds a positive (sign=+1) or negative (sign=-1) curl on the edge
 *        holding dart x, preserving any orientation.
 */
LinkDiagram insert_curl(const LinkDiagram& d, int x, int sign);

/// Which Reidemeister family apply_reidemeister performs.
enum class Move { R2, R3 };

/**
 * @brief Location of a Reidemeister move.
 *
 * R2 insert: darts a and b on the same face (the strand of a is poked over
 * the strand of b).  R2 remove: b = -1 and a any dart of the bigon face.
 * R3: b = -1 and a any dart of the triangle face.
 */
struct MoveLocation {
  int a = -1;
  int b = -1;
};

/**
 * @brief Applies an R2 poke/unpoke or an R3 slide, returning the new diagram.
 *
 * Preserves any orientation.  @throws std::invalid_argument when the location
 * does not support the move (wrong face size, bad over/under pattern, darts
 * on different faces).
 */
LinkDiagram apply_reidemeister(const LinkDiagram& d, Move move, MoveLocation loc);

// ------------------------------------------------------------------ PD input

/**
 * @brief Parses planar diagram notation.
 *
 * Tokens X(a,b,c,d) — parentheses or brackets — list the four edge labels
 * around a crossing clockwise starting at the incoming under edge; each label
 * must appear exactly twice overall.  Orientations are recovered from the
 * labels (along each component labels increase by one with a single wrap);
 * if the numbering is not coherent the diagram is returned unoriented.
 * The default outer face lies to the left of the highest-numbered edge walked
 * from its first listed occurrence to its second; a token outer(e,L) or
 * outer(e,R) overrides this.  Empty input denotes the empty diagram.
 *
 * @throws std::invalid_argument on malformed text, bad arity, labels not
 *         appearing exactly twice, or a non-planar rotation system.
 */
LinkDiagram parse_pd(const std::string& text);

// ---------------------------------------------------------------------- JSON

nlohmann::json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FourValentGraph& g);
FourValentGraph graph_from_json(const nlohmann::json& j);

// ------------------------------------------------------------ canonical form

/**
 * @brief Extracts one connected component of the underlying map as a
 *        standalone diagram.
 *
 * @param c component id per PlanarMap::site_component_ids().  Sites are
 *          renumbered contiguously (original order preserved); free loops are
 *          not copied; the outer face defaults to dart 0, which is harmless
 *          for sphere-invariant evaluations.  Orientation, when present, is
 *          restricted to the component.
 */
LinkDiagram component_diagram(const LinkDiagram& d, int c);

/**
 * @brief Canonical key: equal for diagrams that differ by site relabeling
 *        and slot-frame rotation (and nothing else).
 *
 * Connected components are canonicalized separately (lexicominimal BFS code
 * over all start darts), sorted, and joined; the free-loop count prefixes the
 * key.  The outer face is deliberately excluded (engine values are
 * sphere-invariant), and mirrors are NOT identified.  Orientation is included
 * only when include_orientation is set.
 */
std::string canonical_key(const LinkDiagram& d, bool include_orientation = false);

}  // namespace kauffman
