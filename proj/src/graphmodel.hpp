/**
 * @file graphmodel.hpp
 * @brief State model for unoriented 4-valent graphs: evaluation by a sum
 *        over balanced orientations, the SO(2n) Kauffman polynomial via the
 *        three-way crossing resolution, and the graph skein identities
 *        (R0-R3) the model satisfies.
 */
#pragma once

#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace kauffman {

/**
 * @brief A balanced orientation of a 4-valent graph together with the
 *        per-vertex classification it induces.
 *
 * Balanced means every vertex has exactly two inward darts.  The inward pair
 * is then either sigma-adjacent — crossing type, the two strands pass through
 * the vertex coherently — or sigma^2-opposite — alternating, the directions
 * read in, out, in, out around the vertex.  Every balanced vertex is one or
 * the other, so the balanced orientations are exactly the states of the
 * orientation sum.
 */
struct AdmissibleOrientation {
  Orientation orientation;           ///< inward flags plus free-loop signs
  std::vector<uint8_t> alternating;  ///< per site: 1 when alternating
};

/**
 * @brief All balanced orientations of the graph, times both directions of
 *        every free loop.
 *
 * Deterministic order: edges sorted by smaller dart, directions enumerated
 * lexicographically, then loop-sign vectors.  A single free loop yields 2
 * orientations; the one-vertex curl graph (a vertex with both adjacent leg
 * pairs closed into loops) yields 4, two of crossing type and two
 * alternating.
 */
std::vector<AdmissibleOrientation> admissible_orientations(const FourValentGraph& g);

/**
 * @brief One term of the alternating-vertex expansion: a crossing-type
 *        oriented graph with a monomial coefficient.
 */
struct WebTerm {
  LaurentPoly coeff;     ///< product of q^{+-1} over the expanded vertices
  OrientedGraph web;     ///< alternating vertices spliced away
  SplicePairing splice;  ///< chosen channels on the input map (-1 elsewhere)
};

/**
 * @brief Expands every alternating vertex into its two coherent splices.
 *
 * At an alternating vertex with inward dart a the splice {a, sigma^3 a},
 * {sigma^2 a, sigma a} (each strand turning clockwise) takes weight q and the
 * splice {a, sigma a}, {sigma^2 a, sigma^3 a} (counterclockwise) takes q^-1;
 * the assignment of q vs q^-1 is pinned by the curl value and the bigon
 * identity.  Returns the 2^(#alternating) products of these choices; each
 * term's web is crossing type everywhere and carries the transported
 * orientation, and term.splice records the channels on the input map's darts
 * for rotation-number bookkeeping.
 */
std::vector<WebTerm> alternating_vertex_expand(const FourValentGraph& g,
                                               const AdmissibleOrientation& ao);

/**
 * @brief Contribution of one admissible orientation to the state sum: the sum
 *        over its alternating expansion of coeff * q^{(1-n) rot} * moy value,
 *        rot taken on the input map with the term's channels at alternating
 *        vertices and the coherent smoothing at crossing-type ones.
 *
 * @throws std::invalid_argument if n < 2 or the map has sites but no outer
 *         face.
 */
LaurentPoly orientation_value(const FourValentGraph& g, const AdmissibleOrientation& ao,
                              int n);

/**
 * @brief Evaluates an unoriented 4-valent graph by the orientation state sum.
 *
 * Sums, over every admissible orientation and every alternating expansion
 * term, coeff * q^{(1-n) rot} * moy_graph(web, n), where rot is the signed
 * circle sum of the input map spliced by the term's channels at alternating
 * vertices and the coherent smoothing elsewhere.  Anchor values: a
 * crossingless circle gives [2n-1] + 1, and the one-vertex curl graph gives
 * ([2n-2] + [2]) ([2n-1] + 1).  The value is independent of the choice of
 * outer face, and results are memoized in the shared skein cache under the
 * graph's canonical key.
 *
 * graph_eval parallelizes over orientations with OpenMP;
 * graph_eval_serial is the single-thread reference with identical output
 * (exact arithmetic makes the reduction order irrelevant).
 *
 * @throws std::invalid_argument if n < 2, if the map has sites but no outer
 *         face, or if the graph is too large for the orientation sum.
 */
LaurentPoly graph_eval(const FourValentGraph& g, int n);
LaurentPoly graph_eval_serial(const FourValentGraph& g, int n);

/**
 * @brief SO(2n) Kauffman polynomial by three-way resolution into graphs.
 *
 * Every crossing is resolved as q * (right splice) + q^-1 * (left splice)
 * - (rigid vertex), splices taken at the under strand exactly as in
 * splice_site, and each of the 3^c resolutions is evaluated with the graph
 * state sum; any orientation on the input is ignored.  Agrees with
 * kauffman_skein and jaeger_kauffman.  kauffman_state_sum parallelizes over
 * resolutions with OpenMP; kauffman_state_sum_serial is the single-thread
 * reference with identical output.
 *
 * @throws std::invalid_argument if n < 2 or the diagram is too large for the
 *         resolution sum.
 */
LaurentPoly kauffman_state_sum(const LinkDiagram& d, int n);
LaurentPoly kauffman_state_sum_serial(const LinkDiagram& d, int n);

/// The four local graph skein identities validated by check_graph_identity.
enum class GraphIdentity { R0, R1, R2, R3 };

/**
 * @brief A closure turning a graph identity's local tangles into closed
 *        graphs: a noncrossing pairing of the boundary stubs plus optional
 *        disjoint context.
 *
 * stub_pairing[i] = j joins boundary positions i and j by an arc; it must be
 * a fixed-point-free involution, noncrossing in the boundary's cyclic order.
 * spectator_loops adds disjoint circles and spectator_curl adds a disjoint
 * one-vertex curl graph.  through_vertex reroutes the arc attached to stub 0
 * through a kinked vertex, so the identity is also exercised inside a
 * nontrivial graph.
 */
struct GraphClosure {
  std::vector<int> stub_pairing;
  int spectator_loops = 0;
  bool spectator_curl = false;
  bool through_vertex = false;
};

/// Ready-made closures (at least three) for each identity.
std::vector<GraphClosure> standard_closures(GraphIdentity id);

/**
 * @brief Evaluates both sides of a graph skein identity inside a closure
 *        using graph_eval and reports whether they agree.
 *
 *  - R0: a disjoint circle multiplies the value by [2n-1] + 1.
 *  - R1: a vertex with a loop on two adjacent legs equals ([2n-2] + [2])
 *        times the kink-free strand.
 *  - R2: the two-vertex bigon equals ([2n-3] + 1) times the parallel arcs
 *        plus [2] times the merged vertex.
 *  - R3: sliding a strand across a vertex: the two sides of the slide agree
 *        after adding the three-vertex corner terms and [2n-4] times the
 *        turn-back arcs (a ten-tangle identity, five tangles per side).
 *
 * @throws std::invalid_argument when the closure does not fit the identity:
 *         wrong stub count, not a fixed-point-free involution, crossing
 *         pairs, or through_vertex on a stubless identity.
 */
bool check_graph_identity(GraphIdentity id, const GraphClosure& closure, int n);

}  // namespace kauffman
