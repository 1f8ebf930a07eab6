/**
 * @file slnpoly.hpp
 * @brief Regular-isotopy sl(n) link polynomial and its extension to oriented
 *        4-valent graphs (webs).
 */
#pragma once

#include "diagram.hpp"
#include "laurent.hpp"

namespace kauffman {

/**
 * @brief Regular-isotopy sl(n) polynomial R of an oriented link diagram.
 *
 * Characterized by:
 *  - R(unknot) = [n],
 *  - R(positive curl) = q^n R, R(negative curl) = q^-n R,
 *  - R(L+) - R(L-) = (q - q^-1) R(L0)  (Conway skein on oriented diagrams),
 *  - invariance under R2/R3 and multiplicativity over split unions.
 *
 * Computed by descending-diagram recursion with memoization: crossings are
 * switched/smoothed until every strand component lies entirely above the
 * later ones, where the value is prod_i q^{n w_i} [n] over strand components
 * (w_i the self-writhe of component i).
 *
 * @throws std::invalid_argument if n < 2 or the diagram carries no
 *         orientation.
 */
LaurentPoly sln_link(const LinkDiagram& d, int n);

/**
 * @brief MOY-style evaluation R(G) of an oriented 4-valent graph.
 *
 * Every vertex is expanded by the rule
 *   R(vertex) = q R(oriented smoothing) - R(positive crossing),
 * rearranged from the defining decomposition of a positive crossing; the
 * resulting 2^V link diagrams are evaluated with sln_link and summed.  The
 * outer face of the input is irrelevant (link values are sphere-invariant).
 *
 * Satisfies the web relations: a circle contributes [n]; a vertex with a
 * coherently oriented loop on adjacent legs evaluates to [n-1] times the
 * smoothed-out strand; a two-vertex bigon with parallel edges equals [2]
 * times a single vertex; the antiparallel two-vertex square equals the
 * through-arcs plus [n-2] times the turn-back arcs.
 *
 * @throws std::invalid_argument if n < 2; propagates the orientation
 *         validity checks of OrientedGraph::validate().
 */
LaurentPoly moy_graph(const OrientedGraph& g, int n);

}  // namespace kauffman
