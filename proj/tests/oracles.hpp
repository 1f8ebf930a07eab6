/**
 * @file oracles.hpp
 * @brief Independent reference implementations and shared builders used only
 *        by the test suite.
 *
 * Everything here is deliberately implemented by a different route than the
 * library engines: the bracket oracle is a plain 2^c state sum, the
 * two-variable skein oracle runs without memoization in a separate
 * coefficient ring, and the state-count oracle enumerates dart orientations
 * exhaustively.  Agreement between these and the engines is what the test
 * suite certifies.
 */
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace kauffman::testing {

// ------------------------------------------------------------ bracket oracle

/**
 * @brief Kauffman bracket of an unoriented diagram as a Laurent polynomial in
 *        the smoothing variable A, normalized so a single circle gives
 *        -A^2 - A^-2 (one factor per circle, empty diagram = 1).
 */
LaurentPoly kauffman_bracket_A(const LinkDiagram& d);

/**
 * @brief The sl(2) value predicted from the bracket: q^{2w} times the
 *        writhe-normalized bracket (-A^3)^{-w} <D> under A^2 -> -q.
 *
 * Requires an oriented diagram.  @throws std::logic_error if the normalized
 * bracket has odd A-powers (which the substitution cannot absorb).
 */
LaurentPoly sl2_from_bracket(const LinkDiagram& d);

// ------------------------------------------------- two-variable skein oracle

/**
 * @brief Minimal exact polynomial ring in two variables a and z (Laurent in
 *        both), just enough for the unoriented two-variable skein recursion.
 */
struct TwoVarPoly {
  /// (a-exponent, z-exponent) -> coefficient; zero coefficients never stored.
  std::map<std::pair<int, int>, Integer> terms;

  static TwoVarPoly monomial(int a_exp, int z_exp, Integer coeff = 1);
  static TwoVarPoly one() { return monomial(0, 0); }

  TwoVarPoly& operator+=(const TwoVarPoly& rhs);
  TwoVarPoly& operator-=(const TwoVarPoly& rhs);
  friend TwoVarPoly operator+(TwoVarPoly lhs, const TwoVarPoly& rhs) { return lhs += rhs; }
  friend TwoVarPoly operator-(TwoVarPoly lhs, const TwoVarPoly& rhs) { return lhs -= rhs; }
  friend TwoVarPoly operator*(const TwoVarPoly& lhs, const TwoVarPoly& rhs);
  bool operator==(const TwoVarPoly& rhs) const { return terms == rhs.terms; }
};

/**
 * @brief Unoriented two-variable skein evaluation with circle value
 *        1 + (a - a^-1) z^-1, positive/negative kinks scaling by a / a^-1,
 *        and switch relation P(D) = P(switched) + z (P(right) - P(left)).
 *
 * Plain recursion, no cache, no component splitting beyond the base case.
 */
TwoVarPoly two_variable_skein(const LinkDiagram& d);

/**
 * @brief Checks value == P(a = q^{2n-1}, z = q - q^-1) after clearing the
 *        z-denominators on both sides.
 */
bool matches_two_variable_specialization(const TwoVarPoly& p,
                                         const LaurentPoly& value, int n);

// --------------------------------------------------- state-count brute force

/**
 * @brief Counts (splice pattern, orientation) states by exhaustive
 *        enumeration over all 3^V patterns, all 2^(4V) dart directions and
 *        all 2^loops loop signs, keeping exactly the assignments where every
 *        edge is coherent, strands run through unspliced sites, and at every
 *        spliced site both under darts point inward.
 */
std::uint64_t brute_force_state_count(const LinkDiagram& d);

// ------------------------------------------------------------- random moves

/**
 * @brief Deterministic random Reidemeister walk: returns the trail
 *        start = t[0], t[1], ..., t[steps] where each step applies a random
 *        valid R2 poke/unpoke or R3 slide.
 *
 * Insertions are disallowed once a diagram reaches max_sites, which biases
 * long walks toward removals and keeps every visited diagram small.
 */
std::vector<LinkDiagram> random_reidemeister_trail(const LinkDiagram& start,
                                                   int steps, int max_sites,
                                                   std::mt19937& rng);

/// Disjoint union (sites of b renumbered after a; loops appended).
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

// ------------------------------------------------------------- web builders

/// A crossing-free oriented circle (one free loop).
OrientedGraph circle_web();

/// The closed web with one vertex: a loop on two adjacent legs plus the
/// closing arc on the other two.  flip reverses the flow.
OrientedGraph curl_web(bool flip = false);

/// Two vertices joined by two parallel edges, closed up (the double edge).
OrientedGraph closed_bigon_web();

/// k disjoint oriented circles.
OrientedGraph loops_web(int k);

/// The same web with one extra disjoint circle.
OrientedGraph with_extra_loop(OrientedGraph g);

/**
 * @brief Two vertices joined by two antiparallel edges with four external
 *        legs, closed by matching closure (1 or 2): 1 joins each out-leg to
 *        the in-leg across the web, 2 joins each out-leg to the in-leg on
 *        its own side.
 */
OrientedGraph square_web_closed(int closure);

/// Loop counts of the two resolutions of the square under the same closures.
int square_through_circles(int closure);
int square_turnback_circles(int closure);

/**
 * @brief The strand-slide configurations: an oriented strand crossing the two
 *        lower (side = below) or upper (side = above) legs of a vertex, with
 *        both crossings expanded into smoothing/vertex webs.
 *
 * term: 0 = both smoothed, 1 = first smoothed/second vertex, 2 = vertex/
 * smoothed, 3 = both vertices.  closure: 0 = plain arcs, 1 = plain arcs plus
 * a spectator circle, 2 = one arc rerouted through a curl-web vertex.
 */
enum class SlideSide { below, above };
OrientedGraph slide_web(SlideSide side, int term, int closure);

/// q^-2 [term 0] - q^-1 [term 1] - q^-1 [term 2] + [term 3], evaluated.
LaurentPoly slide_side_sum(SlideSide side, int closure, int n);

}  // namespace kauffman::testing
