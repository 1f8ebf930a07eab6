/**
 * @file kauffman_direct.hpp
 * @brief Direct skein-recursion engine for the Kauffman polynomial.
 */
#pragma once

#include "diagram.hpp"
#include "laurent.hpp"

namespace kauffman {

/**
 * @brief Kauffman polynomial of an unoriented link diagram at level n >= 2.
 *
 * The value is the regular-isotopy invariant determined by:
 *  - a circle with no crossings evaluates to delta = [2n-1] + 1, and a
 *    split circle multiplies a diagram's value by delta;
 *  - switching a crossing changes the value by (q - q^-1) times the
 *    difference of the two planar smoothings of that crossing, i.e.
 *    K(D) = K(D_switched) + (q - q^-1) (K(S_R) - K(S_L));
 *  - a positive (negative) curl multiplies the value by q^{2n-1}
 *    (q^{1-2n}).
 *
 * The recursion resolves crossings toward descending diagrams (each strand
 * passing over everything visited after it), whose value is
 * prod_i q^{(2n-1) w_i} * delta^{#components}, with w_i the self-writhe of
 * component i.  Any orientation on the input is ignored: the value only
 * depends on the underlying unoriented diagram.  The computation shares the
 * process-wide memo cache (see skein_memo in slnpoly.hpp).
 *
 * @throws std::invalid_argument if n < 2.
 */
LaurentPoly kauffman_skein(const LinkDiagram& d, int n);

}  // namespace kauffman
