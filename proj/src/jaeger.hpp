/**
 * @file jaeger.hpp
 * @brief Oriented state-sum engine for the Kauffman polynomial.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace kauffman {

/**
 * @brief One state of the oriented expansion: a splice pattern together
 *        with an admissible orientation of the resulting circuits.
 *
 * Each crossing is left in place (0), right-spliced (1, weight q - q^-1)
 * or left-spliced (2, weight -(q - q^-1)).  An orientation is admissible
 * when every spliced site is entered along its two under darts and exited
 * along its two over darts; crossings left in place are traversed straight
 * through.  Free loops of the input carry independent +-1 signs.
 */
struct SpliceState {
  std::vector<uint8_t> choices;  ///< per site: 0 keep, 1 right, 2 left
  Orientation orientation;       ///< on the darts of the input diagram
  LaurentPoly weight;            ///< product of the splice weights
  int rot = 0;                   ///< rotation number of the spliced diagram
};

/**
 * @brief All states of the expansion (3^V splice patterns, each with its
 *        admissible orientations and loop signs).
 *
 * Intended for small diagrams; the engines below stream over the same
 * states without materializing them.
 *
 * @throws std::invalid_argument for more than 20 crossings.
 */
std::vector<SpliceState> jaeger_states(const LinkDiagram& d);

/**
 * @brief Contribution of one state: weight * q^{(1-n) rot} * R(residual),
 *        where the residual diagram keeps the unspliced crossings with the
 *        state's orientation and R is the oriented link polynomial.
 */
LaurentPoly jaeger_term(const LinkDiagram& d, const SpliceState& s, int n);

/**
 * @brief Kauffman polynomial via the oriented state sum: the sum of
 *        jaeger_term over all states.  Equals kauffman_skein on every
 *        diagram.  Parallelized over splice patterns with OpenMP.
 *
 * @throws std::invalid_argument if n < 2 or the diagram has more than 20
 *         crossings (the sum has 3^V patterns).
 */
LaurentPoly jaeger_kauffman(const LinkDiagram& d, int n);

/// Single-threaded reference implementation of jaeger_kauffman.
LaurentPoly jaeger_kauffman_serial(const LinkDiagram& d, int n);

/**
 * @brief Writes one JSON object per state (choices, inward flags, loop
 *        signs, rotation number, weight, residual value R and the full
 *        term) followed by a trailing total line.
 */
void dump_states(const LinkDiagram& d, int n, std::ostream& out);

}  // namespace kauffman
