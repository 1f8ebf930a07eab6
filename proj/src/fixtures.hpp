/**
 * @file fixtures.hpp
 * @brief Named reference diagrams used by tests and the CLI fixture table.
 */
#pragma once

#include <string>
#include <vector>

#include "diagram.hpp"

namespace kauffman {

/// Names accepted by fixture(), in display order.
const std::vector<std::string>& fixture_names();

/**
 * @brief Returns the named reference diagram.
 *
 * Available: "unknot" (crossingless circle), "curl_pos" / "curl_neg"
 * (one-crossing kinked circles), "hopf" (positively oriented Hopf link,
 * writhe +2), "trefoil_right" (writhe +3), "trefoil_left" (its mirror),
 * "figure_eight" (writhe 0).
 *
 * @throws std::invalid_argument for unknown names.
 */
LinkDiagram fixture(const std::string& name);

}  // namespace kauffman
