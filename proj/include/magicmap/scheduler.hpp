/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/placer.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace magicmap {

/*! \brief Ordered cycles of mutually alignment-compatible micro-ops.
 *
 * Output-cell initialization is folded into each op's cycle and not charged
 * separately; preloaded cells (input data and constants) exist before
 * cycle 1.
 */
struct schedule {
  std::vector<std::vector<micro_op>> cycles;
  int num_cycles() const { return static_cast<int>(cycles.size()); }
};

struct stats {
  int cycles = 0;
  int mems = 0;
  int levels = 0;
};

/*! \brief Pack placement micro-ops into cycles.
 *
 * Greedy in creation order: an op joins a cycle when every input was
 * written in a strictly earlier cycle (or is preloaded) and the cycle stays
 * alignment-compatible (all row-wise ops sharing the input-column set and
 * output column, or all column-wise ops sharing the row sets). Baseline
 * mapping serializes copy ops. Fills cell birth/death cycles.
 */
schedule build_schedule(placement& p, map_options const& opt);

/*! \brief cycles = schedule length; mems = max(PI count, fabric cells used
 *         outside the input band). */
stats count_stats(schedule const& s, placement const& p);

/*! \brief Independent legality check from raw coordinates: collinearity,
 *         intra-cycle alignment compatibility, no read/write overlap,
 *         single assignment, dataflow order. Returns the first violation,
 *         empty string when legal. */
std::string check_schedule(schedule const& s, placement const& p);

/*! \brief Flat trace: one line per cycle with op coordinates. */
std::string emit_trace(schedule const& s);

/*! \brief Parse the flat trace format back into a schedule. */
schedule parse_trace(std::string const& text);

} // namespace magicmap
