/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/analytics.hpp"
#include "magicmap/crossbar_sim.hpp"
#include "magicmap/scheduler.hpp"
#include "magicmap/supergate.hpp"

#include <optional>
#include <string>

namespace magicmap {

struct report_inputs {
  std::string benchmark;
  std::string mode;
  std::string k_label; //!< "netlist" or the numeric k
  uint64_t seed = 0;
  non_netlist const* nn = nullptr;
  placement const* pl = nullptr;
  schedule const* sch = nullptr;
  stats st;
  verify_verdict const* verdict = nullptr; //!< null when verification off
  std::optional<throughput_energy> analytics;
};

/*! \brief Deterministic structured-text mapping report (stable key order,
 *         no timestamps): grid assignments, per-cycle micro-ops, metrics. */
std::string emit_mapping_report(report_inputs const& in);

} // namespace magicmap
