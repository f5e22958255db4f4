/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/scheduler.hpp"

#include <string>
#include <vector>

namespace magicmap {

/*! \brief Parameterized throughput/energy model inputs.
 *
 * Values are user configuration with documented example defaults; they are
 * not calibrated to any particular technology node.
 */
struct bitlet_params {
  double pim_cycle_time = 10e-9;      //!< seconds per MAGIC cycle
  double pim_energy_per_op = 0.1e-12; //!< joules per executed NOR/NOT
  double arrays_in_parallel = 1024;   //!< concurrently operating arrays
  double cpu_bandwidth = 1e11;        //!< bits/second of external memory traffic
  double cpu_energy_per_bit = 10e-12; //!< joules per transferred bit
  double io_bits = 64;                //!< bits moved per evaluation (PI+PO widths)

  void validate() const;
};

bitlet_params load_bitlet_params(std::string const& path);

struct throughput_energy {
  double pim_throughput = 0; //!< evaluations per second across arrays
  double cpu_throughput = 0;
  double pim_energy = 0; //!< joules per evaluation
  double cpu_energy = 0;
};

/*! \brief PIM is limited by cycle count; the CPU by memory bandwidth and
 *         bits transferred. total_ops = executed micro-ops over all cycles
 *         (parallel ops each consume energy). */
throughput_energy model_throughput_energy(stats const& st, long total_ops,
                                          bitlet_params const& params);

long count_total_ops(schedule const& s);

/*! \brief One sweep point: mapping metrics obtained at a given k. */
struct sweep_point {
  int k = 0;
  stats st;
};

/*! \brief Non-dominated points under (cycles, mems), sorted by cycles then
 *         mems then k; duplicates on the frontier are all kept. */
std::vector<sweep_point> pareto_sweep(std::vector<sweep_point> const& results);

} // namespace magicmap
