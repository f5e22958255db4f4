/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/analytics.hpp"
#include "magicmap/crossbar_sim.hpp"
#include "magicmap/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magicmap {

enum class verify_mode : uint8_t { off, random_vectors, exhaustive, automatic };

struct run_config {
  std::vector<std::string> inputs;
  std::vector<int> k_values; //!< empty means netlist-carried LUT structure
  std::string mode = "hipe"; //!< "hipe" or "said-baseline"
  int grid_rows = 1024;
  int grid_cols = 1024;
  verify_mode verify = verify_mode::automatic; //!< exhaustive <= 12 PIs, else random
  long vectors = 1000;
  uint64_t seed = 1;
  std::string report_path; //!< file for a single run, prefix for batches
  std::string bitlet_config;
  bool emit_blif = false;   //!< write intermediate LUT netlists next to reports
  bool emit_trace = false;  //!< write flat schedule traces next to reports
  bool use_netlist_luts = false; //!< skip synthesis; each node is one LUT
  bool balance = true;           //!< AND-balance + SOP-balanced cut evaluation
  bool two_pass = false;         //!< wider SOP-balanced pass before final mapping
  int cut_count = 8;             //!< priority cuts kept per node
  int wide_cut = 8;              //!< cut size of the balancing pass
  bool share = true;             //!< alignment-copy resource sharing (hipe)
};

struct compiled_unit {
  std::string benchmark;
  std::string k_label;
  int k = 0;
  std::string mode;
  lut_netlist luts;
  non_netlist nn;
  placement pl;
  schedule sch;
  stats st;
  long total_ops = 0;
  std::optional<verify_verdict> verdict;
  std::string report;
};

/*! \brief Run synthesis + mapping for one already-parsed design. Throws
 *         parse_error/mca_error/sim_error on failure. */
compiled_unit compile_one(std::string const& benchmark, raw_netlist const& raw, aig const& reference,
                          std::optional<int> k, run_config const& cfg);

/*! \brief Map a prepared LUT netlist (the no-synthesis path). */
compiled_unit compile_lut_netlist(std::string const& benchmark, lut_netlist const& nl,
                                  aig const& reference, run_config const& cfg);

struct batch_result {
  int exit_code = 0; //!< 0 ok, 1 usage, 2 parse/input, 3 capacity, 4 verification
  std::string summary; //!< per-run metric table plus Pareto sections
  std::vector<compiled_unit> units;
};

/*! \brief Full batch: every input times every k, reports written to disk. */
batch_result compile(run_config const& cfg);

} // namespace magicmap
