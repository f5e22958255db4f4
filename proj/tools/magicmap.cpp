/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/compile.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
  using namespace magicmap;
  CLI::App app{"magicmap: synthesis and mapping of combinational logic onto "
               "MAGIC NOR crossbar arrays"};

  run_config cfg;
  std::string grid = "1024x1024";
  std::string verify = "auto";
  cfg.k_values = {3};

  app.add_option("inputs", cfg.inputs, "BLIF or ASCII AIGER input files")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--k", cfg.k_values, "LUT input sizes to map (repeatable)")
      ->check(CLI::Range(2, 10));
  app.add_option("--mode", cfg.mode, "mapping mode")
      ->check(CLI::IsMember({"hipe", "said-baseline"}))
      ->capture_default_str();
  app.add_option("--grid", grid, "crossbar dimensions RxC")->capture_default_str();
  app.add_option("--verify", verify,
                 "verification depth: exhaustive, off, or a random-vector count")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized vectors")->capture_default_str();
  app.add_option("--report", cfg.report_path, "report file (or prefix for batches)");
  app.add_option("--bitlet-config", cfg.bitlet_config,
                 "key=value file with throughput/energy model parameters");
  app.add_flag("--emit-blif", cfg.emit_blif, "write mapped LUT netlists as BLIF");
  app.add_flag("--emit-trace", cfg.emit_trace, "write flat schedule traces");
  app.add_flag("--use-netlist-luts", cfg.use_netlist_luts,
               "treat each BLIF node as one LUT (skip synthesis)");
  bool no_balance = false;
  app.add_flag("--no-balance", no_balance, "disable balancing during synthesis");
  app.add_flag("--two-pass", cfg.two_pass, "wider SOP-balancing pass before final mapping");
  bool no_share = false;
  app.add_flag("--no-share", no_share, "disable alignment-copy resource sharing");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) ? 1 : 0;
  }

  cfg.balance = !no_balance;
  cfg.share = !no_share;

  if (sscanf(grid.c_str(), "%dx%d", &cfg.grid_rows, &cfg.grid_cols) != 2 || cfg.grid_rows <= 0 ||
      cfg.grid_cols <= 0) {
    std::cerr << "usage-error: --grid expects RxC\n";
    return 1;
  }
  if (verify == "off")
    cfg.verify = verify_mode::off;
  else if (verify == "exhaustive")
    cfg.verify = verify_mode::exhaustive;
  else if (verify == "auto")
    cfg.verify = verify_mode::automatic;
  else {
    try {
      cfg.vectors = std::stol(verify);
      cfg.verify = verify_mode::random_vectors;
    } catch (...) {
      std::cerr << "usage-error: --verify expects exhaustive, off, auto, or a number\n";
      return 1;
    }
    if (cfg.vectors <= 0) {
      std::cerr << "usage-error: --verify vector count must be positive\n";
      return 1;
    }
  }

  try {
    auto res = compile(cfg);
    std::cout << res.summary;
    return res.exit_code;
  } catch (parse_error const& e) {
    std::cerr << "input-error: " << e.what() << "\n";
    return 2;
  } catch (mca_error const& e) {
    std::cerr << "mapping-error: " << e.what() << "\n";
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
