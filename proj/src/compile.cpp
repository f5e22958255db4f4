/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/compile.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace magicmap {

namespace {

map_options options_for(run_config const& cfg)
{
  map_options opt = cfg.mode == "said-baseline" ? map_options::said_baseline()
                                                : map_options::hipe();
  if (cfg.mode == "hipe")
    opt.share_aux = cfg.share;
  opt.grid_rows = cfg.grid_rows;
  opt.grid_cols = cfg.grid_cols;
  return opt;
}

compiled_unit finish(std::string const& benchmark, std::string const& k_label, int k,
                     lut_netlist&& nl, aig const& reference, run_config const& cfg)
{
  compiled_unit u;
  u.benchmark = benchmark;
  u.k_label = k_label;
  u.k = k;
  u.mode = cfg.mode;
  u.luts = std::move(nl);

  non_netlist nn = translate(u.luts);
  if (cfg.mode != "said-baseline")
    nn = refine_cascades(nn);
  u.nn = std::move(nn);

  map_options opt = options_for(cfg);
  u.pl = place_supergates(u.nn, opt);
  u.sch = build_schedule(u.pl, opt);
  u.st = count_stats(u.sch, u.pl);
  u.total_ops = count_total_ops(u.sch);

  // fail closed: a compiled schedule must satisfy the legality checker
  if (auto err = check_schedule(u.sch, u.pl); !err.empty())
    throw mca_error("schedule legality violation: " + err);

  bool exhaustive = false;
  bool do_verify = true;
  switch (cfg.verify) {
  case verify_mode::off: do_verify = false; break;
  case verify_mode::exhaustive: exhaustive = true; break;
  case verify_mode::random_vectors: exhaustive = false; break;
  case verify_mode::automatic: exhaustive = reference.num_pis() <= 12; break;
  }
  if (do_verify)
    u.verdict = verify_equivalence(u.sch, u.pl, reference, exhaustive, cfg.vectors, cfg.seed);

  report_inputs ri;
  ri.benchmark = benchmark;
  ri.mode = cfg.mode;
  ri.k_label = k_label;
  ri.seed = cfg.seed;
  ri.nn = &u.nn;
  ri.pl = &u.pl;
  ri.sch = &u.sch;
  ri.st = u.st;
  ri.verdict = u.verdict ? &*u.verdict : nullptr;
  if (!cfg.bitlet_config.empty()) {
    auto params = load_bitlet_params(cfg.bitlet_config);
    params.io_bits = static_cast<double>(u.luts.pi_names.size() + u.luts.po_refs.size());
    ri.analytics = model_throughput_energy(u.st, u.total_ops, params);
  }
  u.report = emit_mapping_report(ri);
  return u;
}

} // namespace

compiled_unit compile_one(std::string const& benchmark, raw_netlist const& raw,
                          aig const& reference, std::optional<int> k, run_config const& cfg)
{
  if (cfg.use_netlist_luts || !k) {
    lut_netlist nl = luts_from_raw(raw);
    return finish(benchmark, "netlist", nl.k, std::move(nl), reference, cfg);
  }
  aig subject = from_raw(raw);
  if (cfg.balance)
    subject = and_balance(subject);
  lut_netlist nl = cfg.two_pass ? map_luts_two_pass(subject, *k, cfg.cut_count, cfg.wide_cut)
                                : map_luts(subject, *k, cfg.cut_count, cfg.balance);
  // carry original signal names where possible
  nl.pi_names = raw.primary_inputs;
  nl.po_names = raw.primary_outputs;
  return finish(benchmark, std::to_string(*k), *k, std::move(nl), reference, cfg);
}

compiled_unit compile_lut_netlist(std::string const& benchmark, lut_netlist const& nl,
                                  aig const& reference, run_config const& cfg)
{
  lut_netlist copy = nl;
  return finish(benchmark, "netlist", nl.k, std::move(copy), reference, cfg);
}

batch_result compile(run_config const& cfg)
{
  namespace fs = std::filesystem;
  batch_result res;
  std::ostringstream summary;
  summary << "benchmark           k         mode            cycles  mems  levels  verified\n";

  auto write_file = [&](std::string const& path, std::string const& text) {
    std::ofstream f(path);
    if (!f)
      throw std::runtime_error("cannot write '" + path + "'");
    f << text;
  };

  for (auto const& input : cfg.inputs) {
    std::string base = fs::path(input).stem().string();
    raw_netlist raw;
    aig reference;
    bool have_raw = false;
    try {
      if (fs::path(input).extension() == ".aag") {
        reference = parse_aiger_ascii_file(input);
      } else {
        raw = parse_blif_file(input);
        reference = from_raw(raw);
        have_raw = true;
      }
    } catch (parse_error const& e) {
      res.exit_code = 2;
      res.summary = std::string("input-error: ") + input + ": " + e.what() + "\n";
      return res;
    }

    std::vector<std::optional<int>> ks;
    if (cfg.use_netlist_luts || cfg.k_values.empty())
      ks.push_back(std::nullopt);
    else
      for (int k : cfg.k_values)
        ks.push_back(k);

    std::vector<sweep_point> sweep;
    for (auto k : ks) {
      compiled_unit u;
      try {
        if (!have_raw) {
          // AIGER input: synthesize from the parsed graph
          if (!k)
            throw mca_error("netlist-LUT mode requires a BLIF input");
          aig subject = cfg.balance ? and_balance(reference) : reference;
          lut_netlist nl = cfg.two_pass
                               ? map_luts_two_pass(subject, *k, cfg.cut_count, cfg.wide_cut)
                               : map_luts(subject, *k, cfg.cut_count, cfg.balance);
          u = compile_lut_netlist(base, nl, reference, cfg);
          u.k_label = std::to_string(*k);
          u.k = *k;
        } else {
          u = compile_one(base, raw, reference, k, cfg);
        }
      } catch (mca_error const& e) {
        res.exit_code = 3;
        res.summary = std::string("capacity-or-mapping-error: ") + base + ": " + e.what() + "\n";
        return res;
      } catch (sim_error const& e) {
        res.exit_code = 4;
        res.summary = std::string("simulation-error: ") + base + ": " + e.what() + "\n";
        return res;
      }

      if (u.verdict && !u.verdict->pass) {
        res.exit_code = 4;
        res.summary = "verification-fail: " + base + " (k=" + u.k_label + ", " + cfg.mode +
                      "): " + u.verdict->detail + "\n";
        return res;
      }

      summary << std::left << std::setw(20) << u.benchmark << std::setw(10) << u.k_label
              << std::setw(16) << u.mode << std::setw(8) << u.st.cycles << std::setw(6)
              << u.st.mems << std::setw(8) << u.st.levels
              << (u.verdict ? (u.verdict->pass ? "PASS" : "FAIL") : "-") << "\n";
      if (u.k > 0)
        sweep.push_back({u.k, u.st});

      if (!cfg.report_path.empty()) {
        std::string path = cfg.report_path;
        if (cfg.inputs.size() > 1 || ks.size() > 1) {
          path += (path.back() == '/' ? "" : "_") + base + "_k" + u.k_label + "_" + cfg.mode +
                  ".txt";
        }
        write_file(path, u.report);
        if (cfg.emit_blif)
          write_file(path + ".blif", emit_blif(lut_netlist_to_raw(u.luts, u.benchmark)));
        if (cfg.emit_trace)
          write_file(path + ".trace", emit_trace(u.sch));
      }
      res.units.push_back(std::move(u));
    }

    if (sweep.size() > 1) {
      summary << "pareto " << base << ":";
      for (auto const& p : pareto_sweep(sweep))
        summary << " (k=" << p.k << " cycles=" << p.st.cycles << " mems=" << p.st.mems << ")";
      summary << "\n";
    }
  }
  res.summary = summary.str();
  return res;
}

} // namespace magicmap
