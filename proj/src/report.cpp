/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/report.hpp"

#include <sstream>

namespace magicmap {

namespace {

char const* role_name(cell_role r)
{
  switch (r) {
  case cell_role::free_cell: return "free";
  case cell_role::pi_home: return "pi";
  case cell_role::pi_compl: return "pi-compl";
  case cell_role::input_copy: return "input-copy";
  case cell_role::donor: return "donor";
  case cell_role::aux: return "aux";
  case cell_role::term_out: return "term-output";
  case cell_role::gate_out: return "gate-output";
  case cell_role::final_out: return "final-output";
  case cell_role::po_copy: return "po-copy";
  case cell_role::constant: return "constant";
  }
  return "?";
}

std::string signal_name(non_ref r, non_netlist const& nn)
{
  if (r.is_pi())
    return nn.pi_names[r.index];
  if (r.is_const())
    return r.cval ? "const1" : "const0";
  auto const& name = nn.gates[r.index].name;
  return name.empty() ? "g" + std::to_string(r.index) : name;
}

} // namespace

std::string emit_mapping_report(report_inputs const& in)
{
  auto const& nn = *in.nn;
  auto const& pl = *in.pl;
  auto const& sch = *in.sch;
  std::ostringstream os;

  os << "magicmap mapping report\n";
  os << "benchmark: " << in.benchmark << "\n";
  os << "mode: " << in.mode << "\n";
  os << "k: " << in.k_label << "\n";
  os << "seed: " << in.seed << "\n";
  os << "grid: " << pl.grid_rows << "x" << pl.grid_cols << "\n";
  os << "used: " << pl.used_rows << "x" << pl.used_cols << "\n";
  os << "levels: " << in.st.levels << "\n";
  os << "cycles: " << in.st.cycles << "\n";
  os << "mems: " << in.st.mems << "\n";

  os << "\n[placement]\n";
  for (auto const& t : pl.tiles) {
    if (t.gate < 0)
      continue;
    os << "supergate " << signal_name(non_ref::gate(t.gate), nn) << " level " << t.level << " y "
       << t.y << " anchor_row " << t.anchor_row << " orient "
       << (t.flipped ? "flipped" : "normal") << " terms " << t.lit_cells.size();
    if (t.shared_term >= 0)
      os << " shared-input";
    os << "\n";
  }
  os << "cells:\n";
  for (auto const& [coord, info] : pl.cells) {
    os << "  (" << coord.row << "," << coord.col << ") " << role_name(info.role) << " "
       << signal_name(info.signal, nn) << (info.complemented ? "'" : "");
    if (info.birth_cycle >= 0)
      os << " birth " << info.birth_cycle;
    if (info.death_cycle >= 0)
      os << " death " << info.death_cycle;
    os << "\n";
  }

  os << "\n[schedule]\n" << emit_trace(sch);

  os << "\n[verification]\n";
  if (in.verdict) {
    os << "status: " << (in.verdict->pass ? "PASS" : "FAIL") << "\n";
    os << "vectors: " << in.verdict->vectors << "\n";
    if (!in.verdict->pass)
      os << "counterexample: " << in.verdict->detail << "\n";
  } else {
    os << "status: SKIPPED\n";
  }

  if (in.analytics) {
    os << "\n[analytics]\n";
    os << "pim_throughput: " << in.analytics->pim_throughput << "\n";
    os << "cpu_throughput: " << in.analytics->cpu_throughput << "\n";
    os << "pim_energy: " << in.analytics->pim_energy << "\n";
    os << "cpu_energy: " << in.analytics->cpu_energy << "\n";
  }
  return os.str();
}

} // namespace magicmap
