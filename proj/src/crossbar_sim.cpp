/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/crossbar_sim.hpp"

#include <ostream>
#include <random>

namespace magicmap {

std::vector<bool> run(schedule const& s, placement const& p, std::vector<bool> const& pi_values,
                      std::ostream* dump)
{
  if (pi_values.size() != p.pi_home.size())
    throw std::invalid_argument("pi_values length mismatch");
  crossbar_state st(p.grid_rows, p.grid_cols);

  // data is assumed resident: input cells and constants load free of charge
  for (auto const& [coord, info] : p.cells) {
    switch (info.preload.k) {
    case preload_info::kind::pi_plain:
      st.set(coord, pi_values[info.preload.pi]);
      break;
    case preload_info::kind::pi_compl:
      st.set(coord, !pi_values[info.preload.pi]);
      break;
    case preload_info::kind::constant:
      st.set(coord, info.preload.cval);
      break;
    case preload_info::kind::none:
      break;
    }
  }

  for (size_t ci = 0; ci < s.cycles.size(); ++ci) {
    // ops inside one cycle are independent; outputs are init-to-0 then
    // conditionally switched, which amounts to writing the NOR directly
    std::vector<std::pair<cell_coord, bool>> writes;
    for (auto const& op : s.cycles[ci]) {
      if (op.kind == op_kind::init) {
        writes.push_back({op.output, false});
        continue;
      }
      if (op.output.row >= p.grid_rows || op.output.col >= p.grid_cols)
        throw sim_error("coordinate out of range at cycle " + std::to_string(ci + 1));
      bool any = false;
      for (auto const& in : op.inputs) {
        if (in.row >= p.grid_rows || in.col >= p.grid_cols)
          throw sim_error("coordinate out of range at cycle " + std::to_string(ci + 1));
        auto v = st.get(in);
        if (!v)
          throw sim_error("uninitialized-read of cell (" + std::to_string(in.row) + "," +
                          std::to_string(in.col) + ") at cycle " + std::to_string(ci + 1));
        any = any || *v;
      }
      writes.push_back({op.output, !any});
    }
    for (auto const& [coord, v] : writes)
      st.set(coord, v);
    if (dump) {
      *dump << "cycle " << (ci + 1) << ":";
      for (auto const& [coord, v] : writes)
        *dump << " (" << coord.row << "," << coord.col << ")=" << (v ? 1 : 0);
      *dump << "\n";
    }
  }

  std::vector<bool> out;
  out.reserve(p.po_cells.size());
  for (auto const& c : p.po_cells) {
    auto v = st.get(c);
    if (!v)
      throw sim_error("uninitialized-read of primary output cell (" + std::to_string(c.row) +
                      "," + std::to_string(c.col) + ")");
    out.push_back(*v);
  }
  return out;
}

verify_verdict verify_equivalence(schedule const& s, placement const& p, aig const& reference,
                                  bool exhaustive, long num_vectors, uint64_t seed)
{
  verify_verdict v;
  unsigned const n = reference.num_pis();
  if (p.pi_home.size() != n) {
    v.pass = false;
    v.detail = "PI count mismatch between placement and reference";
    return v;
  }

  auto try_pattern = [&](std::vector<bool> const& pat) {
    auto expect = simulate(reference, pat);
    auto got = run(s, p, pat);
    if (expect != got) {
      v.pass = false;
      v.counterexample = pat;
      std::string e, g, in;
      for (bool b : expect)
        e += b ? '1' : '0';
      for (bool b : got)
        g += b ? '1' : '0';
      for (bool b : pat)
        in += b ? '1' : '0';
      v.detail = "mismatch on input " + in + ": reference " + e + ", crossbar " + g;
      return false;
    }
    return true;
  };

  if (exhaustive) {
    if (n > 20)
      throw std::invalid_argument("exhaustive verification limited to 20 inputs");
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
      std::vector<bool> pat(n);
      for (unsigned i = 0; i < n; ++i)
        pat[i] = (m >> i) & 1;
      ++v.vectors;
      if (!try_pattern(pat))
        return v;
    }
    return v;
  }
  std::mt19937_64 rng(seed);
  for (long t = 0; t < num_vectors; ++t) {
    std::vector<bool> pat(n);
    for (unsigned i = 0; i < n; ++i)
      pat[i] = rng() & 1;
    ++v.vectors;
    if (!try_pattern(pat))
      return v;
  }
  return v;
}

} // namespace magicmap
