/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/supergate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace magicmap {

int non_netlist::num_levels() const
{
  int d = 0;
  for (auto const& g : gates)
    d = std::max(d, g.level);
  return d;
}

int non_netlist::op_count() const
{
  int ops = 0;
  for (auto const& g : gates)
    ops += g.size() + 1 + (g.emit_final_not ? 1 : 0);
  return ops;
}

bool non_netlist::drives_po(int g) const
{
  for (auto const& r : po_refs)
    if (r.is_gate() && r.index == g)
      return true;
  return false;
}

std::vector<bool> non_netlist::eval(std::vector<bool> const& pattern) const
{
  if (pattern.size() != pi_names.size())
    throw std::invalid_argument("pattern length mismatch");
  std::vector<bool> val(gates.size());
  auto value_of = [&](non_ref r) {
    if (r.is_pi())
      return static_cast<bool>(pattern[r.index]);
    if (r.is_const())
      return r.cval;
    return static_cast<bool>(val[r.index]);
  };
  for (size_t i = 0; i < gates.size(); ++i) {
    // NOR semantics: term = NOR of complemented-literal cells,
    // output = NOT(NOR(terms))
    bool outer_or = false;
    for (auto const& term : gates[i].terms) {
      bool any = false;
      for (auto const& lit : term) {
        bool cell = lit.positive ? !value_of(lit.signal) : value_of(lit.signal);
        any = any || cell;
      }
      bool t = !any; // first-level NOR
      outer_or = outer_or || t;
    }
    val[i] = outer_or; // NOT(NOR(terms))
  }
  std::vector<bool> out;
  out.reserve(po_refs.size());
  for (auto const& r : po_refs)
    out.push_back(value_of(r));
  return out;
}

supergate sop_to_non(sop_cover const& cover)
{
  supergate sg;
  for (auto const& cube : cover.cubes) {
    std::vector<sg_lit> term;
    for (size_t i = 0; i < cube.lits.size(); ++i) {
      if (cube.lits[i] == '-')
        continue;
      term.push_back({non_ref::pi(static_cast<int>(i)), cube.lits[i] == '1'});
    }
    if (term.empty())
      throw std::invalid_argument("tautological cover has no supergate form");
    sg.terms.push_back(std::move(term));
  }
  if (sg.terms.empty())
    throw std::invalid_argument("empty cover has no supergate form");
  sg.emit_final_not = true;
  return sg;
}

non_netlist translate(lut_netlist const& nl)
{
  non_netlist nn;
  nn.pi_names = nl.pi_names;
  nn.po_names = nl.po_names;

  // signal for each LUT after constant folding
  std::vector<non_ref> lut_sig(nl.luts.size());
  std::vector<int> gate_of(nl.luts.size(), -1);

  for (size_t i = 0; i < nl.luts.size(); ++i) {
    auto const& l = nl.luts[i];
    auto ref_of = [&](sig_ref r) {
      return r.is_pi() ? non_ref::pi(r.index) : lut_sig[r.index];
    };

    // fold constant inputs through the cover
    std::vector<std::vector<sg_lit>> terms;
    bool is_const1 = false;
    for (auto const& cube : l.cover.cubes) {
      std::vector<sg_lit> term;
      bool dropped = false;
      for (size_t j = 0; j < cube.lits.size(); ++j) {
        if (cube.lits[j] == '-')
          continue;
        bool pos = cube.lits[j] == '1';
        non_ref src = ref_of(l.inputs[j]);
        if (src.is_const()) {
          bool litval = pos ? src.cval : !src.cval;
          if (!litval) {
            dropped = true;
            break;
          }
          continue; // satisfied literal vanishes
        }
        term.push_back({src, pos});
      }
      if (dropped)
        continue;
      if (term.empty()) {
        is_const1 = true; // tautological cube dominates
        break;
      }
      terms.push_back(std::move(term));
    }

    if (is_const1) {
      lut_sig[i] = non_ref::constant(true);
      continue;
    }
    if (terms.empty()) {
      lut_sig[i] = non_ref::constant(false);
      continue;
    }
    supergate sg;
    sg.terms = std::move(terms);
    sg.emit_final_not = true;
    sg.name = l.name.empty() ? "g" + std::to_string(i) : l.name;
    int lvl = 0;
    for (auto const& term : sg.terms)
      for (auto const& lit : term)
        if (lit.signal.is_gate())
          lvl = std::max(lvl, nn.gates[lit.signal.index].level);
    sg.level = lvl + 1;
    nn.gates.push_back(std::move(sg));
    int gi = static_cast<int>(nn.gates.size() - 1);
    gate_of[i] = gi;
    lut_sig[i] = non_ref::gate(gi);
  }

  for (auto const& r : nl.po_refs)
    nn.po_refs.push_back(r.is_pi() ? non_ref::pi(r.index) : lut_sig[r.index]);
  return nn;
}

non_netlist refine_cascades(non_netlist const& nn)
{
  non_netlist out = nn;
  for (size_t g = 0; g < out.gates.size(); ++g)
    out.gates[g].emit_final_not = out.drives_po(static_cast<int>(g));
  return out;
}

} // namespace magicmap
