/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/aig.hpp"
#include "magicmap/sop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magicmap {

/*! \brief Reference to a LUT-netlist signal: a primary input or a LUT. */
struct sig_ref {
  enum class kind : uint8_t { pi, lut };
  kind k = kind::pi;
  int index = 0;

  static sig_ref pi(int i) { return {kind::pi, i}; }
  static sig_ref lut(int i) { return {kind::lut, i}; }
  bool is_pi() const { return k == kind::pi; }
  bool is_lut() const { return k == kind::lut; }
  bool operator==(sig_ref const& o) const { return k == o.k && index == o.index; }
  bool operator<(sig_ref const& o) const
  {
    return k != o.k ? k < o.k : index < o.index;
  }
};

struct lut {
  std::vector<sig_ref> inputs; //!< leaf order matches cover literal order
  sop_cover cover;
  int level = 0; //!< 1 + max(level of inputs); PIs are level 0
  std::string name; //!< optional, carried from source netlists
};

/*! \brief Levelized network of k-input LUTs carrying SOP covers. */
struct lut_netlist {
  int k = 0;
  std::vector<std::string> pi_names;
  std::vector<lut> luts; //!< topologically ordered
  std::vector<sig_ref> po_refs;
  std::vector<std::string> po_names;

  int num_levels() const;
  bool eval_check() const; //!< structural sanity (acyclic refs, k-feasible)
  //! Evaluate all POs for one input pattern.
  std::vector<bool> eval(std::vector<bool> const& pattern) const;
};

/*! \brief One cut of an AIG node. */
struct cut {
  std::vector<uint32_t> leaves; //!< sorted ascending
  truth_table truth;            //!< over leaves, leaf i = variable i
};

/*! \brief Per-node priority cuts: at most c ranked cuts plus the trivial cut.
 *
 * Ranking is by (arrival cost, leaf count, lexicographic leaves); cost is
 * unit depth, or SOP-balanced depth when use_sop_balance is set.
 */
std::vector<std::vector<cut>> enumerate_cuts(aig const& g, int k, int c,
                                             bool use_sop_balance = false);

/*! \brief Depth-oriented k-LUT covering of an AIG. */
lut_netlist map_luts(aig const& g, int k, int c, bool use_sop_balance);

/*! \brief Two-pass mapping: a wider SOP-balanced pass restructures the
 *         subject graph, then the final k-input pass maps it. */
lut_netlist map_luts_two_pass(aig const& g, int k, int c, int l);

/*! \brief Treat each cube-list node of a netlist as one LUT (no synthesis). */
lut_netlist luts_from_raw(raw_netlist const& n);

/*! \brief Rebuild an AIG from a LUT netlist, constructing each cover as a
 *         balanced AND/OR tree (Huffman pairing on arrival levels). */
aig lut_netlist_to_aig(lut_netlist const& nl);

/*! \brief Emit a LUT netlist as BLIF for external equivalence checking. */
raw_netlist lut_netlist_to_raw(lut_netlist const& nl, std::string const& model);

} // namespace magicmap
