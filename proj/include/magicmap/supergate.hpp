/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/lut_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magicmap {

/*! \brief Signal feeding a NOR-of-NORs network. */
struct non_ref {
  enum class kind : uint8_t { pi, gate, constant };
  kind k = kind::pi;
  int index = 0;    //!< pi or gate index
  bool cval = false; //!< for constants

  static non_ref pi(int i) { return {kind::pi, i, false}; }
  static non_ref gate(int i) { return {kind::gate, i, false}; }
  static non_ref constant(bool v) { return {kind::constant, 0, v}; }
  bool is_pi() const { return k == kind::pi; }
  bool is_gate() const { return k == kind::gate; }
  bool is_const() const { return k == kind::constant; }
  bool operator==(non_ref const& o) const
  {
    return k == o.k && index == o.index && cval == o.cval;
  }
  bool operator<(non_ref const& o) const
  {
    if (k != o.k)
      return k < o.k;
    if (index != o.index)
      return index < o.index;
    return cval < o.cval;
  }
};

/*! \brief One literal of a first-level NOR term.
 *
 * The term's NOR input cell carries the complement of the literal value:
 * a positive literal reads a cell holding NOT(signal), a negative literal
 * reads a cell holding the signal itself.
 */
struct sg_lit {
  non_ref signal;
  bool positive = true;
};

/*! \brief NOR-of-NORs supergate: one first-level NOR per product term,
 *         a second-level NOR across terms, and an optional final NOT. */
struct supergate {
  std::vector<std::vector<sg_lit>> terms;
  bool emit_final_not = true;
  int level = 0;
  std::string name;

  int size() const { return static_cast<int>(terms.size()); }
};

/*! \brief Levelized supergate network. */
struct non_netlist {
  std::vector<std::string> pi_names;
  std::vector<supergate> gates; //!< topologically ordered
  std::vector<non_ref> po_refs;
  std::vector<std::string> po_names;

  int num_levels() const;
  //! Total MAGIC operations implied: per gate, terms + outer NOR + final NOT.
  int op_count() const;
  //! Evaluate all POs under NOR semantics for one input pattern.
  std::vector<bool> eval(std::vector<bool> const& pattern) const;
  //! True when gate g drives at least one primary output.
  bool drives_po(int g) const;
};

/*! \brief Translate one irredundant cover into a supergate over abstract
 *         leaf signals (leaf i = PI i). Final NOT initially set. */
supergate sop_to_non(sop_cover const& cover);

/*! \brief Translate a LUT netlist into supergates, folding constant LUTs
 *         into preset values instead of gates. All final NOTs set. */
non_netlist translate(lut_netlist const& nl);

/*! \brief Drop redundant NOT pairs on cascaded edges: every gate that does
 *         not drive a primary output loses its final NOT; consumers read
 *         the complemented output directly. */
non_netlist refine_cascades(non_netlist const& nn);

} // namespace magicmap
