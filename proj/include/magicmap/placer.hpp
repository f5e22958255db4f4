/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/supergate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magicmap {

struct cell_coord {
  int row = 0, col = 0;
  bool operator==(cell_coord const& o) const { return row == o.row && col == o.col; }
  bool operator<(cell_coord const& o) const
  {
    return row != o.row ? row < o.row : col < o.col;
  }
};

enum class cell_role : uint8_t {
  free_cell,
  pi_home,    //!< primary-input storage, input band
  pi_compl,   //!< provisioned complement, input band
  input_copy, //!< literal cell inside a tile (preloaded or copy target)
  donor,      //!< preloaded plain value feeding baseline input negation
  aux,        //!< alignment-copy intermediate
  term_out,
  gate_out,
  final_out,
  po_copy,  //!< primary output relocated from a PI or constant
  constant, //!< preset value
};

/*! \brief How a cell obtains its value before cycle 1, if preloaded. */
struct preload_info {
  enum class kind : uint8_t { none, pi_plain, pi_compl, constant } k = kind::none;
  int pi = -1;
  bool cval = false;
};

struct cell_info {
  cell_role role = cell_role::free_cell;
  non_ref signal;          //!< signal whose value (or complement) lives here
  bool complemented = false; //!< cell holds NOT(signal value)
  preload_info preload;
  int birth_cycle = -1; //!< cycle that writes the cell; -1 preloaded
  int death_cycle = -1; //!< last cycle that reads it; -1 never read
};

enum class op_kind : uint8_t { init, nor_row, nor_col, not_copy };

struct micro_op {
  op_kind kind = op_kind::not_copy;
  std::vector<cell_coord> inputs;
  cell_coord output;
  int id = 0;
  //! alignment copies relocate data; a final NOT is part of the supergate
  //! sequence even though both are 1-input NORs
  bool is_alignment = false;

  bool row_wise() const; //!< orientation; valid for nor/copy ops
};

/*! \brief One supergate's tile: term rows, shared output column cells. */
struct tile {
  int gate = -1;
  int level = 0;
  int y = 0; //!< vertical slot order within the level
  bool flipped = false;
  int anchor_row = 0; //!< first term's row
  std::vector<std::vector<cell_coord>> lit_cells; //!< per term, per literal
  std::vector<cell_coord> term_out;
  cell_coord gate_out;
  std::optional<cell_coord> final_out;
  int shared_term = -1; //!< term whose first literal reads a producer cell
  int shared_lit = -1;
};

struct placement {
  int grid_rows = 0, grid_cols = 0; //!< configured capacity
  int used_rows = 0, used_cols = 0; //!< actual extent
  std::map<cell_coord, cell_info> cells;
  std::vector<tile> tiles; //!< tile i belongs to gate i
  std::vector<cell_coord> pi_home;
  std::map<int, cell_coord> pi_compl;
  std::vector<cell_coord> po_cells; //!< per PO
  std::vector<micro_op> ops;        //!< creation order; scheduler packs
  std::map<int, cell_coord> shared_aux_of_gate; //!< alignment aux per source gate

  int input_band_cols = 2; //!< columns reserved for PI homes/complements
  //! Cells outside the input band; the mems metric is
  //! max(PI count, this value).
  int fabric_cell_count() const;
};

struct mca_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*! \brief Mapping style knobs; the two named modes are hipe and the
 *         baseline reproduction. */
struct map_options {
  bool refine = true;          //!< drop final NOTs on internal gates
  bool flip_odd_levels = true; //!< vertical flip where level is odd
  bool cascade_anchor = true;  //!< share producer output cells at equal y
  bool share_aux = true;       //!< share alignment auxiliaries / copy cells
  bool baseline_placement = false; //!< size-descending slots with the
                                   //!< smaller-than-above constraint
  bool serialize_copies = false;   //!< baseline executes copies one per cycle
  bool donor_negation = false;     //!< per-tile donor NOT for negated PIs
  int grid_rows = 1024;
  int grid_cols = 1024;

  static map_options hipe()
  {
    return {};
  }
  static map_options said_baseline()
  {
    map_options o;
    o.refine = false;
    o.flip_odd_levels = false;
    o.cascade_anchor = false;
    o.share_aux = false;
    o.baseline_placement = true;
    o.serialize_copies = true;
    o.donor_negation = true;
    return o;
  }
};

/*! \brief Descending size order, stable on equal sizes. Indices into `level`. */
std::vector<int> sort_supergates(std::vector<supergate const*> const& level);

/*! \brief Whether Algorithm-style vertical flipping applies at level l. */
bool flip_level(int l);

/*! \brief Place a supergate network onto the crossbar and emit its micro-ops. */
placement place_supergates(non_netlist const& nn, map_options const& opt);

} // namespace magicmap
