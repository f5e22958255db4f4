/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/placer.hpp"

#include <algorithm>
#include <set>

namespace magicmap {

bool micro_op::row_wise() const
{
  if (inputs.empty())
    return true;
  return inputs[0].row == output.row;
}

std::vector<int> sort_supergates(std::vector<supergate const*> const& level)
{
  std::vector<int> idx(level.size());
  for (size_t i = 0; i < idx.size(); ++i)
    idx[i] = static_cast<int>(i);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return level[a]->size() > level[b]->size();
  });
  return idx;
}

bool flip_level(int l) { return (l % 2) == 1; }

int placement::fabric_cell_count() const
{
  int n = 0;
  for (auto const& [coord, info] : cells)
    if (coord.col >= input_band_cols)
      ++n;
  return n;
}

namespace {

struct band_info {
  std::map<int, int> pi_col;   // pi index -> column
  std::map<int, int> gate_col; // gate index -> column
  int out_col = -1;
  int fin_col = -1; // -1 when no tile of the level emits a final NOT
};

struct pool_cell {
  cell_coord cell;
  bool complemented; // holds NOT(signal function value)
};

class builder {
public:
  builder(non_netlist const& nn, map_options const& opt) : nn_(nn), opt_(opt) {}

  placement run();

private:
  non_netlist const& nn_;
  map_options const& opt_;
  placement pl_;
  int next_col_ = 0;
  std::vector<band_info> bands_;             // bands_[l] for level l
  std::vector<std::vector<pool_cell>> pool_; // per gate: cells carrying its value
  std::vector<std::vector<int>> by_level_;   // gate indices per level
  std::vector<std::vector<int>> slots_;      // baseline slot assignment [l][y]
  std::vector<int> slot_start_;              // baseline slot anchor rows

  bool free_cell(int r, int c) const { return !pl_.cells.count({r, c}); }

  void put_cell(cell_coord at, cell_role role, non_ref sig, bool complemented,
                preload_info pre = {})
  {
    if (at.row < 0 || at.col < 0)
      throw mca_error("internal: negative cell coordinate");
    auto [it, inserted] = pl_.cells.emplace(at, cell_info{});
    if (!inserted)
      throw mca_error("internal: cell collision at (" + std::to_string(at.row) + "," +
                      std::to_string(at.col) + ")");
    it->second.role = role;
    it->second.signal = sig;
    it->second.complemented = complemented;
    it->second.preload = pre;
  }

  void emit(op_kind kind, std::vector<cell_coord> ins, cell_coord out, bool alignment = false)
  {
    micro_op op;
    op.kind = kind;
    op.inputs = std::move(ins);
    op.output = out;
    op.id = static_cast<int>(pl_.ops.size());
    op.is_alignment = alignment;
    pl_.ops.push_back(std::move(op));
  }

  void emit_copy(cell_coord from, cell_coord to, bool alignment = true)
  {
    if (from.row != to.row && from.col != to.col)
      throw mca_error("internal: copy between non-collinear cells");
    emit(op_kind::not_copy, {from}, to, alignment);
  }

  static int tile_height(supergate const& g) { return g.size() + 1; }

  // rows [first, last] occupied by a tile anchored at `a`
  static std::pair<int, int> tile_extent(int a, int m, bool flipped)
  {
    if (flipped)
      return {a - m + 1, a + 1}; // terms grow upward, gate output below anchor
    return {a, a + m};
  }

  void compute_baseline_slots();
  void place_level(int l);
  void route_level(int l);
  void create_tile_cells(tile& t);
  void emit_tile_logic(int l);
  cell_coord route_dest(int gate, int dest_row, bool needed_compl, int level,
                        std::vector<pool_cell>& pool);
  void place_pos();
  std::vector<int> tiles_by_row(int l) const;
};

placement builder::run()
{
  int const P = static_cast<int>(nn_.pi_names.size());
  pl_.grid_rows = opt_.grid_rows;
  pl_.grid_cols = opt_.grid_cols;
  pl_.input_band_cols = 2;
  next_col_ = 2;
  pool_.resize(nn_.gates.size());
  pl_.tiles.resize(nn_.gates.size());

  for (int p = 0; p < P; ++p) {
    pl_.pi_home.push_back({p, 0});
    put_cell({p, 0}, cell_role::pi_home, non_ref::pi(p), false,
             {preload_info::kind::pi_plain, p, false});
  }

  // complemented-input provisioning: one NOT per distinct complemented PI
  if (!opt_.donor_negation) {
    std::set<int> need_compl;
    for (auto const& g : nn_.gates)
      for (auto const& term : g.terms)
        for (auto const& lit : term)
          if (lit.signal.is_pi() && lit.positive)
            need_compl.insert(lit.signal.index);
    for (int p : need_compl) {
      cell_coord at{p, 1};
      put_cell(at, cell_role::pi_compl, non_ref::pi(p), true);
      pl_.pi_compl[p] = at;
      emit_copy(pl_.pi_home[p], at);
    }
  }

  int L = nn_.num_levels();
  by_level_.assign(L + 1, {});
  for (size_t g = 0; g < nn_.gates.size(); ++g)
    by_level_[nn_.gates[g].level].push_back(static_cast<int>(g));
  bands_.resize(L + 1);
  if (opt_.baseline_placement)
    compute_baseline_slots();

  for (int l = 1; l <= L; ++l) {
    place_level(l);
    route_level(l);
    emit_tile_logic(l);
  }
  place_pos();

  int max_row = P - 1, max_col = next_col_ - 1;
  for (auto const& [coord, info] : pl_.cells) {
    max_row = std::max(max_row, coord.row);
    max_col = std::max(max_col, coord.col);
  }
  pl_.used_rows = max_row + 1;
  pl_.used_cols = max_col + 1;
  if (pl_.used_rows > pl_.grid_rows || pl_.used_cols > pl_.grid_cols)
    throw mca_error("capacity-exceeded: design needs " + std::to_string(pl_.used_rows) + "x" +
                    std::to_string(pl_.used_cols) + ", grid is " + std::to_string(pl_.grid_rows) +
                    "x" + std::to_string(pl_.grid_cols));
  return pl_;
}

// Baseline slots: per level, size-descending; a gate may occupy slot y only
// if the slot above (level-1, y) is empty or holds a strictly larger gate.
void builder::compute_baseline_slots()
{
  int L = nn_.num_levels();
  slots_.assign(L + 1, {});
  for (int l = 1; l <= L; ++l) {
    std::vector<supergate const*> gl;
    for (int g : by_level_[l])
      gl.push_back(&nn_.gates[g]);
    auto order = sort_supergates(gl);
    for (int oi : order) {
      int g = by_level_[l][oi];
      int size = nn_.gates[g].size();
      int y = 0;
      while (true) {
        if (y >= static_cast<int>(slots_[l].size()))
          slots_[l].resize(y + 1, -1);
        bool taken = slots_[l][y] >= 0;
        bool above_ok = true;
        if (l > 1 && y < static_cast<int>(slots_[l - 1].size()) && slots_[l - 1][y] >= 0)
          above_ok = size < nn_.gates[slots_[l - 1][y]].size();
        if (!taken && above_ok) {
          slots_[l][y] = g;
          break;
        }
        ++y;
      }
    }
  }
  size_t max_slots = 0;
  for (auto const& sl : slots_)
    max_slots = std::max(max_slots, sl.size());
  std::vector<int> height(max_slots, 0);
  for (int l = 1; l <= L; ++l)
    for (size_t y = 0; y < slots_[l].size(); ++y)
      if (slots_[l][y] >= 0)
        height[y] = std::max(height[y], tile_height(nn_.gates[slots_[l][y]]));
  slot_start_.assign(max_slots + 1, 0);
  for (size_t y = 0; y < max_slots; ++y)
    slot_start_[y + 1] = slot_start_[y] + height[y];
}

std::vector<int> builder::tiles_by_row(int l) const
{
  std::vector<int> order = by_level_[l];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pl_.tiles[a].anchor_row != pl_.tiles[b].anchor_row
               ? pl_.tiles[a].anchor_row < pl_.tiles[b].anchor_row
               : a < b;
  });
  return order;
}

void builder::place_level(int l)
{
  auto const& gates = by_level_[l];
  if (gates.empty())
    return;
  auto& band = bands_[l];

  int total_terms = 0;
  for (int g : gates)
    total_terms += nn_.gates[g].size();
  if (total_terms > opt_.grid_rows)
    throw mca_error("capacity-exceeded: level " + std::to_string(l) + " has " +
                    std::to_string(total_terms) + " terms, grid rows " +
                    std::to_string(opt_.grid_rows));

  // column allocation: one column per distinct consumed signal (PIs first)
  std::set<int> pis, srcs;
  bool any_fin = false;
  for (int g : gates) {
    for (auto const& term : nn_.gates[g].terms)
      for (auto const& lit : term) {
        if (lit.signal.is_pi())
          pis.insert(lit.signal.index);
        else if (lit.signal.is_gate())
          srcs.insert(lit.signal.index);
      }
    if (nn_.gates[g].emit_final_not)
      any_fin = true;
  }
  for (int p : pis)
    band.pi_col[p] = next_col_++;
  for (int s : srcs)
    band.gate_col[s] = next_col_++;
  band.out_col = next_col_++;
  if (any_fin)
    band.fin_col = next_col_++;

  if (opt_.baseline_placement) {
    for (size_t y = 0; y < slots_[l].size(); ++y) {
      int g = slots_[l][y];
      if (g < 0)
        continue;
      tile& t = pl_.tiles[g];
      t.gate = g;
      t.level = l;
      t.y = static_cast<int>(y) + 1;
      t.flipped = false;
      t.anchor_row = slot_start_[y];
      create_tile_cells(t);
    }
    return;
  }

  bool flipped = opt_.flip_odd_levels && flip_level(l);
  std::vector<supergate const*> gl;
  for (int g : gates)
    gl.push_back(&nn_.gates[g]);
  auto order = sort_supergates(gl);

  std::vector<std::pair<int, int>> used;
  auto fits = [&](std::pair<int, int> ext) {
    if (ext.first < 0)
      return false;
    for (auto const& u : used)
      if (!(ext.second < u.first || u.second < ext.first))
        return false;
    return true;
  };

  // pass 1: anchor each gate on an unclaimed adjacent producer so the
  // producer's output cell doubles as the first-row input
  std::set<int> claimed;
  std::vector<int> placed;
  std::vector<int> leftovers;
  for (int oi : order) {
    int g = gates[oi];
    bool anchored = false;
    if (opt_.cascade_anchor) {
      auto const& terms = nn_.gates[g].terms;
      for (size_t t = 0; t < terms.size() && !anchored; ++t) {
        for (size_t j = 0; j < terms[t].size() && !anchored; ++j) {
          auto const& lit = terms[t][j];
          if (!lit.positive || !lit.signal.is_gate())
            continue;
          int src = lit.signal.index;
          if (nn_.gates[src].level != l - 1 || claimed.count(src))
            continue;
          int a = pl_.tiles[src].gate_out.row;
          auto ext = tile_extent(a, nn_.gates[g].size(), flipped);
          if (!fits(ext))
            continue;
          tile& tl = pl_.tiles[g];
          tl.gate = g;
          tl.level = l;
          tl.flipped = flipped;
          tl.anchor_row = a;
          tl.shared_term = static_cast<int>(t);
          tl.shared_lit = static_cast<int>(j);
          used.push_back(ext);
          claimed.insert(src);
          placed.push_back(g);
          anchored = true;
        }
      }
    }
    if (!anchored)
      leftovers.push_back(g);
  }
  // pass 2: leftovers in size order at the first free vertical position
  for (int g : leftovers) {
    int m = nn_.gates[g].size();
    int a = flipped ? m - 1 : 0;
    while (!fits(tile_extent(a, m, flipped)))
      ++a;
    tile& tl = pl_.tiles[g];
    tl.gate = g;
    tl.level = l;
    tl.flipped = flipped;
    tl.anchor_row = a;
    used.push_back(tile_extent(a, m, flipped));
    placed.push_back(g);
  }
  auto by_row = tiles_by_row(l);
  for (size_t i = 0; i < by_row.size(); ++i)
    pl_.tiles[by_row[i]].y = static_cast<int>(i) + 1;
  for (int g : placed)
    create_tile_cells(pl_.tiles[g]);
}

void builder::create_tile_cells(tile& t)
{
  auto const& g = nn_.gates[t.gate];
  auto& band = bands_[t.level];
  int m = g.size();

  int gate_out_row = t.flipped ? t.anchor_row + 1 : t.anchor_row + m;

  // an anchored tile reads the shared producer cell in its first row, so
  // the shared term is laid out first
  std::vector<int> torder(m);
  for (int i = 0; i < m; ++i)
    torder[i] = i;
  if (t.shared_term > 0) {
    torder.erase(torder.begin() + t.shared_term);
    torder.insert(torder.begin(), t.shared_term);
  }

  t.lit_cells.assign(m, {});
  t.term_out.resize(m);
  for (int pos = 0; pos < m; ++pos) {
    int ti = torder[pos];
    int row = t.flipped ? t.anchor_row - pos : t.anchor_row + pos;
    auto const& term = g.terms[ti];
    t.lit_cells[ti].resize(term.size());
    t.term_out[ti] = {row, band.out_col};
    put_cell(t.term_out[ti], cell_role::term_out, non_ref::gate(t.gate), false);
    for (size_t j = 0; j < term.size(); ++j) {
      auto const& lit = term[j];
      bool cell_compl = lit.positive; // cell holds the complement of the literal source
      if (t.shared_term == ti && static_cast<int>(j) == t.shared_lit) {
        t.lit_cells[ti][j] = pl_.tiles[lit.signal.index].gate_out;
        continue;
      }
      if (lit.signal.is_pi()) {
        cell_coord at{row, band.pi_col.at(lit.signal.index)};
        if (auto it = pl_.cells.find(at); it != pl_.cells.end()) {
          if (it->second.signal == lit.signal && it->second.complemented == cell_compl) {
            t.lit_cells[ti][j] = at; // same literal twice in one term
            continue;
          }
          at.col = next_col_++; // polarity clash: split column on demand
        }
        if (opt_.donor_negation && cell_compl) {
          put_cell(at, cell_role::input_copy, lit.signal, true); // donor NOT writes it
        } else {
          put_cell(at, cell_role::input_copy, lit.signal, cell_compl,
                   {cell_compl ? preload_info::kind::pi_compl : preload_info::kind::pi_plain,
                    lit.signal.index, false});
        }
        t.lit_cells[ti][j] = at;
        continue;
      }
      if (lit.signal.is_const()) {
        bool v = lit.positive ? !lit.signal.cval : lit.signal.cval;
        cell_coord at{row, next_col_++};
        put_cell(at, cell_role::constant, lit.signal, false, {preload_info::kind::constant, -1, v});
        t.lit_cells[ti][j] = at;
        continue;
      }
      t.lit_cells[ti][j] = {-1, -1}; // internal signal, routed later
    }
  }
  t.gate_out = {gate_out_row, band.out_col};
  put_cell(t.gate_out, cell_role::gate_out, non_ref::gate(t.gate), true);
  if (g.emit_final_not) {
    t.final_out = cell_coord{gate_out_row, band.fin_col};
    put_cell(*t.final_out, cell_role::final_out, non_ref::gate(t.gate), false);
  }
  // cascaded reads: refined mapping taps the second-level NOR directly;
  // the baseline reads the inverted (final) output
  if (opt_.donor_negation) {
    if (!t.final_out)
      throw mca_error("internal: baseline gate without final NOT");
    pool_[t.gate].push_back({*t.final_out, false});
  } else {
    pool_[t.gate].push_back({t.gate_out, true});
  }
}

void builder::route_level(int l)
{
  auto const& gates = by_level_[l];
  if (gates.empty())
    return;
  auto tiles_in_order = tiles_by_row(l);

  // baseline input negation: per (tile, PI), a preloaded plain donor in the
  // PI's column feeds each complemented literal cell with one NOT copy
  if (opt_.donor_negation) {
    for (int g : tiles_in_order) {
      tile& t = pl_.tiles[g];
      std::map<std::pair<int, int>, cell_coord> donor_of; // (pi, column)
      std::set<cell_coord> filled;
      auto const& sg = nn_.gates[g];
      for (size_t ti = 0; ti < sg.terms.size(); ++ti) {
        for (size_t j = 0; j < sg.terms[ti].size(); ++j) {
          auto const& lit = sg.terms[ti][j];
          if (!lit.signal.is_pi() || !lit.positive)
            continue;
          cell_coord dest = t.lit_cells[ti][j];
          if (pl_.cells.at(dest).preload.k != preload_info::kind::none)
            continue; // a reused plain cell, nothing to negate
          if (!filled.insert(dest).second)
            continue; // duplicate literal pointing at the same cell
          auto key = std::make_pair(lit.signal.index, dest.col);
          auto it = donor_of.find(key);
          if (it == donor_of.end()) {
            auto ext = tile_extent(t.anchor_row, sg.size(), t.flipped);
            int r = ext.first;
            while (!free_cell(r, dest.col))
              ++r;
            cell_coord at{r, dest.col};
            put_cell(at, cell_role::donor, lit.signal, false,
                     {preload_info::kind::pi_plain, lit.signal.index, false});
            it = donor_of.emplace(key, at).first;
          }
          emit_copy(it->second, dest);
        }
      }
    }
  }

  // internal-signal deliveries, grouped per source gate
  std::set<int> srcs;
  for (int g : gates)
    for (auto const& term : nn_.gates[g].terms)
      for (auto const& lit : term)
        if (lit.signal.is_gate())
          srcs.insert(lit.signal.index);

  for (int src : srcs) {
    std::vector<pool_cell> shared_pool = pool_[src];
    for (int g : tiles_in_order) {
      tile& t = pl_.tiles[g];
      auto const& sg = nn_.gates[g];
      std::vector<pool_cell> tile_pool = pool_[src]; // baseline threads per tile
      for (size_t ti = 0; ti < sg.terms.size(); ++ti) {
        for (size_t j = 0; j < sg.terms[ti].size(); ++j) {
          auto const& lit = sg.terms[ti][j];
          if (!lit.signal.is_gate() || lit.signal.index != src)
            continue;
          if (t.lit_cells[ti][j].row >= 0)
            continue; // shared in-place read
          int dest_row = t.term_out[ti].row;
          bool needed = lit.positive;
          if (opt_.share_aux) {
            t.lit_cells[ti][j] = route_dest(src, dest_row, needed, l, shared_pool);
          } else if (opt_.donor_negation) {
            t.lit_cells[ti][j] = route_dest(src, dest_row, needed, l, tile_pool);
          } else {
            std::vector<pool_cell> fresh = pool_[src];
            t.lit_cells[ti][j] = route_dest(src, dest_row, needed, l, fresh);
          }
        }
      }
    }
    if (opt_.share_aux)
      pool_[src] = shared_pool;
  }
}

cell_coord builder::route_dest(int gate, int dest_row, bool needed_compl, int level,
                               std::vector<pool_cell>& pool)
{
  auto& band = bands_[level];
  non_ref sig = non_ref::gate(gate);
  auto landing_cols = [&]() {
    std::vector<int> cols;
    if (auto it = band.gate_col.find(gate); it != band.gate_col.end())
      cols.push_back(it->second);
    return cols;
  };

  for (int attempt = 0; attempt < 4; ++attempt) {
    // (0) an equal-valued cell already in the destination row
    for (auto const& p : pool)
      if (p.complemented == needed_compl && p.cell.row == dest_row)
        return p.cell;
    // (a) horizontal NOT copy from an opposite-valued cell in the dest row;
    // in-row copies share a cycle with other in-row copies of this signal
    for (auto const& p : pool) {
      if (p.complemented == needed_compl || p.cell.row != dest_row)
        continue;
      std::vector<int> cols = landing_cols();
      cols.push_back(next_col_); // fresh spill column if the band column fails
      for (int c : cols) {
        if (!free_cell(dest_row, c))
          continue;
        if (c == next_col_)
          ++next_col_;
        cell_coord at{dest_row, c};
        put_cell(at, cell_role::input_copy, sig, needed_compl);
        emit_copy(p.cell, at);
        pool.push_back({at, needed_compl});
        return at;
      }
    }
    // (b) vertical NOT copy from an opposite-valued cell, landing in its column
    for (auto const& p : pool) {
      if (p.complemented == needed_compl || p.cell.row == dest_row)
        continue;
      if (free_cell(dest_row, p.cell.col)) {
        cell_coord at{dest_row, p.cell.col};
        put_cell(at, cell_role::input_copy, sig, needed_compl);
        emit_copy(p.cell, at);
        pool.push_back({at, needed_compl});
        return at;
      }
    }
    // (c) two hops through a corner auxiliary from an equal-valued cell
    for (auto const& p : pool) {
      if (p.complemented != needed_compl || p.cell.row == dest_row)
        continue;
      std::vector<int> cols = landing_cols();
      cols.push_back(next_col_);
      for (int c : cols) {
        if (!free_cell(p.cell.row, c) || !free_cell(dest_row, c))
          continue;
        if (c == next_col_)
          ++next_col_;
        cell_coord corner{p.cell.row, c};
        put_cell(corner, cell_role::aux, sig, !needed_compl);
        emit_copy(p.cell, corner);
        pool.push_back({corner, !needed_compl});
        if (!pl_.shared_aux_of_gate.count(gate))
          pl_.shared_aux_of_gate[gate] = corner;
        cell_coord at{dest_row, c};
        put_cell(at, cell_role::input_copy, sig, needed_compl);
        emit_copy(corner, at);
        pool.push_back({at, needed_compl});
        return at;
      }
    }
    // (d) seed an opposite-valued relay in the first pool cell's column
    bool seeded = false;
    for (auto const& p : pool) {
      int r = 0;
      while (r == dest_row || !free_cell(r, p.cell.col))
        ++r;
      cell_coord at{r, p.cell.col};
      put_cell(at, cell_role::aux, sig, !p.complemented);
      emit_copy(p.cell, at);
      pool.push_back({at, !p.complemented});
      seeded = true;
      break;
    }
    if (!seeded)
      break;
  }
  throw mca_error("internal: unroutable alignment copy");
}

void builder::emit_tile_logic(int l)
{
  auto tiles_in_order = tiles_by_row(l);
  for (int g : tiles_in_order) {
    tile const& t = pl_.tiles[g];
    for (size_t ti = 0; ti < t.lit_cells.size(); ++ti) {
      std::vector<cell_coord> ins(t.lit_cells[ti]);
      std::sort(ins.begin(), ins.end());
      ins.erase(std::unique(ins.begin(), ins.end()), ins.end());
      emit(op_kind::nor_row, std::move(ins), t.term_out[ti]);
    }
  }
  for (int g : tiles_in_order) {
    tile const& t = pl_.tiles[g];
    std::vector<cell_coord> ins(t.term_out);
    std::sort(ins.begin(), ins.end());
    emit(op_kind::nor_col, std::move(ins), t.gate_out);
  }
  for (int g : tiles_in_order) {
    tile const& t = pl_.tiles[g];
    if (t.final_out)
      emit_copy(t.gate_out, *t.final_out, /*alignment=*/false);
  }
}

void builder::place_pos()
{
  std::map<std::pair<int, int>, cell_coord> memo;
  int po_band_col = -1;
  for (size_t i = 0; i < nn_.po_refs.size(); ++i) {
    auto r = nn_.po_refs[i];
    if (r.is_gate()) {
      pl_.po_cells.push_back(*pl_.tiles[r.index].final_out);
      continue;
    }
    if (r.is_const()) {
      auto key = std::make_pair(2, r.cval ? 1 : 0);
      if (!memo.count(key)) {
        cell_coord at{0, next_col_++};
        put_cell(at, cell_role::po_copy, r, false, {preload_info::kind::constant, -1, r.cval});
        memo[key] = at;
      }
      pl_.po_cells.push_back(memo[key]);
      continue;
    }
    // PI-driven output: polarity-preserving double NOT into the output band
    auto key = std::make_pair(0, r.index);
    if (!memo.count(key)) {
      int p = r.index;
      if (po_band_col < 0)
        po_band_col = next_col_++;
      int c = po_band_col;
      while (!free_cell(p, c)) // one column per PI when rows collide
        c = next_col_++;
      cell_coord mid{p, c};
      put_cell(mid, cell_role::aux, r, true);
      emit_copy(pl_.pi_home[p], mid);
      int r2 = 0;
      while (!free_cell(r2, c))
        ++r2;
      cell_coord dst{r2, c};
      put_cell(dst, cell_role::po_copy, r, false);
      emit_copy(mid, dst);
      memo[key] = dst;
    }
    pl_.po_cells.push_back(memo[key]);
  }
}

} // namespace

placement place_supergates(non_netlist const& nn, map_options const& opt)
{
  builder b(nn, opt);
  return b.run();
}

} // namespace magicmap
