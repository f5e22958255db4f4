/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace magicmap {

namespace {

struct op_signature {
  bool row_wise;
  std::vector<int> in_lines;  // columns for row-wise, rows for column-wise
  int out_line;               // output column / row

  bool operator==(op_signature const& o) const
  {
    return row_wise == o.row_wise && in_lines == o.in_lines && out_line == o.out_line;
  }
};

op_signature signature_of(micro_op const& op)
{
  op_signature s;
  s.row_wise = op.row_wise();
  std::set<int> lines;
  for (auto const& c : op.inputs)
    lines.insert(s.row_wise ? c.col : c.row);
  s.in_lines.assign(lines.begin(), lines.end());
  s.out_line = s.row_wise ? op.output.col : op.output.row;
  return s;
}

} // namespace

schedule build_schedule(placement& p, map_options const& opt)
{
  schedule sch;
  size_t const n = p.ops.size();

  std::map<cell_coord, int> writer; // cell -> op index
  for (size_t i = 0; i < n; ++i)
    writer[p.ops[i].output] = static_cast<int>(i);

  std::vector<int> op_cycle(n, -1);
  size_t scheduled = 0;
  while (scheduled < n) {
    std::vector<micro_op> cycle;
    std::optional<op_signature> sig;
    std::set<cell_coord> written, read;
    int const cycle_idx = sch.num_cycles();

    for (size_t i = 0; i < n; ++i) {
      auto const& op = p.ops[i];
      if (op_cycle[i] >= 0)
        continue;
      bool ready = true;
      for (auto const& in : op.inputs) {
        auto w = writer.find(in);
        if (w != writer.end() && (op_cycle[w->second] < 0 || op_cycle[w->second] >= cycle_idx)) {
          ready = false;
          break;
        }
      }
      if (!ready)
        continue;
      // the baseline scheme issues data-alignment copies one at a time
      if (opt.serialize_copies && !cycle.empty() &&
          (op.is_alignment || cycle[0].is_alignment))
        continue;
      auto s = signature_of(op);
      if (sig && !(s == *sig))
        continue;
      // cell conflicts within the cycle
      if (written.count(op.output) || read.count(op.output))
        continue;
      bool input_clash = false;
      for (auto const& in : op.inputs)
        if (written.count(in)) {
          input_clash = true;
          break;
        }
      if (input_clash)
        continue;
      // column-wise ops in one column would overlap cells; the written/read
      // sets catch that only on exact coordinates, so exclude same-line ops
      if (sig && !s.row_wise) {
        bool same_col = false;
        for (auto const& prev : cycle)
          if (prev.output.col == op.output.col)
            same_col = true;
        if (same_col)
          continue;
      }
      if (sig && s.row_wise) {
        bool same_row = false;
        for (auto const& prev : cycle)
          if (prev.output.row == op.output.row)
            same_row = true;
        if (same_row)
          continue;
      }
      op_cycle[i] = cycle_idx;
      cycle.push_back(op);
      if (!sig)
        sig = s;
      written.insert(op.output);
      for (auto const& in : op.inputs)
        read.insert(in);
      ++scheduled;
    }
    if (cycle.empty())
      throw mca_error("unschedulable: no ready op makes progress");
    sch.cycles.push_back(std::move(cycle));
  }

  // birth/death bookkeeping
  for (auto& [coord, info] : p.cells) {
    info.birth_cycle = -1;
    info.death_cycle = -1;
  }
  for (int c = 0; c < sch.num_cycles(); ++c) {
    for (auto const& op : sch.cycles[c]) {
      p.cells.at(op.output).birth_cycle = c + 1;
      for (auto const& in : op.inputs) {
        auto& info = p.cells.at(in);
        info.death_cycle = std::max(info.death_cycle, c + 1);
      }
    }
  }
  return sch;
}

stats count_stats(schedule const& s, placement const& p)
{
  stats st;
  st.cycles = s.num_cycles();
  st.mems = std::max(static_cast<int>(p.pi_home.size()), p.fabric_cell_count());
  int lv = 0;
  for (auto const& t : p.tiles)
    lv = std::max(lv, t.level);
  st.levels = lv;
  return st;
}

namespace {

bool collinear_ok(micro_op const& op)
{
  if (op.inputs.empty())
    return true;
  bool same_row = true, same_col = true;
  for (auto const& c : op.inputs) {
    same_row = same_row && c.row == op.output.row;
    same_col = same_col && c.col == op.output.col;
  }
  for (auto const& c : op.inputs)
    if (c == op.output)
      return false;
  return same_row || same_col;
}

} // namespace

std::string check_schedule(schedule const& s, placement const& p)
{
  auto fail = [](std::string const& msg) { return msg; };

  // preloaded cells are readable before cycle 1
  std::map<cell_coord, int> written_at;
  for (auto const& [coord, info] : p.cells)
    if (info.preload.k != preload_info::kind::none)
      written_at[coord] = 0;

  for (int ci = 0; ci < s.num_cycles(); ++ci) {
    auto const& cyc = s.cycles[ci];
    if (cyc.empty())
      return fail("cycle " + std::to_string(ci + 1) + " is empty");
    // orientation and alignment compatibility
    bool row_wise = cyc[0].row_wise();
    std::set<int> ref_in;
    for (auto const& c : cyc[0].inputs)
      ref_in.insert(row_wise ? c.col : c.row);
    int ref_out = row_wise ? cyc[0].output.col : cyc[0].output.row;
    std::set<cell_coord> writes, reads;
    std::set<int> out_lines;
    for (auto const& op : cyc) {
      if (op.kind == op_kind::init)
        continue;
      if (!collinear_ok(op))
        return fail("cycle " + std::to_string(ci + 1) + ": op writing (" +
                    std::to_string(op.output.row) + "," + std::to_string(op.output.col) +
                    ") is not collinear");
      if (op.output.row < 0 || op.output.col < 0 || op.output.row >= p.grid_rows ||
          op.output.col >= p.grid_cols)
        return fail("cycle " + std::to_string(ci + 1) + ": output outside the grid");
      if (op.row_wise() != row_wise)
        return fail("cycle " + std::to_string(ci + 1) + ": mixed row/column orientations");
      std::set<int> in;
      for (auto const& c : op.inputs)
        in.insert(row_wise ? c.col : c.row);
      int out = row_wise ? op.output.col : op.output.row;
      if (in != ref_in || out != ref_out)
        return fail("cycle " + std::to_string(ci + 1) + ": ops are not aligned on the same " +
                    (row_wise ? "columns" : "rows"));
      int ortho = row_wise ? op.output.row : op.output.col;
      if (!out_lines.insert(ortho).second)
        return fail("cycle " + std::to_string(ci + 1) + ": two ops share one " +
                    (row_wise ? "row" : "column"));
      if (!writes.insert(op.output).second)
        return fail("cycle " + std::to_string(ci + 1) + ": double write");
      for (auto const& c : op.inputs)
        reads.insert(c);
    }
    for (auto const& w : writes)
      if (reads.count(w))
        return fail("cycle " + std::to_string(ci + 1) + ": cell read and written in one cycle");
    // dataflow and single assignment
    for (auto const& op : cyc) {
      if (op.kind == op_kind::init)
        continue;
      for (auto const& c : op.inputs) {
        auto it = written_at.find(c);
        if (it == written_at.end() || it->second > ci)
          return fail("cycle " + std::to_string(ci + 1) + ": read of cell (" +
                      std::to_string(c.row) + "," + std::to_string(c.col) +
                      ") before any write");
      }
    }
    for (auto const& op : cyc) {
      if (op.kind == op_kind::init)
        continue;
      if (written_at.count(op.output))
        return fail("cycle " + std::to_string(ci + 1) + ": cell (" +
                    std::to_string(op.output.row) + "," + std::to_string(op.output.col) +
                    ") written twice");
      written_at[op.output] = ci + 1;
    }
  }
  return {};
}

std::string emit_trace(schedule const& s)
{
  std::ostringstream os;
  for (int ci = 0; ci < s.num_cycles(); ++ci) {
    os << "cycle " << (ci + 1) << ":";
    for (auto const& op : s.cycles[ci]) {
      char const* k = op.kind == op_kind::nor_row    ? "NOR_ROW"
                      : op.kind == op_kind::nor_col  ? "NOR_COL"
                      : op.kind == op_kind::not_copy ? "NOT"
                                                     : "INIT";
      os << " " << k << "(";
      for (size_t i = 0; i < op.inputs.size(); ++i) {
        if (i)
          os << " ";
        os << op.inputs[i].row << "." << op.inputs[i].col;
      }
      os << ")->" << op.output.row << "." << op.output.col << ";";
    }
    os << "\n";
  }
  return os.str();
}

schedule parse_trace(std::string const& text)
{
  schedule s;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto bad = [&](std::string const& what) {
    return std::runtime_error("trace line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::string word;
    int idx;
    char colon;
    if (!(ls >> word >> idx >> std::noskipws >> colon) || word != "cycle")
      throw bad("expected 'cycle N:'");
    std::vector<micro_op> cycle;
    std::string rest;
    std::getline(ls, rest);
    size_t pos = 0;
    auto skip_ws = [&]() {
      while (pos < rest.size() && rest[pos] == ' ')
        ++pos;
    };
    auto parse_cell = [&]() {
      size_t end = rest.find_first_not_of("0123456789", pos);
      if (end == std::string::npos || rest[end] != '.')
        throw bad("malformed cell");
      int r = std::stoi(rest.substr(pos, end - pos));
      pos = end + 1;
      end = rest.find_first_not_of("0123456789", pos);
      int c = std::stoi(rest.substr(pos, end == std::string::npos ? rest.size() - pos : end - pos));
      pos = end == std::string::npos ? rest.size() : end;
      return cell_coord{r, c};
    };
    while (true) {
      skip_ws();
      if (pos >= rest.size())
        break;
      size_t paren = rest.find('(', pos);
      if (paren == std::string::npos)
        throw bad("expected op");
      std::string kind = rest.substr(pos, paren - pos);
      micro_op op;
      if (kind == "NOR_ROW")
        op.kind = op_kind::nor_row;
      else if (kind == "NOR_COL")
        op.kind = op_kind::nor_col;
      else if (kind == "NOT")
        op.kind = op_kind::not_copy;
      else if (kind == "INIT")
        op.kind = op_kind::init;
      else
        throw bad("unknown op kind '" + kind + "'");
      pos = paren + 1;
      while (pos < rest.size() && rest[pos] != ')') {
        skip_ws();
        if (rest[pos] == ')')
          break;
        op.inputs.push_back(parse_cell());
      }
      if (pos >= rest.size() || rest[pos] != ')')
        throw bad("unterminated input list");
      ++pos;
      if (rest.compare(pos, 2, "->") != 0)
        throw bad("expected '->'");
      pos += 2;
      op.output = parse_cell();
      if (pos < rest.size() && rest[pos] == ';')
        ++pos;
      cycle.push_back(std::move(op));
    }
    s.cycles.push_back(std::move(cycle));
  }
  return s;
}

} // namespace magicmap
