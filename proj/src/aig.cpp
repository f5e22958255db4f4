/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/aig.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

namespace magicmap {

aig_edge aig::create_and(aig_edge a, aig_edge b)
{
  // constant folding and trivial cases
  if (a.index == 0)
    return a.compl_ ? b : const_false();
  if (b.index == 0)
    return b.compl_ ? a : const_false();
  if (a == b)
    return a;
  if (a.index == b.index) // a & !a
    return const_false();
  // canonical fanin order
  aig_edge f0 = a, f1 = b;
  if (f1 < f0)
    std::swap(f0, f1);
  auto key = std::make_pair(uint64_t(f0.index) << 1 | (f0.compl_ ? 1 : 0),
                            uint64_t(f1.index) << 1 | (f1.compl_ ? 1 : 0));
  if (auto it = strash_.find(key); it != strash_.end())
    return {it->second, false};
  nodes_.push_back({f0, f1});
  uint32_t idx = static_cast<uint32_t>(nodes_.size() - 1);
  strash_.emplace(key, idx);
  return {idx, false};
}

std::vector<uint32_t> aig::levels() const
{
  std::vector<uint32_t> lvl(size(), 0);
  for (uint32_t i = num_pis_ + 1; i < size(); ++i)
    lvl[i] = 1 + std::max(lvl[nodes_[i].fanin0.index], lvl[nodes_[i].fanin1.index]);
  return lvl;
}

uint32_t aig::depth() const
{
  auto lvl = levels();
  uint32_t d = 0;
  for (auto const& po : pos_)
    d = std::max(d, lvl[po.index]);
  return d;
}

std::vector<uint32_t> aig::fanout_counts() const
{
  std::vector<uint32_t> cnt(size(), 0);
  for (uint32_t i = num_pis_ + 1; i < size(); ++i) {
    ++cnt[nodes_[i].fanin0.index];
    ++cnt[nodes_[i].fanin1.index];
  }
  for (auto const& po : pos_)
    ++cnt[po.index];
  return cnt;
}

namespace {

// Balanced reduction of a list of edges with a binary op.
aig_edge reduce_balanced(aig& g, std::vector<aig_edge> ops,
                         aig_edge (aig::*op)(aig_edge, aig_edge), aig_edge empty_value)
{
  if (ops.empty())
    return empty_value;
  while (ops.size() > 1) {
    std::vector<aig_edge> next;
    next.reserve((ops.size() + 1) / 2);
    for (size_t i = 0; i + 1 < ops.size(); i += 2)
      next.push_back((g.*op)(ops[i], ops[i + 1]));
    if (ops.size() % 2)
      next.push_back(ops.back());
    ops = std::move(next);
  }
  return ops[0];
}

} // namespace

aig from_raw(raw_netlist const& n)
{
  aig g;
  std::map<std::string, aig_edge> sig;
  for (auto const& pi : n.primary_inputs)
    sig[pi] = g.create_pi();
  for (auto const& node : n.nodes) {
    std::vector<aig_edge> cubes;
    for (auto const& cube : node.cubes) {
      std::vector<aig_edge> lits;
      for (size_t i = 0; i < cube.lits.size(); ++i) {
        if (cube.lits[i] == '-')
          continue;
        aig_edge e = sig.at(node.inputs[i]);
        lits.push_back(cube.lits[i] == '1' ? e : !e);
      }
      cubes.push_back(reduce_balanced(g, std::move(lits), &aig::create_and, aig::const_true()));
    }
    sig[node.output] = reduce_balanced(g, std::move(cubes), &aig::create_or, aig::const_false());
  }
  for (auto const& po : n.primary_outputs)
    g.create_po(sig.at(po));
  return g;
}

std::vector<bool> simulate(aig const& g, std::vector<bool> const& pattern)
{
  if (pattern.size() != g.num_pis())
    throw std::invalid_argument("pattern length mismatch");
  std::vector<uint64_t> wide(pattern.size());
  for (size_t i = 0; i < pattern.size(); ++i)
    wide[i] = pattern[i] ? 1u : 0u;
  auto out = simulate64(g, wide);
  std::vector<bool> res(out.size());
  for (size_t i = 0; i < out.size(); ++i)
    res[i] = out[i] & 1;
  return res;
}

std::vector<uint64_t> simulate64(aig const& g, std::vector<uint64_t> const& pattern)
{
  if (pattern.size() != g.num_pis())
    throw std::invalid_argument("pattern length mismatch");
  std::vector<uint64_t> val(g.size(), 0);
  for (uint32_t i = 0; i < g.num_pis(); ++i)
    val[i + 1] = pattern[i];
  for (uint32_t i = g.num_pis() + 1; i < g.size(); ++i) {
    auto const& nd = g.at(i);
    uint64_t a = val[nd.fanin0.index] ^ (nd.fanin0.compl_ ? ~0ull : 0ull);
    uint64_t b = val[nd.fanin1.index] ^ (nd.fanin1.compl_ ? ~0ull : 0ull);
    val[i] = a & b;
  }
  std::vector<uint64_t> out;
  out.reserve(g.num_pos());
  for (auto const& po : g.pos())
    out.push_back(val[po.index] ^ (po.compl_ ? ~0ull : 0ull));
  return out;
}

aig and_balance(aig const& g)
{
  auto fanout = g.fanout_counts();
  aig out;
  std::vector<aig_edge> remap(g.size());
  remap[0] = aig::const_false();
  for (uint32_t i = 0; i < g.num_pis(); ++i)
    remap[i + 1] = out.create_pi();

  // levels in the output graph, maintained incrementally
  std::vector<uint32_t> olvl(out.size(), 0);
  auto lvl_of = [&](aig_edge e) { return olvl[e.index]; };

  // A node is interior to an AND tree if a parent absorbs it: reached
  // through a non-complemented edge and single-fanout. POs count toward
  // fanout, so PO-referenced nodes always stay roots.
  std::vector<bool> interior(g.size(), false);
  for (uint32_t i = g.num_pis() + 1; i < g.size(); ++i)
    for (aig_edge e : {g.at(i).fanin0, g.at(i).fanin1})
      if (!e.compl_ && g.is_and(e.index) && fanout[e.index] == 1)
        interior[e.index] = true;

  // Collect the operand set of the maximal AND tree rooted at `root`.
  auto collect = [&](uint32_t root) {
    std::vector<aig_edge> operands;
    std::vector<uint32_t> stack = {root};
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      for (aig_edge e : {g.at(v).fanin0, g.at(v).fanin1}) {
        if (!e.compl_ && g.is_and(e.index) && fanout[e.index] == 1)
          stack.push_back(e.index);
        else
          operands.push_back(e);
      }
    }
    return operands;
  };

  for (uint32_t i = g.num_pis() + 1; i < g.size(); ++i) {
    if (interior[i])
      continue;
    auto operands = collect(i);
    // Huffman pairing on levels: repeatedly combine the two shallowest
    using item = std::pair<uint32_t, aig_edge>; // (level, edge)
    auto cmp = [](item const& a, item const& b) {
      return a.first != b.first ? a.first > b.first
                                : (a.second.index != b.second.index
                                       ? a.second.index > b.second.index
                                       : a.second.compl_ > b.second.compl_);
    };
    std::priority_queue<item, std::vector<item>, decltype(cmp)> heap(cmp);
    for (auto e : operands) {
      aig_edge m = remap[e.index];
      if (e.compl_)
        m = !m;
      heap.push({lvl_of(m), m});
    }
    while (heap.size() > 1) {
      auto a = heap.top();
      heap.pop();
      auto b = heap.top();
      heap.pop();
      aig_edge f = out.create_and(a.second, b.second);
      olvl.resize(out.size(), 0);
      if (out.is_and(f.index))
        olvl[f.index] =
            1 + std::max(olvl[out.at(f.index).fanin0.index], olvl[out.at(f.index).fanin1.index]);
      heap.push({lvl_of(f), f});
    }
    remap[i] = heap.top().second;
  }

  for (auto const& po : g.pos()) {
    aig_edge m = remap[po.index];
    if (po.compl_)
      m = !m;
    out.create_po(m);
  }
  return out;
}

namespace {

uint32_t read_uint(std::istream& in, int& line_no, char const* what)
{
  std::string tok;
  if (!(in >> tok))
    throw parse_error(std::string("unexpected end of file reading ") + what, line_no);
  for (char c : tok)
    if (!isdigit(static_cast<unsigned char>(c)))
      throw parse_error(std::string("malformed ") + what + " '" + tok + "'", line_no);
  return static_cast<uint32_t>(std::stoul(tok));
}

} // namespace

aig parse_aiger_ascii(std::istream& in)
{
  int line_no = 1;
  std::string magic;
  if (!(in >> magic) || magic != "aag")
    throw parse_error("not an ASCII AIGER file (expected 'aag' header)", 1);
  uint32_t M = read_uint(in, line_no, "M");
  uint32_t I = read_uint(in, line_no, "I");
  uint32_t L = read_uint(in, line_no, "L");
  uint32_t O = read_uint(in, line_no, "O");
  uint32_t A = read_uint(in, line_no, "A");
  if (L != 0)
    throw parse_error("unsupported-sequential: AIGER latches present (L != 0)", 1);
  if (M < I + A)
    throw parse_error("inconsistent AIGER header", 1);

  aig g;
  std::vector<aig_edge> var(M + 1, aig::const_false());
  std::vector<uint32_t> in_lits(I);
  for (uint32_t i = 0; i < I; ++i) {
    uint32_t lit = read_uint(in, line_no, "input literal");
    if (lit == 0 || lit & 1 || lit / 2 > M)
      throw parse_error("malformed input literal", line_no);
    var[lit / 2] = g.create_pi();
    in_lits[i] = lit;
  }
  std::vector<uint32_t> out_lits(O);
  for (uint32_t i = 0; i < O; ++i) {
    uint32_t lit = read_uint(in, line_no, "output literal");
    if (lit / 2 > M)
      throw parse_error("output literal out of range", line_no);
    out_lits[i] = lit;
  }
  struct and_line {
    uint32_t lhs, rhs0, rhs1;
  };
  std::vector<and_line> ands(A);
  for (uint32_t i = 0; i < A; ++i) {
    uint32_t lhs = read_uint(in, line_no, "and lhs");
    uint32_t rhs0 = read_uint(in, line_no, "and rhs0");
    uint32_t rhs1 = read_uint(in, line_no, "and rhs1");
    if (lhs == 0 || lhs & 1 || lhs / 2 > M)
      throw parse_error("malformed and lhs", line_no);
    if (rhs0 / 2 > M || rhs1 / 2 > M)
      throw parse_error("and rhs out of range", line_no);
    ands[i] = {lhs, rhs0, rhs1};
  }

  // AIGER guarantees rhs < lhs in well-formed files, so a single ordered
  // pass resolves; detect violations as malformed references.
  std::vector<bool> defined(M + 1, false);
  defined[0] = true;
  for (uint32_t lit : in_lits)
    defined[lit / 2] = true;
  std::sort(ands.begin(), ands.end(), [](and_line const& a, and_line const& b) {
    return a.lhs < b.lhs;
  });
  auto edge_of = [&](uint32_t lit) -> aig_edge {
    if (!defined[lit / 2])
      throw parse_error("reference to undefined literal " + std::to_string(lit));
    aig_edge e = var[lit / 2];
    if (lit & 1)
      e = !e;
    return e;
  };
  for (auto const& a : ands) {
    if (defined[a.lhs / 2])
      throw parse_error("redefinition of literal " + std::to_string(a.lhs));
    if (a.rhs0 >= a.lhs || a.rhs1 >= a.lhs)
      throw parse_error("and fanin does not precede definition (literal " +
                        std::to_string(a.lhs) + ")");
    aig_edge e = g.create_and(edge_of(a.rhs0), edge_of(a.rhs1));
    var[a.lhs / 2] = e;
    defined[a.lhs / 2] = true;
  }
  for (uint32_t lit : out_lits)
    g.create_po(edge_of(lit));
  return g;
}

aig parse_aiger_ascii_string(std::string const& text)
{
  std::istringstream ss(text);
  return parse_aiger_ascii(ss);
}

aig parse_aiger_ascii_file(std::string const& path)
{
  std::ifstream f(path);
  if (!f)
    throw parse_error("cannot open '" + path + "'");
  return parse_aiger_ascii(f);
}

} // namespace magicmap
