/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/lut_map.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace magicmap {

int lut_netlist::num_levels() const
{
  int d = 0;
  for (auto const& l : luts)
    d = std::max(d, l.level);
  return d;
}

bool lut_netlist::eval_check() const
{
  for (size_t i = 0; i < luts.size(); ++i) {
    if (k > 0 && static_cast<int>(luts[i].inputs.size()) > k)
      return false;
    for (auto const& in : luts[i].inputs) {
      if (in.is_lut() && in.index >= static_cast<int>(i))
        return false;
      if (in.is_pi() && in.index >= static_cast<int>(pi_names.size()))
        return false;
    }
  }
  return true;
}

std::vector<bool> lut_netlist::eval(std::vector<bool> const& pattern) const
{
  if (pattern.size() != pi_names.size())
    throw std::invalid_argument("pattern length mismatch");
  std::vector<bool> val(luts.size());
  std::vector<bool> leaves;
  for (size_t i = 0; i < luts.size(); ++i) {
    leaves.clear();
    for (auto const& in : luts[i].inputs)
      leaves.push_back(in.is_pi() ? pattern[in.index] : val[in.index]);
    val[i] = luts[i].cover.eval(leaves);
  }
  std::vector<bool> out;
  out.reserve(po_refs.size());
  for (auto const& r : po_refs)
    out.push_back(r.is_pi() ? pattern[r.index] : val[r.index]);
  return out;
}

namespace {

struct ranked_cut {
  cut c;
  int cost = 0;
};

// (cost, leaf count, lexicographic leaves)
bool better(ranked_cut const& a, ranked_cut const& b)
{
  if (a.cost != b.cost)
    return a.cost < b.cost;
  if (a.c.leaves.size() != b.c.leaves.size())
    return a.c.leaves.size() < b.c.leaves.size();
  return a.c.leaves < b.c.leaves;
}

// Merge two cuts; empty optional if the union exceeds k leaves.
std::optional<cut> merge_cuts(cut const& a, cut const& b, aig_edge ea, aig_edge eb, int k)
{
  cut m;
  m.leaves.reserve(a.leaves.size() + b.leaves.size());
  std::set_union(a.leaves.begin(), a.leaves.end(), b.leaves.begin(), b.leaves.end(),
                 std::back_inserter(m.leaves));
  if (static_cast<int>(m.leaves.size()) > k)
    return std::nullopt;

  // expand both truths onto the merged leaf set, apply edge complements, AND
  auto expand = [&](cut const& src) {
    truth_table t(static_cast<unsigned>(m.leaves.size()));
    std::vector<unsigned> pos(src.leaves.size());
    for (size_t i = 0; i < src.leaves.size(); ++i)
      pos[i] = static_cast<unsigned>(
          std::lower_bound(m.leaves.begin(), m.leaves.end(), src.leaves[i]) - m.leaves.begin());
    for (std::size_t mt = 0; mt < t.num_bits(); ++mt) {
      std::size_t smt = 0;
      for (size_t i = 0; i < pos.size(); ++i)
        if ((mt >> pos[i]) & 1)
          smt |= std::size_t(1) << i;
      t.set(mt, src.truth.get(smt));
    }
    return t;
  };
  truth_table ta = expand(a);
  truth_table tb = expand(b);
  if (ea.compl_)
    ta = ~ta;
  if (eb.compl_)
    tb = ~tb;
  m.truth = ta & tb;
  return m;
}

int cut_cost(cut const& c, std::vector<int> const& arrival, bool use_sop_balance)
{
  if (c.leaves.empty())
    return 0;
  if (use_sop_balance) {
    std::vector<int> leaf_arr(c.leaves.size());
    for (size_t i = 0; i < c.leaves.size(); ++i)
      leaf_arr[i] = arrival[c.leaves[i]];
    return sop_balanced_depth(isop(c.truth), leaf_arr);
  }
  int worst = 0;
  for (auto l : c.leaves)
    worst = std::max(worst, arrival[l]);
  return worst + 1;
}

struct cut_db {
  std::vector<std::vector<ranked_cut>> cuts; // per node, best first
  std::vector<int> arrival;                  // per node
};

cut_db compute_cuts(aig const& g, int k, int c, bool use_sop_balance)
{
  cut_db db;
  db.cuts.resize(g.size());
  db.arrival.assign(g.size(), 0);

  auto trivial = [&](uint32_t idx) {
    cut t;
    t.leaves = {idx};
    t.truth = truth_table::var(1, 0);
    return t;
  };

  // constant node: single empty-leaf cut with constant-0 truth
  {
    cut c0;
    c0.truth = truth_table::constant(0, false);
    db.cuts[0].push_back({c0, 0});
  }
  for (uint32_t i = 1; i <= g.num_pis(); ++i)
    db.cuts[i].push_back({trivial(i), 0});

  for (uint32_t i = g.num_pis() + 1; i < g.size(); ++i) {
    auto const& nd = g.at(i);
    std::vector<ranked_cut> cand;
    for (auto const& ca : db.cuts[nd.fanin0.index]) {
      for (auto const& cb : db.cuts[nd.fanin1.index]) {
        auto m = merge_cuts(ca.c, cb.c, nd.fanin0, nd.fanin1, k);
        if (!m)
          continue;
        int cost = cut_cost(*m, db.arrival, use_sop_balance);
        cand.push_back({std::move(*m), cost});
      }
    }
    std::sort(cand.begin(), cand.end(), better);
    // dedup identical leaf sets (keep best)
    std::vector<ranked_cut> kept;
    std::set<std::vector<uint32_t>> seen;
    for (auto& rc : cand) {
      if (static_cast<int>(kept.size()) >= c)
        break;
      if (seen.insert(rc.c.leaves).second)
        kept.push_back(std::move(rc));
    }
    if (kept.empty())
      throw std::logic_error("cut enumeration produced no cut");
    db.arrival[i] = kept[0].cost;
    // trivial cut last so it never outranks a real cut but stays available
    kept.push_back({trivial(i), cut_cost(trivial(i), db.arrival, use_sop_balance)});
    db.cuts[i] = std::move(kept);
  }
  return db;
}

} // namespace

std::vector<std::vector<cut>> enumerate_cuts(aig const& g, int k, int c, bool use_sop_balance)
{
  if (k < 2 || k > 10)
    throw std::invalid_argument("cut size k must be in [2,10]");
  if (c < 1)
    throw std::invalid_argument("cut count c must be >= 1");
  auto db = compute_cuts(g, k, c, use_sop_balance);
  std::vector<std::vector<cut>> out(db.cuts.size());
  for (size_t i = 0; i < db.cuts.size(); ++i)
    for (auto const& rc : db.cuts[i])
      out[i].push_back(rc.c);
  return out;
}

lut_netlist map_luts(aig const& g, int k, int c, bool use_sop_balance)
{
  if (k < 2 || k > 10)
    throw std::invalid_argument("cut size k must be in [2,10]");
  auto db = compute_cuts(g, k, c, use_sop_balance);

  lut_netlist nl;
  nl.k = k;
  for (uint32_t i = 0; i < g.num_pis(); ++i)
    nl.pi_names.push_back("pi" + std::to_string(i));

  // select required nodes from POs; best cut of each required node
  std::map<uint32_t, int> lut_of; // aig node -> lut index
  std::function<int(uint32_t)> build = [&](uint32_t node) -> int {
    if (auto it = lut_of.find(node); it != lut_of.end())
      return it->second;
    auto const& best = db.cuts[node][0];
    lut new_lut;
    int lvl = 0;
    for (auto leaf : best.c.leaves) {
      if (g.is_pi(leaf)) {
        new_lut.inputs.push_back(sig_ref::pi(static_cast<int>(g.pi_index(leaf))));
      } else if (g.is_const(leaf)) {
        throw std::logic_error("constant leaf in cut");
      } else {
        int li = build(leaf);
        new_lut.inputs.push_back(sig_ref::lut(li));
        lvl = std::max(lvl, nl.luts[li].level);
      }
    }
    new_lut.cover = isop(best.c.truth);
    new_lut.level = lvl + 1;
    nl.luts.push_back(std::move(new_lut));
    int idx = static_cast<int>(nl.luts.size() - 1);
    lut_of[node] = idx;
    return idx;
  };

  std::map<uint32_t, int> compl_of; // complemented output LUT per node
  std::map<uint32_t, int> pi_inverter_of;
  auto po_target = [&](aig_edge e) -> sig_ref {
    if (g.is_const(e.index)) {
      // constant output: zero-input LUT
      lut cl;
      cl.cover.num_leaves = 0;
      if (e.compl_) // constant 1
        cl.cover.cubes.push_back({""});
      cl.level = 0;
      nl.luts.push_back(std::move(cl));
      return sig_ref::lut(static_cast<int>(nl.luts.size() - 1));
    }
    if (g.is_pi(e.index)) {
      if (!e.compl_)
        return sig_ref::pi(static_cast<int>(g.pi_index(e.index)));
      if (auto it = pi_inverter_of.find(e.index); it != pi_inverter_of.end())
        return sig_ref::lut(it->second);
      lut inv;
      inv.inputs = {sig_ref::pi(static_cast<int>(g.pi_index(e.index)))};
      inv.cover.num_leaves = 1;
      inv.cover.cubes.push_back({"0"});
      inv.level = 1;
      nl.luts.push_back(std::move(inv));
      pi_inverter_of[e.index] = static_cast<int>(nl.luts.size() - 1);
      return sig_ref::lut(pi_inverter_of[e.index]);
    }
    if (!e.compl_)
      return sig_ref::lut(build(e.index));
    // complemented output: realize the complement of the node's best cut
    // directly in the output LUT
    if (auto it = compl_of.find(e.index); it != compl_of.end())
      return sig_ref::lut(it->second);
    auto const& best = db.cuts[e.index][0];
    lut out_lut;
    int lvl = 0;
    for (auto leaf : best.c.leaves) {
      if (g.is_pi(leaf)) {
        out_lut.inputs.push_back(sig_ref::pi(static_cast<int>(g.pi_index(leaf))));
      } else {
        int li = build(leaf);
        out_lut.inputs.push_back(sig_ref::lut(li));
        lvl = std::max(lvl, nl.luts[li].level);
      }
    }
    out_lut.cover = isop(~best.c.truth);
    out_lut.level = lvl + 1;
    nl.luts.push_back(std::move(out_lut));
    compl_of[e.index] = static_cast<int>(nl.luts.size() - 1);
    return sig_ref::lut(compl_of[e.index]);
  };

  for (size_t i = 0; i < g.pos().size(); ++i) {
    nl.po_refs.push_back(po_target(g.pos()[i]));
    nl.po_names.push_back("po" + std::to_string(i));
  }
  for (size_t i = 0; i < nl.luts.size(); ++i)
    if (nl.luts[i].name.empty())
      nl.luts[i].name = "n" + std::to_string(i);
  return nl;
}

lut_netlist map_luts_two_pass(aig const& g, int k, int c, int l)
{
  auto wide = map_luts(g, l, c, /*use_sop_balance=*/true);
  aig restructured = lut_netlist_to_aig(wide);
  return map_luts(restructured, k, c, /*use_sop_balance=*/false);
}

lut_netlist luts_from_raw(raw_netlist const& n)
{
  lut_netlist nl;
  nl.k = 0; // unconstrained; carried netlist structure
  nl.pi_names = n.primary_inputs;
  std::map<std::string, sig_ref> sig;
  for (size_t i = 0; i < n.primary_inputs.size(); ++i)
    sig[n.primary_inputs[i]] = sig_ref::pi(static_cast<int>(i));
  int max_in = 0;
  for (auto const& node : n.nodes) {
    lut l;
    l.name = node.output;
    int lvl = 0;
    for (auto const& in : node.inputs) {
      sig_ref r = sig.at(in);
      l.inputs.push_back(r);
      if (r.is_lut())
        lvl = std::max(lvl, nl.luts[r.index].level);
    }
    l.cover.num_leaves = static_cast<unsigned>(node.inputs.size());
    for (auto const& c : node.cubes)
      l.cover.cubes.push_back({c.lits});
    l.level = node.inputs.empty() ? 0 : lvl + 1;
    nl.luts.push_back(std::move(l));
    sig[node.output] = sig_ref::lut(static_cast<int>(nl.luts.size() - 1));
    max_in = std::max(max_in, static_cast<int>(node.inputs.size()));
  }
  nl.k = max_in;
  for (auto const& po : n.primary_outputs) {
    nl.po_refs.push_back(sig.at(po));
    nl.po_names.push_back(po);
  }
  return nl;
}

aig lut_netlist_to_aig(lut_netlist const& nl)
{
  aig g;
  std::vector<aig_edge> pi_edges;
  for (size_t i = 0; i < nl.pi_names.size(); ++i)
    pi_edges.push_back(g.create_pi());
  std::vector<aig_edge> lut_edges(nl.luts.size());

  for (size_t i = 0; i < nl.luts.size(); ++i) {
    auto const& l = nl.luts[i];
    std::vector<aig_edge> ins;
    for (auto const& r : l.inputs)
      ins.push_back(r.is_pi() ? pi_edges[r.index] : lut_edges[r.index]);

    auto lv = g.levels();
    auto arrival = [&](aig_edge e) { return lv.size() > e.index ? lv[e.index] : 0u; };

    // balanced AND per cube, balanced OR across cubes (Huffman on levels)
    using item = std::pair<uint32_t, aig_edge>;
    auto cmp = [](item const& a, item const& b) {
      return a.first != b.first ? a.first > b.first : a.second.index > b.second.index;
    };
    std::vector<item> cube_items;
    for (auto const& cube : l.cover.cubes) {
      std::priority_queue<item, std::vector<item>, decltype(cmp)> heap(cmp);
      for (size_t j = 0; j < cube.lits.size(); ++j) {
        if (cube.lits[j] == '-')
          continue;
        aig_edge e = cube.lits[j] == '1' ? ins[j] : !ins[j];
        heap.push({arrival(e), e});
      }
      if (heap.empty()) {
        cube_items.push_back({0, aig::const_true()});
        continue;
      }
      while (heap.size() > 1) {
        auto a = heap.top();
        heap.pop();
        auto b = heap.top();
        heap.pop();
        aig_edge f = g.create_and(a.second, b.second);
        heap.push({std::max(a.first, b.first) + 1, f});
      }
      cube_items.push_back(heap.top());
    }
    if (cube_items.empty()) {
      lut_edges[i] = aig::const_false();
      continue;
    }
    std::priority_queue<item, std::vector<item>, decltype(cmp)> orheap(cmp);
    for (auto const& it : cube_items)
      orheap.push(it);
    while (orheap.size() > 1) {
      auto a = orheap.top();
      orheap.pop();
      auto b = orheap.top();
      orheap.pop();
      aig_edge f = g.create_or(a.second, b.second);
      orheap.push({std::max(a.first, b.first) + 1, f});
    }
    lut_edges[i] = orheap.top().second;
  }
  for (auto const& r : nl.po_refs)
    g.create_po(r.is_pi() ? pi_edges[r.index] : lut_edges[r.index]);
  return g;
}

raw_netlist lut_netlist_to_raw(lut_netlist const& nl, std::string const& model)
{
  raw_netlist n;
  n.model = model;
  n.primary_inputs = nl.pi_names;
  auto sig_name = [&](sig_ref r) {
    return r.is_pi() ? nl.pi_names[r.index] : nl.luts[r.index].name;
  };
  for (size_t i = 0; i < nl.luts.size(); ++i) {
    raw_node node;
    node.output = nl.luts[i].name;
    for (auto const& in : nl.luts[i].inputs)
      node.inputs.push_back(sig_name(in));
    for (auto const& cube : nl.luts[i].cover.cubes)
      node.cubes.push_back({cube.lits});
    n.nodes.push_back(std::move(node));
  }
  for (size_t i = 0; i < nl.po_refs.size(); ++i) {
    // BLIF outputs must be named signals; wire POs through identity nodes
    // when they alias a PI or when names collide.
    std::string target = sig_name(nl.po_refs[i]);
    std::string po = nl.po_names.empty() ? "po" + std::to_string(i) : nl.po_names[i];
    if (target != po) {
      raw_node alias;
      alias.output = po;
      alias.inputs = {target};
      alias.cubes.push_back({"1"});
      n.nodes.push_back(std::move(alias));
    }
    n.primary_outputs.push_back(po);
  }
  return n;
}

} // namespace magicmap
