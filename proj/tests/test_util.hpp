/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/aig.hpp"
#include "magicmap/compile.hpp"

#include <random>
#include <string>

namespace magicmap::testutil {

inline std::string fixture(std::string const& name)
{
  return std::string(MAGICMAP_FIXTURE_DIR) + "/" + name;
}

inline std::string bench(std::string const& name)
{
  return std::string(MAGICMAP_BENCH_DIR) + "/" + name;
}

//! Random AIG with `pis` inputs and roughly `nodes` AND nodes.
inline aig random_aig(uint64_t seed, int pis, int nodes, int pos = 2)
{
  std::mt19937_64 rng(seed);
  aig g;
  std::vector<aig_edge> sigs;
  for (int i = 0; i < pis; ++i)
    sigs.push_back(g.create_pi());
  for (int i = 0; i < nodes; ++i) {
    aig_edge a = sigs[rng() % sigs.size()];
    aig_edge b = sigs[rng() % sigs.size()];
    if (rng() & 1)
      a = !a;
    if (rng() & 1)
      b = !b;
    sigs.push_back(g.create_and(a, b));
  }
  for (int i = 0; i < pos; ++i) {
    aig_edge e = sigs[sigs.size() - 1 - (rng() % std::min<size_t>(sigs.size(), 5))];
    if (rng() & 1)
      e = !e;
    g.create_po(e);
  }
  return g;
}

//! Random cube-list netlist; every node has 1..3 fanins and a random on-set.
inline raw_netlist random_raw(uint64_t seed, int pis, int nodes, int pos = 2)
{
  std::mt19937_64 rng(seed);
  raw_netlist n;
  n.model = "rand" + std::to_string(seed);
  std::vector<std::string> sigs;
  for (int i = 0; i < pis; ++i) {
    n.primary_inputs.push_back("i" + std::to_string(i));
    sigs.push_back(n.primary_inputs.back());
  }
  for (int i = 0; i < nodes; ++i) {
    raw_node node;
    node.output = "n" + std::to_string(i);
    int fanins = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < fanins; ++f)
      node.inputs.push_back(sigs[rng() % sigs.size()]);
    int cubes = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < cubes; ++c) {
      std::string lits;
      bool nonempty = false;
      for (int f = 0; f < fanins; ++f) {
        int r = static_cast<int>(rng() % 3);
        lits.push_back(r == 0 ? '0' : r == 1 ? '1' : '-');
        nonempty = nonempty || lits.back() != '-';
      }
      if (!nonempty)
        lits[rng() % fanins] = '1';
      node.cubes.push_back({lits});
    }
    n.nodes.push_back(std::move(node));
    sigs.push_back("n" + std::to_string(i));
  }
  for (int i = 0; i < pos; ++i) {
    n.primary_outputs.push_back("n" + std::to_string(nodes - 1 - i % std::max(1, nodes / 2)));
  }
  // dedup outputs
  std::sort(n.primary_outputs.begin(), n.primary_outputs.end());
  n.primary_outputs.erase(std::unique(n.primary_outputs.begin(), n.primary_outputs.end()),
                          n.primary_outputs.end());
  return n;
}

//! Reference truth of a full adder: returns {sum, carry}.
inline std::pair<bool, bool> full_adder_ref(bool a, bool b, bool c)
{
  int s = int(a) + int(b) + int(c);
  return {(s & 1) != 0, s >= 2};
}

} // namespace magicmap::testutil
