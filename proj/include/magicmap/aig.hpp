/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/netlist.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace magicmap {

/*! \brief Edge into an AIG node: target index with optional complement. */
struct aig_edge {
  uint32_t index = 0; //!< node index; 0 is the constant-false node
  bool compl_ = false;

  bool operator==(aig_edge const& o) const { return index == o.index && compl_ == o.compl_; }
  bool operator<(aig_edge const& o) const
  {
    return index != o.index ? index < o.index : compl_ < o.compl_;
  }
};

inline aig_edge operator!(aig_edge e) { return {e.index, !e.compl_}; }

/*! \brief And-inverter graph with structural hashing.
 *
 * Node 0 is constant false. Nodes [1, num_pis] are the primary inputs.
 * AND nodes follow in topological order (fanins precede fanouts).
 */
class aig {
public:
  struct node {
    aig_edge fanin0, fanin1; //!< meaningful for AND nodes only
  };

  aig() { nodes_.push_back({}); }

  static aig_edge const_false() { return {0, false}; }
  static aig_edge const_true() { return {0, true}; }

  aig_edge create_pi()
  {
    if (num_ands() != 0)
      throw std::logic_error("PIs must be created before AND nodes");
    nodes_.push_back({});
    ++num_pis_;
    return {static_cast<uint32_t>(nodes_.size() - 1), false};
  }

  //! Structural-hashed AND with constant folding.
  aig_edge create_and(aig_edge a, aig_edge b);
  aig_edge create_or(aig_edge a, aig_edge b) { return !create_and(!a, !b); }
  aig_edge create_xor(aig_edge a, aig_edge b)
  {
    return create_or(create_and(a, !b), create_and(!a, b));
  }

  void create_po(aig_edge e) { pos_.push_back(e); }

  uint32_t size() const { return static_cast<uint32_t>(nodes_.size()); }
  uint32_t num_pis() const { return num_pis_; }
  uint32_t num_pos() const { return static_cast<uint32_t>(pos_.size()); }
  uint32_t num_ands() const { return size() - 1 - num_pis_; }

  bool is_const(uint32_t idx) const { return idx == 0; }
  bool is_pi(uint32_t idx) const { return idx >= 1 && idx <= num_pis_; }
  bool is_and(uint32_t idx) const { return idx > num_pis_; }
  uint32_t pi_index(uint32_t idx) const { return idx - 1; } //!< only valid for PIs

  node const& at(uint32_t idx) const { return nodes_[idx]; }
  std::vector<aig_edge> const& pos() const { return pos_; }

  //! Per-node logic level; PIs and the constant are level 0.
  std::vector<uint32_t> levels() const;
  uint32_t depth() const;

  //! Fanout counts over AND fanins and PO edges.
  std::vector<uint32_t> fanout_counts() const;

private:
  std::vector<node> nodes_;
  uint32_t num_pis_ = 0;
  std::vector<aig_edge> pos_;
  std::map<std::pair<uint64_t, uint64_t>, uint32_t> strash_;
};

/*! \brief Technology decomposition of a cube-list netlist into an AIG.
 *
 * Each node's cover becomes a balanced AND of literals per cube and a
 * balanced OR (De Morgan) across cubes.
 */
aig from_raw(raw_netlist const& n);

/*! \brief Single-pattern simulation; pattern[i] drives PI i. */
std::vector<bool> simulate(aig const& g, std::vector<bool> const& pattern);

/*! \brief 64-way bit-parallel simulation; word i drives PI i. */
std::vector<uint64_t> simulate64(aig const& g, std::vector<uint64_t> const& pattern);

/*! \brief Depth-reducing AND-tree rebalancing.
 *
 * Collects maximal same-polarity AND trees (stopping at complemented edges
 * and multi-fanout boundaries) and rebuilds each by Huffman pairing on
 * operand levels. Function is preserved; depth never increases.
 */
aig and_balance(aig const& g);

/*! \brief Parse an ASCII AIGER (aag) stream; combinational only (L = 0). */
aig parse_aiger_ascii(std::istream& in);
aig parse_aiger_ascii_string(std::string const& text);
aig parse_aiger_ascii_file(std::string const& path);

} // namespace magicmap
