/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace magicmap {

/*! \brief Parse/validation failure with positional context. */
class parse_error : public std::runtime_error {
public:
  parse_error(std::string const& what, int line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_no(line) {}
  int line_no;
};

/*! \brief One product term over a node's fanins.
 *
 * lits[i] applies to the node's i-th fanin:
 *   '1' positive literal, '0' negative literal, '-' absent.
 */
struct raw_cube {
  std::string lits;
};

struct raw_node {
  std::string output;
  std::vector<std::string> inputs; //!< fanin names, in declaration order
  std::vector<raw_cube> cubes;     //!< on-set cover; empty cover = constant 0
};

/*! \brief Flat combinational netlist with single-output cube-list nodes. */
struct raw_netlist {
  std::string model;
  std::vector<std::string> primary_inputs;
  std::vector<std::string> primary_outputs;
  std::vector<raw_node> nodes; //!< topologically ordered after validation

  int node_index(std::string const& name) const; //!< -1 if not a node output
  int pi_index(std::string const& name) const;   //!< -1 if not a PI
};

/*! \brief Parse the supported BLIF subset (.model/.inputs/.outputs/.names/.end).
 *
 * Cubes are on-set only (output value 1). Sequential or hierarchical
 * constructs are rejected. The returned netlist is validated: every node
 * input resolves, no duplicate drivers, dependency graph acyclic (nodes are
 * re-emitted in topological order).
 */
raw_netlist parse_blif(std::istream& in);
raw_netlist parse_blif_string(std::string const& text);
raw_netlist parse_blif_file(std::string const& path);

/*! \brief Re-emit a netlist as BLIF (round-trips through parse_blif). */
std::string emit_blif(raw_netlist const& n);

/*! \brief Exhaustive single-pattern evaluation; pattern bit i = PI i. */
std::vector<bool> eval_raw(raw_netlist const& n, std::vector<bool> const& pattern);

} // namespace magicmap
