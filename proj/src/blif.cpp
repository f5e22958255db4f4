/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/netlist.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace magicmap {

int raw_netlist::node_index(std::string const& name) const
{
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].output == name)
      return static_cast<int>(i);
  return -1;
}

int raw_netlist::pi_index(std::string const& name) const
{
  for (size_t i = 0; i < primary_inputs.size(); ++i)
    if (primary_inputs[i] == name)
      return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::string> tokenize(std::string const& line)
{
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t)
    toks.push_back(t);
  return toks;
}

// Validates name resolution and acyclicity, and rewrites nodes in
// topological order. Throws parse_error on violation.
void validate_and_sort(raw_netlist& n)
{
  std::map<std::string, int> driver; // name -> node index
  for (size_t i = 0; i < n.nodes.size(); ++i) {
    auto const& name = n.nodes[i].output;
    if (driver.count(name))
      throw parse_error("duplicate driver for '" + name + "'");
    if (n.pi_index(name) >= 0)
      throw parse_error("node output '" + name + "' redefines a primary input");
    driver[name] = static_cast<int>(i);
  }
  for (auto const& node : n.nodes) {
    if (node.cubes.empty() && !node.inputs.empty())
      throw parse_error("node '" + node.output + "' has inputs but an empty cover");
    for (auto const& cube : node.cubes)
      if (cube.lits.size() != node.inputs.size())
        throw parse_error("cube width mismatch in node '" + node.output + "'");
    for (auto const& in : node.inputs)
      if (n.pi_index(in) < 0 && !driver.count(in))
        throw parse_error("unknown signal '" + in + "' used by node '" + node.output + "'");
  }
  for (auto const& po : n.primary_outputs)
    if (n.pi_index(po) < 0 && !driver.count(po))
      throw parse_error("undriven primary output '" + po + "'");

  // topological order by DFS; cycle -> combinational-loop
  std::vector<int> state(n.nodes.size(), 0); // 0 unseen, 1 on stack, 2 done
  std::vector<int> order;
  order.reserve(n.nodes.size());
  // iterative DFS to survive deep chains
  std::vector<int> stack;
  for (size_t root = 0; root < n.nodes.size(); ++root) {
    if (state[root])
      continue;
    stack.push_back(static_cast<int>(root));
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (auto const& in : n.nodes[v].inputs) {
          auto it = driver.find(in);
          if (it == driver.end())
            continue;
          if (state[it->second] == 1)
            throw parse_error("combinational-loop through '" + in + "'");
          if (state[it->second] == 0)
            stack.push_back(it->second);
        }
      } else {
        stack.pop_back();
        if (state[v] == 1) {
          state[v] = 2;
          order.push_back(v);
        }
      }
    }
  }
  std::vector<raw_node> sorted;
  sorted.reserve(n.nodes.size());
  for (int idx : order)
    sorted.push_back(std::move(n.nodes[idx]));
  n.nodes = std::move(sorted);
}

} // namespace

raw_netlist parse_blif(std::istream& in)
{
  raw_netlist net;
  std::string raw;
  std::string line;
  int line_no = 0;
  bool in_names = false;
  bool ended = false;

  auto flush_names = [&]() { in_names = false; };

  while (std::getline(in, raw)) {
    ++line_no;
    // strip comments, handle continuation
    if (auto pos = raw.find('#'); pos != std::string::npos)
      raw.erase(pos);
    while (!raw.empty() && (raw.back() == '\\')) {
      raw.pop_back();
      std::string cont;
      if (!std::getline(in, cont))
        break;
      ++line_no;
      if (auto pos = cont.find('#'); pos != std::string::npos)
        cont.erase(pos);
      raw += " " + cont;
    }
    auto toks = tokenize(raw);
    if (toks.empty())
      continue;
    if (ended)
      throw parse_error("content after .end", line_no);

    std::string const& head = toks[0];
    if (head[0] == '.') {
      if (head == ".model") {
        flush_names();
        net.model = toks.size() > 1 ? toks[1] : "top";
      } else if (head == ".inputs") {
        flush_names();
        net.primary_inputs.insert(net.primary_inputs.end(), toks.begin() + 1, toks.end());
      } else if (head == ".outputs") {
        flush_names();
        net.primary_outputs.insert(net.primary_outputs.end(), toks.begin() + 1, toks.end());
      } else if (head == ".names") {
        if (toks.size() < 2)
          throw parse_error(".names without output", line_no);
        raw_node node;
        node.output = toks.back();
        node.inputs.assign(toks.begin() + 1, toks.end() - 1);
        net.nodes.push_back(std::move(node));
        in_names = true;
      } else if (head == ".end") {
        flush_names();
        ended = true;
      } else if (head == ".latch") {
        throw parse_error("unsupported-sequential: .latch is not supported", line_no);
      } else if (head == ".subckt" || head == ".gate" || head == ".mlatch") {
        throw parse_error("unsupported construct '" + head + "'", line_no);
      } else {
        throw parse_error("unknown directive '" + head + "'", line_no);
      }
      continue;
    }

    if (!in_names)
      throw parse_error("cube outside .names", line_no);
    auto& node = net.nodes.back();
    if (node.inputs.empty()) {
      // constant: single token "1" (const 1) or "0" (const 0)
      if (toks.size() != 1 || (toks[0] != "1" && toks[0] != "0"))
        throw parse_error("malformed constant cover", line_no);
      if (toks[0] == "1")
        node.cubes.push_back({""});
      // "0" leaves the cover empty: constant 0
    } else {
      if (toks.size() != 2)
        throw parse_error("malformed cube", line_no);
      if (toks[1] != "1")
        throw parse_error("only on-set covers (output value 1) are supported", line_no);
      if (toks[0].size() != node.inputs.size())
        throw parse_error("cube width mismatch", line_no);
      for (char c : toks[0])
        if (c != '0' && c != '1' && c != '-')
          throw parse_error("invalid cube literal", line_no);
      node.cubes.push_back({toks[0]});
    }
  }

  if (net.model.empty())
    net.model = "top";
  if (net.primary_inputs.empty() && net.nodes.empty())
    throw parse_error("empty model");
  validate_and_sort(net);
  return net;
}

raw_netlist parse_blif_string(std::string const& text)
{
  std::istringstream ss(text);
  return parse_blif(ss);
}

raw_netlist parse_blif_file(std::string const& path)
{
  std::ifstream f(path);
  if (!f)
    throw parse_error("cannot open '" + path + "'");
  return parse_blif(f);
}

std::string emit_blif(raw_netlist const& n)
{
  std::ostringstream os;
  os << ".model " << n.model << "\n";
  os << ".inputs";
  for (auto const& s : n.primary_inputs)
    os << " " << s;
  os << "\n.outputs";
  for (auto const& s : n.primary_outputs)
    os << " " << s;
  os << "\n";
  for (auto const& node : n.nodes) {
    os << ".names";
    for (auto const& in : node.inputs)
      os << " " << in;
    os << " " << node.output << "\n";
    if (node.inputs.empty()) {
      if (!node.cubes.empty())
        os << "1\n";
      else
        os << "0\n";
    } else {
      for (auto const& c : node.cubes)
        os << c.lits << " 1\n";
    }
  }
  os << ".end\n";
  return os.str();
}

std::vector<bool> eval_raw(raw_netlist const& n, std::vector<bool> const& pattern)
{
  if (pattern.size() != n.primary_inputs.size())
    throw std::invalid_argument("pattern length mismatch");
  std::map<std::string, bool> value;
  for (size_t i = 0; i < n.primary_inputs.size(); ++i)
    value[n.primary_inputs[i]] = pattern[i];
  for (auto const& node : n.nodes) {
    bool v = false;
    for (auto const& cube : node.cubes) {
      bool cube_v = true;
      for (size_t i = 0; i < cube.lits.size(); ++i) {
        if (cube.lits[i] == '-')
          continue;
        bool in = value.at(node.inputs[i]);
        cube_v = cube_v && (cube.lits[i] == '1' ? in : !in);
      }
      v = v || cube_v;
      if (v)
        break;
    }
    value[node.output] = v;
  }
  std::vector<bool> out;
  out.reserve(n.primary_outputs.size());
  for (auto const& po : n.primary_outputs)
    out.push_back(value.at(po));
  return out;
}

} // namespace magicmap
