/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/analytics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace magicmap {

void bitlet_params::validate() const
{
  auto pos = [](double v, char const* what) {
    if (!(v > 0))
      throw std::invalid_argument(std::string("bitlet parameter ") + what +
                                  " must be strictly positive");
  };
  pos(pim_cycle_time, "pim_cycle_time");
  pos(pim_energy_per_op, "pim_energy_per_op");
  pos(arrays_in_parallel, "arrays_in_parallel");
  pos(cpu_bandwidth, "cpu_bandwidth");
  pos(cpu_energy_per_bit, "cpu_energy_per_bit");
  pos(io_bits, "io_bits");
}

bitlet_params load_bitlet_params(std::string const& path)
{
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot open bitlet config '" + path + "'");
  bitlet_params p;
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ss(line);
    std::string key;
    if (!std::getline(ss, key, '='))
      continue;
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key.empty())
      continue;
    double value;
    if (!(ss >> value))
      throw std::runtime_error("malformed bitlet config at line " + std::to_string(line_no));
    if (key == "pim_cycle_time")
      p.pim_cycle_time = value;
    else if (key == "pim_energy_per_op")
      p.pim_energy_per_op = value;
    else if (key == "arrays_in_parallel")
      p.arrays_in_parallel = value;
    else if (key == "cpu_bandwidth")
      p.cpu_bandwidth = value;
    else if (key == "cpu_energy_per_bit")
      p.cpu_energy_per_bit = value;
    else if (key == "io_bits")
      p.io_bits = value;
    else
      throw std::runtime_error("unknown bitlet parameter '" + key + "'");
  }
  p.validate();
  return p;
}

throughput_energy model_throughput_energy(stats const& st, long total_ops,
                                          bitlet_params const& params)
{
  params.validate();
  if (st.cycles <= 0)
    throw std::invalid_argument("model requires a non-empty schedule");
  throughput_energy r;
  r.pim_throughput = params.arrays_in_parallel / (st.cycles * params.pim_cycle_time);
  r.pim_energy = static_cast<double>(total_ops) * params.pim_energy_per_op;
  r.cpu_throughput = params.cpu_bandwidth / params.io_bits;
  r.cpu_energy = params.io_bits * params.cpu_energy_per_bit;
  return r;
}

long count_total_ops(schedule const& s)
{
  long n = 0;
  for (auto const& cyc : s.cycles)
    for (auto const& op : cyc)
      if (op.kind != op_kind::init)
        ++n;
  return n;
}

std::vector<sweep_point> pareto_sweep(std::vector<sweep_point> const& results)
{
  if (results.empty())
    throw std::invalid_argument("pareto sweep needs at least one result");
  auto dominates = [](sweep_point const& a, sweep_point const& b) {
    bool no_worse = a.st.cycles <= b.st.cycles && a.st.mems <= b.st.mems;
    bool better = a.st.cycles < b.st.cycles || a.st.mems < b.st.mems;
    return no_worse && better;
  };
  std::vector<sweep_point> frontier;
  for (auto const& p : results) {
    bool dominated = false;
    for (auto const& q : results)
      if (dominates(q, p)) {
        dominated = true;
        break;
      }
    if (!dominated)
      frontier.push_back(p);
  }
  std::sort(frontier.begin(), frontier.end(), [](sweep_point const& a, sweep_point const& b) {
    if (a.st.cycles != b.st.cycles)
      return a.st.cycles < b.st.cycles;
    if (a.st.mems != b.st.mems)
      return a.st.mems < b.st.mems;
    return a.k < b.k;
  });
  return frontier;
}

} // namespace magicmap
