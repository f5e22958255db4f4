/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#include "magicmap/sop.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace magicmap {

void truth_table::mask_tail()
{
  if (num_vars_ < 6) {
    uint64_t mask = (uint64_t(1) << (std::size_t(1) << num_vars_)) - 1;
    bits_[0] &= mask;
  }
}

bool truth_table::is_const0() const
{
  for (auto w : bits_)
    if (w)
      return false;
  return true;
}

bool truth_table::is_const1() const
{
  return *this == constant(num_vars_, true);
}

truth_table truth_table::operator~() const
{
  truth_table r(*this);
  for (auto& w : r.bits_)
    w = ~w;
  r.mask_tail();
  return r;
}

truth_table truth_table::operator&(truth_table const& o) const
{
  truth_table r(*this);
  for (size_t i = 0; i < bits_.size(); ++i)
    r.bits_[i] &= o.bits_[i];
  return r;
}

truth_table truth_table::operator|(truth_table const& o) const
{
  truth_table r(*this);
  for (size_t i = 0; i < bits_.size(); ++i)
    r.bits_[i] |= o.bits_[i];
  return r;
}

truth_table truth_table::cofactor(unsigned v, bool polarity) const
{
  truth_table r(num_vars_);
  for (std::size_t i = 0; i < num_bits(); ++i) {
    std::size_t j = polarity ? (i | (std::size_t(1) << v)) : (i & ~(std::size_t(1) << v));
    r.set(i, get(j));
  }
  return r;
}

truth_table truth_table::var(unsigned num_vars, unsigned v)
{
  truth_table r(num_vars);
  for (std::size_t i = 0; i < r.num_bits(); ++i)
    r.set(i, (i >> v) & 1);
  return r;
}

truth_table truth_table::constant(unsigned num_vars, bool v)
{
  truth_table r(num_vars);
  if (v)
    for (std::size_t i = 0; i < r.num_bits(); ++i)
      r.set(i, true);
  return r;
}

std::string truth_table::to_binary() const
{
  std::string s;
  s.reserve(num_bits());
  for (std::size_t i = num_bits(); i-- > 0;)
    s.push_back(get(i) ? '1' : '0');
  return s;
}

bool sop_cover::eval(std::vector<bool> const& leaves) const
{
  for (auto const& cube : cubes) {
    bool v = true;
    for (size_t i = 0; i < cube.lits.size() && v; ++i) {
      if (cube.lits[i] == '1')
        v = leaves[i];
      else if (cube.lits[i] == '0')
        v = !leaves[i];
    }
    if (v)
      return true;
  }
  return false;
}

namespace {

// Minato-Morreale ISOP: cover within [lower, upper], both over `nv` vars.
// Appends cubes (as literal strings) and returns the function realized.
truth_table isop_rec(truth_table const& lower, truth_table const& upper, unsigned nv,
                     unsigned var_top, std::vector<std::string>& cubes, std::string& scratch)
{
  if (lower.is_const0())
    return truth_table::constant(nv, false);
  if (upper.is_const1()) {
    cubes.push_back(scratch);
    return truth_table::constant(nv, true);
  }
  // pick the highest remaining variable that lower or ~upper depends on
  unsigned v = var_top;
  while (true) {
    truth_table l0 = lower.cofactor(v, false), l1 = lower.cofactor(v, true);
    truth_table u0 = upper.cofactor(v, false), u1 = upper.cofactor(v, true);
    if (!(l0 == l1) || !(u0 == u1))
      break;
    if (v == 0)
      break;
    --v;
  }
  truth_table l0 = lower.cofactor(v, false), l1 = lower.cofactor(v, true);
  truth_table u0 = upper.cofactor(v, false), u1 = upper.cofactor(v, true);

  // cubes with literal !v covering parts of l0 not coverable under u1
  scratch[v] = '0';
  truth_table f0 = isop_rec(l0 & ~u1, u0, nv, v == 0 ? 0 : v - 1, cubes, scratch);
  // cubes with literal v
  scratch[v] = '1';
  truth_table f1 = isop_rec(l1 & ~u0, u1, nv, v == 0 ? 0 : v - 1, cubes, scratch);
  scratch[v] = '-';
  // cubes without v covering what remains
  truth_table lr = (l0 & ~f0) | (l1 & ~f1);
  truth_table fr = isop_rec(lr, u0 & u1, nv, v == 0 ? 0 : v - 1, cubes, scratch);

  truth_table nv0 = ~truth_table::var(nv, v);
  truth_table pv = truth_table::var(nv, v);
  return (f0 & nv0) | (f1 & pv) | fr;
}

} // namespace

sop_cover isop(truth_table const& tt)
{
  sop_cover cover;
  cover.num_leaves = tt.num_vars();
  if (tt.is_const0())
    return cover;
  if (tt.is_const1()) {
    cover.cubes.push_back({std::string(tt.num_vars(), '-')});
    return cover;
  }
  std::vector<std::string> cubes;
  std::string scratch(tt.num_vars(), '-');
  truth_table realized =
      isop_rec(tt, tt, tt.num_vars(), tt.num_vars() == 0 ? 0 : tt.num_vars() - 1, cubes, scratch);
  if (!(realized == tt))
    throw std::logic_error("isop: cover does not match function");
  for (auto& c : cubes)
    cover.cubes.push_back({std::move(c)});
  return cover;
}

truth_table cover_to_truth(sop_cover const& cover)
{
  truth_table tt(cover.num_leaves);
  std::vector<bool> leaves(cover.num_leaves);
  for (std::size_t m = 0; m < tt.num_bits(); ++m) {
    for (unsigned v = 0; v < cover.num_leaves; ++v)
      leaves[v] = (m >> v) & 1;
    tt.set(m, cover.eval(leaves));
  }
  return tt;
}

namespace {

int huffman_collapse(std::vector<int> arrivals)
{
  if (arrivals.empty())
    return 0;
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap(arrivals.begin(),
                                                                     arrivals.end());
  while (heap.size() > 1) {
    int a = heap.top();
    heap.pop();
    int b = heap.top();
    heap.pop();
    heap.push(std::max(a, b) + 1);
  }
  return heap.top();
}

} // namespace

int sop_balanced_depth(sop_cover const& cover, std::vector<int> const& leaf_arrival)
{
  if (leaf_arrival.size() != cover.num_leaves)
    throw std::invalid_argument("arrival count mismatch");
  std::vector<int> cube_arrivals;
  cube_arrivals.reserve(cover.cubes.size());
  for (auto const& cube : cover.cubes) {
    std::vector<int> lits;
    for (size_t i = 0; i < cube.lits.size(); ++i)
      if (cube.lits[i] != '-')
        lits.push_back(leaf_arrival[i]);
    cube_arrivals.push_back(huffman_collapse(std::move(lits)));
  }
  return huffman_collapse(std::move(cube_arrivals));
}

} // namespace magicmap
