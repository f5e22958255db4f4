/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace magicmap {

/*! \brief Truth table over up to 16 variables, bit i = value at minterm i. */
class truth_table {
public:
  truth_table() = default;
  explicit truth_table(unsigned num_vars)
      : num_vars_(num_vars), bits_((std::size_t(1) << num_vars) <= 64
                                       ? 1
                                       : (std::size_t(1) << num_vars) / 64)
  {
    if (num_vars > 16)
      throw std::invalid_argument("truth table limited to 16 variables");
  }

  unsigned num_vars() const { return num_vars_; }
  std::size_t num_bits() const { return std::size_t(1) << num_vars_; }

  bool get(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v)
  {
    if (v)
      bits_[i / 64] |= (uint64_t(1) << (i % 64));
    else
      bits_[i / 64] &= ~(uint64_t(1) << (i % 64));
  }

  bool is_const0() const;
  bool is_const1() const;

  truth_table operator~() const;
  truth_table operator&(truth_table const& o) const;
  truth_table operator|(truth_table const& o) const;
  bool operator==(truth_table const& o) const { return num_vars_ == o.num_vars_ && bits_ == o.bits_; }

  //! Positive/negative cofactor with respect to variable v.
  truth_table cofactor(unsigned v, bool polarity) const;
  //! The function of variable v itself.
  static truth_table var(unsigned num_vars, unsigned v);
  static truth_table constant(unsigned num_vars, bool v);

  std::string to_binary() const; //!< MSB-first bit string, for diagnostics

private:
  void mask_tail();
  unsigned num_vars_ = 0;
  std::vector<uint64_t> bits_{0};
};

/*! \brief Cube over an ordered leaf set: per-leaf literal state. */
struct sop_cube {
  // '1' positive, '0' negative, '-' absent; length = number of leaves
  std::string lits;
  unsigned num_lits() const
  {
    unsigned c = 0;
    for (char ch : lits)
      if (ch != '-')
        ++c;
    return c;
  }
};

/*! \brief Two-level cover; empty cube list = constant 0, a single
 *         all-dash cube = constant 1 (tautology). */
struct sop_cover {
  std::vector<sop_cube> cubes;
  unsigned num_leaves = 0;

  bool is_const0() const { return cubes.empty(); }
  bool is_const1() const
  {
    return cubes.size() == 1 && cubes[0].num_lits() == 0;
  }
  bool eval(std::vector<bool> const& leaves) const;
};

/*! \brief Irredundant SOP of a truth table (Minato–Morreale recursion). */
sop_cover isop(truth_table const& tt);

/*! \brief Evaluate a cover exhaustively back into a truth table. */
truth_table cover_to_truth(sop_cover const& cover);

/*! \brief Arrival time of the balanced AND/OR tree realizing a cover.
 *
 * Each cube's literal arrivals are Huffman-paired into a balanced AND tree,
 * then the cube results are Huffman-paired into a balanced OR tree. The
 * returned value is the root arrival. A single literal passes through as a
 * wire; constants arrive at 0.
 */
int sop_balanced_depth(sop_cover const& cover, std::vector<int> const& leaf_arrival);

} // namespace magicmap
