/* magicmap: technology-aware synthesis and mapping for MAGIC NOR crossbars
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include "magicmap/aig.hpp"
#include "magicmap/scheduler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magicmap {

/*! \brief Three-valued crossbar state; reading an unknown cell is an error. */
class crossbar_state {
public:
  crossbar_state(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::optional<bool> get(cell_coord c) const
  {
    auto it = vals_.find(c);
    if (it == vals_.end())
      return std::nullopt;
    return it->second;
  }
  void set(cell_coord c, bool v) { vals_[c] = v; }

private:
  int rows_, cols_;
  std::map<cell_coord, bool> vals_;
};

struct sim_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*! \brief Execute a schedule. Preloaded cells (input data, complements,
 *         donors, constants) are written before cycle 1 at no cycle cost;
 *         each micro-op writes the NOR of its input cells. Returns the
 *         primary-output cell values. A non-null dump stream receives one
 *         line per cycle with every written cell. */
std::vector<bool> run(schedule const& s, placement const& p, std::vector<bool> const& pi_values,
                      std::ostream* dump = nullptr);

struct verify_verdict {
  bool pass = true;
  long vectors = 0;
  std::vector<bool> counterexample; //!< first failing PI pattern when !pass
  std::string detail;
};

/*! \brief Compare crossbar execution against reference AIG simulation,
 *         exhaustively or on seeded random vectors. */
verify_verdict verify_equivalence(schedule const& s, placement const& p, aig const& reference,
                                  bool exhaustive, long num_vectors, uint64_t seed);

} // namespace magicmap
