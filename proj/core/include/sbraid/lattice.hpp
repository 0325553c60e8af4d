#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sbraid/smith.hpp"

namespace sbraid {

using SparseVector = std::map<std::uint32_t, Integer>;

// Z^rank (+) Z/t_1 (+) ... with t_1 | t_2 | ..., all t_i > 1.
struct AbelianInvariants {
  long rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
};

// Invariants of Z^dim / span(rows).  Rows may only use coordinates < dim.
// Unit entries are eliminated sparsely before a dense Smith reduction of
// what is left.
AbelianInvariants quotient_invariants(std::vector<SparseVector> rows, std::size_t dim);

}  // namespace sbraid
