#include "sbraid/lattice.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sbraid {

namespace {

void axpy(SparseVector& dst, const SparseVector& src, const Integer& f) {
  for (const auto& [c, v] : src) {
    Integer& slot = dst[c];
    slot += f * v;
    if (slot == 0) dst.erase(c);
  }
}

}  // namespace

AbelianInvariants quotient_invariants(std::vector<SparseVector> rows, std::size_t dim) {
  std::vector<bool> alive(rows.size(), true);
  std::unordered_map<std::uint32_t, std::set<std::size_t>> occurs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto it = rows[r].begin(); it != rows[r].end();) {
      if (it->first >= dim) throw std::out_of_range("lattice row uses a coordinate outside the ambient rank");
      if (it->second == 0) {
        it = rows[r].erase(it);
      } else {
        occurs[it->first].insert(r);
        ++it;
      }
    }
  }

  std::size_t units = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      // a unit entry in the sparsest column keeps fill-in low
      std::uint32_t col = 0;
      std::size_t best = SIZE_MAX;
      for (const auto& [c, v] : rows[r]) {
        if (abs(v) == 1 && occurs[c].size() < best) {
          best = occurs[c].size();
          col = c;
        }
      }
      if (best == SIZE_MAX) continue;
      const SparseVector pivot = rows[r];
      const Integer pv = pivot.at(col);
      std::vector<std::size_t> others(occurs[col].begin(), occurs[col].end());
      for (std::size_t s : others) {
        if (s == r) continue;
        Integer f = -rows[s].at(col) * pv;  // pv = +-1, so this is exact
        SparseVector before = rows[s];
        axpy(rows[s], pivot, f);
        for (const auto& [c, v] : before) {
          if (!rows[s].count(c)) occurs[c].erase(s);
        }
        for (const auto& [c, v] : rows[s]) occurs[c].insert(s);
      }
      for (const auto& [c, v] : pivot) occurs[c].erase(r);
      rows[r].clear();
      alive[r] = false;
      ++units;
      progress = true;
    }
  }

  std::vector<std::size_t> rest;
  std::map<std::uint32_t, std::size_t> cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    rest.push_back(r);
    for (const auto& [c, v] : rows[r]) cols.emplace(c, 0);
  }
  std::size_t ci = 0;
  for (auto& [c, slot] : cols) slot = ci++;

  AbelianInvariants out;
  std::size_t lattice_rank = units;
  if (!rest.empty()) {
    IntMatrix m(rest.size(), cols.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (const auto& [c, v] : rows[rest[i]]) m(i, cols.at(c)) = v;
    }
    for (const Integer& d : invariant_factors(std::move(m))) {
      ++lattice_rank;
      if (d > 1) out.torsion.push_back(d);
    }
  }
  out.rank = static_cast<long>(dim) - static_cast<long>(lattice_rank);
  return out;
}

}  // namespace sbraid
