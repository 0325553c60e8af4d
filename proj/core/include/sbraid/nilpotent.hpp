#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sbraid/hall.hpp"
#include "sbraid/lattice.hpp"
#include "sbraid/presentation.hpp"
#include "sbraid/smith.hpp"

namespace sbraid {

struct ResourceLimits {
  std::size_t max_basis = 60000;      // Hall basis size
  std::size_t max_sift_steps = 50000000;
};

struct GradedPiece {
  int weight = 0;  // i for Gamma_i / Gamma_{i+1}
  long rank = 0;
  std::vector<Integer> torsion;
};

struct LcsQuotients {
  int nilpotency_class = 0;
  std::vector<GradedPiece> pieces;
  std::vector<long> rational_ranks;  // free ranks; ranks of D_i / D_{i+1}
  // Smallest i <= class with Gamma_i/Gamma_{i+1} trivial.  Then Gamma_i =
  // Gamma_{i+1}, hence Gamma_i = Gamma_j for all j >= i.
  std::optional<int> stabilizes_at;
};

// The class-c quotient G / Gamma_{c+1}(G) of a finitely presented group, as
// the free nilpotent group modulo an induced sequence for the normal closure
// of the relators.
class NilpotentQuotient {
 public:
  NilpotentQuotient(const Presentation& p, int nilpotency_class, ResourceLimits limits = {});

  const HallBasis& basis() const { return *basis_; }
  const Collector& collector() const { return collector_; }
  const std::vector<GeneratorId>& generators() const { return generators_; }
  int nilpotency_class() const { return basis_->nilpotency_class(); }

  LcsQuotients quotients() const;

  Exponents collect(const Word& w) const;
  // Canonical residue of w modulo the relator subgroup; empty iff w is
  // trivial in the quotient.
  CollectedWord evaluate(const Word& w) const;
  bool is_trivial(const Word& w) const { return evaluate(w).is_identity(); }

  std::size_t row_count() const { return rows_.size(); }

 private:
  void sift_insert(Exponents h, std::vector<Exponents>& pending);
  void check_budget();

  std::vector<GeneratorId> generators_;
  std::unique_ptr<HallBasis> basis_;
  Collector collector_;
  ResourceLimits limits_;
  std::size_t sift_steps_ = 0;
  std::map<std::uint32_t, Exponents> rows_;  // pivot -> row, leading entry > 0
};

LcsQuotients lcs_quotients(const Presentation& p, int nilpotency_class, ResourceLimits limits = {});
AbelianInvariants abelian_invariants(const Presentation& p);

// (1/k) sum_{d | k} mu(d) m^{k/d}
Integer witt_rank(int m, int k);

// Shared quotients of the built-in presets, built on first use.
const NilpotentQuotient& cached_quotient(Preset preset, int n, int g, int nilpotency_class);

CollectedWord evaluate_in_quotient(const Word& w, const Presentation& p, int nilpotency_class);

}  // namespace sbraid
