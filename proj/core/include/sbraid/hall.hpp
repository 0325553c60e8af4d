#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sbraid/lattice.hpp"
#include "sbraid/word.hpp"

namespace sbraid {

// Basic commutators on m generators up to weight c <= 3, weight first:
//   weight 1: x_i
//   weight 2: u_{j,i} = [x_j, x_i], j > i, ordered by (j, i)
//   weight 3: w_{j,i,k} = [[x_j, x_i], x_k], j > i, k >= i, ordered by (j, i, k)
// Indices are 0-based.
class HallBasis {
 public:
  struct Element {
    int weight;
    int j;
    int i;  // -1 for generators
    int k;  // -1 below weight 3
  };

  HallBasis(int generators, int nilpotency_class);

  int generators() const { return m_; }
  int nilpotency_class() const { return c_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t idx) const { return elements_[idx]; }
  int weight(std::size_t idx) const { return elements_[idx].weight; }
  std::size_t weight_begin(int w) const;
  std::size_t weight_end(int w) const;
  std::size_t weight_count(int w) const { return weight_end(w) - weight_begin(w); }

  std::size_t u(int j, int i) const;
  std::size_t w(int j, int i, int k) const;

  std::string label(std::size_t idx, std::span<const std::string> names) const;
  // The basic commutator as a word, given words for the generators.
  Word as_word(std::size_t idx, std::span<const Word> gens) const;

  static std::size_t count(int generators, int nilpotency_class);

 private:
  int m_;
  int c_;
  std::vector<Element> elements_;
  std::vector<std::size_t> w_offset_;  // start of the (j, i) block of weight 3
};

using Exponents = SparseVector;

// Group law of the free nilpotent group of class c on normal forms
// x_1^{a_1} ... x_m^{a_m} * prod u^{b} * prod w^{e}.
class Collector {
 public:
  explicit Collector(const HallBasis& basis) : basis_(basis) {}

  const HallBasis& basis() const { return basis_; }

  // g <- g * x_k^e
  void mul_gen(Exponents& g, int k, const Integer& e) const;
  Exponents multiply(const Exponents& a, const Exponents& b) const;
  Exponents inverse(const Exponents& a) const;
  Exponents power(const Exponents& a, Integer e) const;
  Exponents commutator(const Exponents& a, const Exponents& b) const;
  // Letters are mapped to generator indices by position in `alphabet`.
  Exponents collect(const Word& w, std::span<const GeneratorId> alphabet) const;

 private:
  // adds f * [u_{j,i}, x_k] to the weight-3 part
  void add_u_comm_x(Exponents& out, int j, int i, int k, const Integer& f) const;

  const HallBasis& basis_;
};

struct CollectedWord {
  const HallBasis* basis = nullptr;
  Exponents exponents;

  bool is_identity() const { return exponents.empty(); }
  std::vector<Integer> dense() const;
};

CollectedWord hall_collect(const Word& w, const HallBasis& basis, std::span<const GeneratorId> alphabet);

void add_to(Exponents& e, std::uint32_t idx, const Integer& v);

}  // namespace sbraid
