#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbraid/builtin_scripts.hpp"
#include "sbraid/presentation.hpp"

namespace sbraid {

// The kernel alphabet: a_{j,k}, b_{j,k} for j >= 2, then every tau_{p,q},
// in generator order.
std::vector<GeneratorId> kernel_alphabet(int n, int g);
bool is_tau_first(const GeneratorId& gen);  // tau_{1,l}
bool is_kernel_generator(const GeneratorId& gen, int n, int g);

// p(a_{1,k}) = c_k, p(b_{1,k}) = d_k, every other generator maps to 1.
Word project(const Word& w, int n, int g);

// s(c_k) = T a_{1,k} T^-1, s(d_k) = T b_{1,k} T^-1 for k < g,
// s(c_g) = a_{1,g} ... a_{n,g} T, s(d_g) = b_{1,g}, with T = T_{1,n}.
Word section_image(const GeneratorId& gen, int n, int g);
Word section(const Word& w, int n, int g);

struct ForwardRule {
  GeneratorId conjugator;
  GeneratorId target;
  RelationInstance instance;
  Word image;  // instance rhs, i.e. ^{conjugator}target
};

// Conjugator a_{1,k}, b_{1,k} or tau_{1,d}; target in the kernel alphabet.
// Throws MatchError when no relation (or more than one) has lhs
// ^{conjugator}target.
ForwardRule forward_rule(const GeneratorId& conjugator, const GeneratorId& target, int n, int g);

// Square integer matrix over the kernel alphabet (column h = image of h).
class ActionMatrix {
 public:
  ActionMatrix(std::vector<GeneratorId> basis, Letter letter);

  static ActionMatrix identity(std::vector<GeneratorId> basis, Letter letter);

  const std::vector<GeneratorId>& basis() const { return basis_; }
  const Letter& letter() const { return letter_; }
  std::size_t dim() const { return basis_.size(); }
  std::int64_t& at(std::size_t r, std::size_t c) { return entries_[r * dim() + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * dim() + c]; }

  // Overflow-checked product; throws ResourceLimitError on overflow.
  ActionMatrix operator*(const ActionMatrix& other) const;
  bool is_identity() const;
  // M = I + N with N's nonzero rows all in tau_{1,*} coordinates and
  // N e_h = 0 for every tau_{1,*} basis vector h.
  bool has_unipotent_form() const;
  // M - I vanishes outside tau_{1,*} rows.
  bool deviation_in_tau_first_rows() const;
  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

 private:
  std::vector<GeneratorId> basis_;
  Letter letter_;
  std::vector<std::int64_t> entries_;
};

ActionMatrix action_matrix(const Letter& letter, int n, int g);

struct AlmostDirectReport {
  int n = 0;
  int g = 0;
  bool pass = false;
  std::size_t pairs_checked = 0;
  bool totality = true;       // one relation per (a_{1,k}/b_{1,k}, kernel letter)
  bool balance = true;        // exponent difference supported on tau_{1,*}
  bool matrix_form = true;    // every letter matrix is I + N
  bool section_support = true;
  SuiteReport tau_gamma2;
  std::vector<std::string> failures;
};

AlmostDirectReport almost_direct_check(int n, int g);

struct SectionRelatorOptions {
  int max_class = 2;                // 2, or 3 to add the class-3 cross-check
  std::optional<int> omit_section_c;  // mutation: drop the first s(c_i) of the i-th commutator
};

struct SectionRelatorReport {
  int n = 0;
  int g = 0;
  bool pass = false;
  bool derivation_pass = false;
  std::vector<std::pair<int, bool>> quotient_trivial;  // (class, trivial?)
  RawWord relator;  // the c/d word checked
  Word image;       // its image under the section, reduced
  DerivationReport derivation;
};

// Surface relator over c/d letters, optionally mutated.
RawWord section_relator_word(int g, std::optional<int> omit_section_c = std::nullopt);

SectionRelatorReport verify_section_relator(int n, int g, const SectionRelatorOptions& options = {});

}  // namespace sbraid
