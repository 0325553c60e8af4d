#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbraid {

// Generator families.  a/b/tau are the strand generators of the pure braid
// group of a closed surface, A the generators of the point-indexed
// presentation (and of the Artin pure braid group), c/d the surface group,
// sigma the Artin braid group and x anonymous generators.
enum class Kind : std::uint8_t { A, a, b, tau, c, d, sigma, x };

struct GeneratorId {
  Kind kind = Kind::x;
  int first = 0;
  int second = 0;  // unused (0) for single-index kinds

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;

  static GeneratorId A(int i, int j) { return {Kind::A, i, j}; }
  static GeneratorId a(int j, int k) { return {Kind::a, j, k}; }
  static GeneratorId b(int j, int k) { return {Kind::b, j, k}; }
  static GeneratorId tau(int p, int q) { return {Kind::tau, p, q}; }
  static GeneratorId c(int k) { return {Kind::c, k, 0}; }
  static GeneratorId d(int k) { return {Kind::d, k, 0}; }
  static GeneratorId sigma(int i) { return {Kind::sigma, i, 0}; }
  static GeneratorId x(int i) { return {Kind::x, i, 0}; }
};

bool has_two_indices(Kind kind);

// Throws AlphabetError unless the indices are positive and, for tau and A,
// strictly increasing.
void check_well_formed(const GeneratorId& gen);

struct Letter {
  GeneratorId gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using RawWord = std::vector<Letter>;

RawWord free_reduce(std::span<const Letter> letters);
RawWord invert(std::span<const Letter> letters);

// A freely reduced word.  Every constructor reduces, so two Words are equal
// in the free group exactly when they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  explicit Word(GeneratorId gen, int exp = 1);

  const RawWord& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int e) const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  RawWord letters_;
};

Word reduce(std::span<const Letter> letters);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word product(std::span<const Word> factors);

// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
// ^{b}a = b a b^-1
Word conj_upper(const Word& b, const Word& a);
// a^{b} = b^-1 a b
Word conj_lower(const Word& a, const Word& b);

// Signed letter counts over `alphabet`, in that order.
std::vector<long> exponent_vector(const Word& w, std::span<const GeneratorId> alphabet);

using Substitution = std::function<Word(const GeneratorId&)>;
Word substitute(const Word& w, const Substitution& image);
Word substitute(const Word& w, const std::map<GeneratorId, Word>& image);

// Canonical text syntax: a[2,1] b[1,1]^-1 t[1,2]; the identity prints as "1".
std::string to_string(Kind kind);
std::string to_string(const GeneratorId& gen);
std::string to_string(const Letter& letter);
std::string to_string(std::span<const Letter> letters);
std::string to_string(const Word& w);

GeneratorId parse_generator(std::string_view text);
RawWord parse_raw_word(std::string_view text);
Word parse_word(std::string_view text);

}  // namespace sbraid
