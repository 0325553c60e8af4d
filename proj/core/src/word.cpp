#include "sbraid/word.hpp"

#include <cctype>
#include <charconv>

#include "sbraid/error.hpp"

namespace sbraid {

bool has_two_indices(Kind kind) {
  switch (kind) {
    case Kind::A:
    case Kind::a:
    case Kind::b:
    case Kind::tau:
      return true;
    default:
      return false;
  }
}

void check_well_formed(const GeneratorId& gen) {
  if (gen.first < 1 || (has_two_indices(gen.kind) && gen.second < 1)) {
    throw AlphabetError("generator " + to_string(gen) + " has a non-positive index");
  }
  if (!has_two_indices(gen.kind) && gen.second != 0) {
    throw AlphabetError("generator kind " + to_string(gen.kind) + " takes one index");
  }
  if ((gen.kind == Kind::tau || gen.kind == Kind::A) && gen.first >= gen.second) {
    throw AlphabetError("generator " + to_string(gen) + " requires increasing indices");
  }
}

RawWord free_reduce(std::span<const Letter> letters) {
  RawWord out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

RawWord invert(std::span<const Letter> letters) {
  RawWord out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word::Word(std::span<const Letter> letters) : letters_(free_reduce(letters)) {}

Word::Word(GeneratorId gen, int exp) {
  if (exp != 1 && exp != -1) throw AlphabetError("letter exponent must be +1 or -1");
  letters_.push_back({gen, exp});
}

Word Word::inverse() const {
  Word w;
  w.letters_ = sbraid::invert(letters_);
  return w;
}

Word Word::pow(int e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  w *= v;
  return w;
}

Word& Word::operator*=(const Word& v) {
  // both factors are reduced, so cancellation only happens at the seam
  for (const Letter& l : v.letters_) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  return *this;
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }
Word multiply(const Word& u, const Word& v) { return u * v; }
Word invert(const Word& w) { return w.inverse(); }

Word product(std::span<const Word> factors) {
  Word out;
  for (const Word& f : factors) out *= f;
  return out;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }
Word conj_upper(const Word& b, const Word& a) { return b * a * b.inverse(); }
Word conj_lower(const Word& a, const Word& b) { return b.inverse() * a * b; }

std::vector<long> exponent_vector(const Word& w, std::span<const GeneratorId> alphabet) {
  std::map<GeneratorId, std::size_t> slot;
  for (std::size_t i = 0; i < alphabet.size(); ++i) slot.emplace(alphabet[i], i);
  std::vector<long> v(alphabet.size(), 0);
  for (const Letter& l : w.letters()) {
    auto it = slot.find(l.gen);
    if (it == slot.end()) throw AlphabetError("letter " + to_string(l.gen) + " is not in the alphabet");
    v[it->second] += l.exp;
  }
  return v;
}

Word substitute(const Word& w, const Substitution& image) {
  Word out;
  for (const Letter& l : w.letters()) {
    Word img = image(l.gen);
    out *= (l.exp > 0 ? img : img.inverse());
  }
  return out;
}

Word substitute(const Word& w, const std::map<GeneratorId, Word>& image) {
  return substitute(w, [&image](const GeneratorId& g) {
    auto it = image.find(g);
    if (it == image.end()) throw AlphabetError("no image for generator " + to_string(g));
    return it->second;
  });
}

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::A: return "A";
    case Kind::a: return "a";
    case Kind::b: return "b";
    case Kind::tau: return "t";
    case Kind::c: return "c";
    case Kind::d: return "d";
    case Kind::sigma: return "s";
    case Kind::x: return "x";
  }
  return "?";
}

std::string to_string(const GeneratorId& gen) {
  std::string s = to_string(gen.kind) + "[" + std::to_string(gen.first);
  if (has_two_indices(gen.kind)) s += "," + std::to_string(gen.second);
  return s + "]";
}

std::string to_string(const Letter& letter) {
  return letter.exp > 0 ? to_string(letter.gen) : to_string(letter.gen) + "^-1";
}

std::string to_string(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string s;
  for (const Letter& l : letters) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

std::string to_string(const Word& w) { return to_string(std::span<const Letter>(w.letters())); }

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("expected an integer");
    return value;
  }
  GeneratorId generator() {
    skip_space();
    Kind kind;
    if (text_.substr(pos_, 3) == "tau") {
      kind = Kind::tau;
      pos_ += 3;
    } else {
      switch (peek()) {
        case 'A': kind = Kind::A; break;
        case 'a': kind = Kind::a; break;
        case 'b': kind = Kind::b; break;
        case 't': kind = Kind::tau; break;
        case 'c': kind = Kind::c; break;
        case 'd': kind = Kind::d; break;
        case 's': kind = Kind::sigma; break;
        case 'x': kind = Kind::x; break;
        default: fail("unknown generator kind");
      }
      ++pos_;
    }
    expect('[');
    GeneratorId gen{kind, integer(), 0};
    if (has_two_indices(kind)) {
      expect(',');
      gen.second = integer();
    }
    expect(']');
    try {
      check_well_formed(gen);
    } catch (const AlphabetError& e) {
      fail(e.what());
    }
    return gen;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::size_t pos_ = 0;

 private:
  std::string_view text_;
};

}  // namespace

GeneratorId parse_generator(std::string_view text) {
  Lexer lex(text);
  GeneratorId g = lex.generator();
  if (!lex.done()) lex.fail("trailing characters");
  return g;
}

RawWord parse_raw_word(std::string_view text) {
  Lexer lex(text);
  RawWord out;
  if (lex.done()) return out;
  if (lex.peek() == '1') {
    ++lex.pos_;
    if (!lex.done()) lex.fail("trailing characters after identity");
    return out;
  }
  while (!lex.done()) {
    GeneratorId g = lex.generator();
    int e = 1;
    lex.skip_space();
    if (lex.peek() == '^') {
      ++lex.pos_;
      e = lex.integer();
      if (e == 0) lex.fail("zero exponent");
    }
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out.push_back({g, e < 0 ? -1 : 1});
  }
  return out;
}

Word parse_word(std::string_view text) { return Word(parse_raw_word(text)); }

}  // namespace sbraid
