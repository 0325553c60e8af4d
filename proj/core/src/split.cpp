#include "sbraid/split.hpp"

#include <algorithm>
#include <limits>

#include "sbraid/error.hpp"
#include "sbraid/nilpotent.hpp"
#include "sbraid/relation_index.hpp"

namespace sbraid {

namespace {

void require_grid(int n, int g) {
  if (n < 2 || g < 1) {
    throw ParameterError("the splitting needs n >= 2 and g >= 1 (got n=" + std::to_string(n) +
                         ", g=" + std::to_string(g) + ")");
  }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimitError("action matrix entry overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimitError("action matrix entry overflow");
  return r;
}

}  // namespace

std::vector<GeneratorId> kernel_alphabet(int n, int g) {
  std::vector<GeneratorId> out;
  for (const GeneratorId& x : strand_generators(n, g)) {
    if (x.kind == Kind::tau || x.first >= 2) out.push_back(x);
  }
  return out;
}

bool is_tau_first(const GeneratorId& gen) { return gen.kind == Kind::tau && gen.first == 1; }

bool is_kernel_generator(const GeneratorId& gen, int n, int g) {
  return is_strand_generator(gen, n, g) && (gen.kind == Kind::tau || gen.first >= 2);
}

Word project(const Word& w, int n, int g) {
  return substitute(w, [n, g](const GeneratorId& x) {
    if (!is_strand_generator(x, n, g)) {
      throw AlphabetError(to_string(x) + " is not a strand generator for n=" + std::to_string(n) +
                          ", g=" + std::to_string(g));
    }
    if (x.kind == Kind::a && x.first == 1) return Word(GeneratorId::c(x.second));
    if (x.kind == Kind::b && x.first == 1) return Word(GeneratorId::d(x.second));
    return Word();
  });
}

Word section_image(const GeneratorId& gen, int n, int g) {
  require_grid(n, g);
  if ((gen.kind != Kind::c && gen.kind != Kind::d) || gen.first < 1 || gen.first > g) {
    throw AlphabetError(to_string(gen) + " is not a generator of the surface group of genus " + std::to_string(g));
  }
  const Word t = tee(1, n);
  const int k = gen.first;
  if (k < g) {
    Word x(gen.kind == Kind::c ? GeneratorId::a(1, k) : GeneratorId::b(1, k));
    return conj_upper(t, x);
  }
  if (gen.kind == Kind::d) return Word(GeneratorId::b(1, g));
  return strand_product(1, 1, n, g) * t;
}

Word section(const Word& w, int n, int g) {
  return substitute(w, [n, g](const GeneratorId& x) { return section_image(x, n, g); });
}

ForwardRule forward_rule(const GeneratorId& conjugator, const GeneratorId& target, int n, int g) {
  require_grid(n, g);
  bool conj_ok = is_strand_generator(conjugator, n, g) && conjugator.first == 1;
  if (!conj_ok) {
    throw ParameterError(to_string(conjugator) + " is not one of a[1,k], b[1,k], t[1,d]");
  }
  if (!is_kernel_generator(target, n, g)) {
    throw ParameterError(to_string(target) + " is not in the kernel alphabet");
  }
  const auto& index = RelationIndex::get(Preset::PureClosedAbt, n, g);
  auto hits = index.with_lhs(conj_upper(Word(conjugator), Word(target)));
  if (hits.size() != 1) {
    throw MatchError(std::to_string(hits.size()) + " relations rewrite ^{" + to_string(conjugator) + "}" +
                     to_string(target));
  }
  return ForwardRule{conjugator, target, *hits.front(), hits.front()->rhs};
}

ActionMatrix::ActionMatrix(std::vector<GeneratorId> basis, Letter letter)
    : basis_(std::move(basis)), letter_(letter), entries_(basis_.size() * basis_.size(), 0) {}

ActionMatrix ActionMatrix::identity(std::vector<GeneratorId> basis, Letter letter) {
  ActionMatrix m(std::move(basis), letter);
  for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = 1;
  return m;
}

ActionMatrix ActionMatrix::operator*(const ActionMatrix& other) const {
  if (basis_ != other.basis_) throw ParameterError("action matrices over different bases");
  ActionMatrix out(basis_, letter_);
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      std::int64_t x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (other.at(k, j) != 0) out.at(i, j) = checked_add(out.at(i, j), checked_mul(x, other.at(k, j)));
      }
    }
  }
  return out;
}

bool ActionMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool ActionMatrix::deviation_in_tau_first_rows() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_tau_first(basis_[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  }
  return true;
}

bool ActionMatrix::has_unipotent_form() const {
  if (!deviation_in_tau_first_rows()) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!is_tau_first(basis_[j])) continue;
    for (std::size_t i = 0; i < dim(); ++i)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  }
  return true;
}

ActionMatrix action_matrix(const Letter& letter, int n, int g) {
  require_grid(n, g);
  const GeneratorId& x = letter.gen;
  if (!is_strand_generator(x, n, g)) {
    throw AlphabetError(to_string(x) + " is not a strand generator for n=" + std::to_string(n) +
                        ", g=" + std::to_string(g));
  }
  auto basis = kernel_alphabet(n, g);
  ActionMatrix m = ActionMatrix::identity(basis, letter);
  if (is_kernel_generator(x, n, g)) return m;  // inner on the kernel
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto ev = exponent_vector(forward_rule(x, basis[j], n, g).image, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::int64_t nij = ev[i] - (i == j ? 1 : 0);
      m.at(i, j) = (i == j ? 1 : 0) + (letter.exp > 0 ? nij : -nij);
    }
  }
  return m;
}

AlmostDirectReport almost_direct_check(int n, int g) {
  require_grid(n, g);
  AlmostDirectReport rep;
  rep.n = n;
  rep.g = g;
  const auto basis = kernel_alphabet(n, g);
  const auto& index = RelationIndex::get(Preset::PureClosedAbt, n, g);

  for (int k = 1; k <= g; ++k) {
    for (const GeneratorId& x : {GeneratorId::a(1, k), GeneratorId::b(1, k)}) {
      for (const GeneratorId& h : basis) {
        ++rep.pairs_checked;
        auto hits = index.with_lhs(conj_upper(Word(x), Word(h)));
        if (hits.size() != 1) {
          rep.totality = false;
          rep.failures.push_back(std::to_string(hits.size()) + " rules for ^{" + to_string(x) + "}" + to_string(h));
          continue;
        }
        auto diff = exponent_vector(hits.front()->rhs, basis);
        auto self = exponent_vector(Word(h), basis);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (diff[i] != self[i] && !is_tau_first(basis[i])) {
            rep.balance = false;
            rep.failures.push_back("rule " + hits.front()->label() + " moves coordinate " + to_string(basis[i]));
          }
        }
      }
    }
  }

  for (const GeneratorId& x : strand_generators(n, g)) {
    for (int e : {1, -1}) {
      ActionMatrix m = action_matrix(Letter{x, e}, n, g);
      if (!m.has_unipotent_form()) {
        rep.matrix_form = false;
        rep.failures.push_back("matrix of " + to_string(Letter{x, e}) + " is not of the form I + N");
      }
    }
  }

  for (int k = 1; k <= g; ++k) {
    for (const GeneratorId& c : {GeneratorId::c(k), GeneratorId::d(k)}) {
      Word s = section_image(c, n, g);
      ActionMatrix prod = ActionMatrix::identity(basis, Letter{c, 1});
      for (const Letter& l : s.letters()) prod = prod * action_matrix(l, n, g);
      if (!prod.deviation_in_tau_first_rows() || !prod.has_unipotent_form()) {
        rep.section_support = false;
        rep.failures.push_back("action of s(" + to_string(c) + ") moves coordinates outside tau[1,*]");
      }
    }
  }

  rep.tau_gamma2 = builtin_suite(Suite::TauGamma2, n, g);
  if (!rep.tau_gamma2.pass) rep.failures.push_back("tau-gamma2 witnesses failed");
  rep.pass = rep.totality && rep.balance && rep.matrix_form && rep.section_support && rep.tau_gamma2.pass;
  return rep;
}

RawWord section_relator_word(int g, std::optional<int> omit_section_c) {
  RawWord w = surface_relator_letters(g);
  if (omit_section_c) {
    int i = *omit_section_c;
    if (i < 1 || i > g) throw ParameterError("mutation index must lie in [1, g]");
    w.erase(w.begin() + 4 * (i - 1));
  }
  return w;
}

SectionRelatorReport verify_section_relator(int n, int g, const SectionRelatorOptions& options) {
  require_grid(n, g);
  if (options.max_class < 2 || options.max_class > 3) throw ParameterError("max_class must be 2 or 3");
  SectionRelatorReport rep;
  rep.n = n;
  rep.g = g;
  rep.relator = section_relator_word(g, options.omit_section_c);
  rep.image = section(Word(rep.relator), n, g);

  DerivationScript script = splitting_script(n, g);
  script.start = rep.relator;
  rep.derivation = check_derivation(script);
  rep.derivation_pass = rep.derivation.pass;

  bool all_trivial = true;
  for (int c = 2; c <= options.max_class; ++c) {
    bool t = cached_quotient(Preset::PureClosedAbt, n, g, c).is_trivial(rep.image);
    rep.quotient_trivial.emplace_back(c, t);
    all_trivial = all_trivial && t;
  }
  rep.pass = rep.derivation_pass && all_trivial;
  return rep;
}

}  // namespace sbraid
