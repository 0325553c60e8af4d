#include "sbraid/hall.hpp"

#include <algorithm>

#include "sbraid/error.hpp"

namespace sbraid {

void add_to(Exponents& e, std::uint32_t idx, const Integer& v) {
  if (v == 0) return;
  auto [it, inserted] = e.try_emplace(idx, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) e.erase(it);
  }
}

std::size_t HallBasis::count(int m, int c) {
  std::size_t mm = static_cast<std::size_t>(m);
  std::size_t n = mm;
  if (c >= 2) n += mm * (mm - 1) / 2;
  if (c >= 3) n += (mm * mm * mm - mm) / 3;
  return n;
}

HallBasis::HallBasis(int generators, int nilpotency_class) : m_(generators), c_(nilpotency_class) {
  if (m_ < 0) throw ParameterError("negative generator count");
  if (c_ < 1 || c_ > 3) throw ParameterError("nilpotency class must be 1, 2 or 3");
  elements_.reserve(count(m_, c_));
  for (int j = 0; j < m_; ++j) elements_.push_back({1, j, -1, -1});
  if (c_ >= 2) {
    for (int j = 0; j < m_; ++j)
      for (int i = 0; i < j; ++i) elements_.push_back({2, j, i, -1});
  }
  if (c_ >= 3) {
    for (int j = 0; j < m_; ++j) {
      for (int i = 0; i < j; ++i) {
        w_offset_.push_back(elements_.size());
        for (int k = i; k < m_; ++k) elements_.push_back({3, j, i, k});
      }
    }
  }
}

std::size_t HallBasis::weight_begin(int w) const {
  std::size_t mm = static_cast<std::size_t>(m_);
  switch (w) {
    case 1: return 0;
    case 2: return std::min(size(), mm);
    case 3: return std::min(size(), mm + mm * (mm - 1) / 2);
    default: return size();
  }
}

std::size_t HallBasis::weight_end(int w) const { return w >= c_ ? size() : weight_begin(w + 1); }

std::size_t HallBasis::u(int j, int i) const {
  return static_cast<std::size_t>(m_) + static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 +
         static_cast<std::size_t>(i);
}

std::size_t HallBasis::w(int j, int i, int k) const {
  std::size_t pair = static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
  return w_offset_[pair] + static_cast<std::size_t>(k - i);
}

std::string HallBasis::label(std::size_t idx, std::span<const std::string> names) const {
  const Element& e = elements_.at(idx);
  switch (e.weight) {
    case 1: return names[e.j];
    case 2: return "[" + names[e.j] + "," + names[e.i] + "]";
    default: return "[[" + names[e.j] + "," + names[e.i] + "]," + names[e.k] + "]";
  }
}

Word HallBasis::as_word(std::size_t idx, std::span<const Word> gens) const {
  const Element& e = elements_.at(idx);
  switch (e.weight) {
    case 1: return gens[e.j];
    case 2: return commutator(gens[e.j], gens[e.i]);
    default: return commutator(commutator(gens[e.j], gens[e.i]), gens[e.k]);
  }
}

void Collector::add_u_comm_x(Exponents& out, int j, int i, int k, const Integer& f) const {
  if (k >= i) {
    add_to(out, static_cast<std::uint32_t>(basis_.w(j, i, k)), f);
  } else {
    // Jacobi: [[x_j,x_i],x_k] = [[x_j,x_k],x_i] - [[x_i,x_k],x_j] for k < i < j
    add_to(out, static_cast<std::uint32_t>(basis_.w(j, k, i)), f);
    add_to(out, static_cast<std::uint32_t>(basis_.w(i, k, j)), -f);
  }
}

void Collector::mul_gen(Exponents& g, int k, const Integer& e) const {
  if (e == 0) return;
  const int c = basis_.nilpotency_class();
  const auto m = static_cast<std::uint32_t>(basis_.generators());
  if (c >= 2) {
    Exponents higher;
    if (c >= 3) {
      // pushing x_k^e left past the weight-2 part
      auto lo = g.lower_bound(static_cast<std::uint32_t>(basis_.weight_begin(2)));
      auto hi = g.lower_bound(static_cast<std::uint32_t>(basis_.weight_end(2)));
      for (auto it = lo; it != hi; ++it) {
        const auto& el = basis_.element(it->first);
        add_u_comm_x(higher, el.j, el.i, k, it->second * e);
      }
    }
    // [x_{k+1}^{a_{k+1}} ... x_m^{a_m}, x_k^e], accumulated left to right
    Exponents acc2;
    for (auto it = g.upper_bound(static_cast<std::uint32_t>(k)); it != g.end() && it->first < m; ++it) {
      const int j = static_cast<int>(it->first);
      const Integer& a = it->second;
      if (c >= 3) {
        for (const auto& [ui, v] : acc2) {
          const auto& el = basis_.element(ui);
          add_u_comm_x(higher, el.j, el.i, j, v * a);
        }
        Integer ca2 = a * (a - 1) / 2;
        Integer ce2 = e * (e - 1) / 2;
        add_to(higher, static_cast<std::uint32_t>(basis_.w(j, k, j)), e * ca2);
        add_to(higher, static_cast<std::uint32_t>(basis_.w(j, k, k)), a * ce2);
      }
      add_to(acc2, static_cast<std::uint32_t>(basis_.u(j, k)), a * e);
    }
    for (const auto& [idx, v] : acc2) add_to(g, idx, v);
    for (const auto& [idx, v] : higher) add_to(g, idx, v);
  }
  add_to(g, static_cast<std::uint32_t>(k), e);
}

Exponents Collector::multiply(const Exponents& a, const Exponents& b) const {
  Exponents r = a;
  const auto m = static_cast<std::uint32_t>(basis_.generators());
  auto it = b.begin();
  for (; it != b.end() && it->first < m; ++it) mul_gen(r, static_cast<int>(it->first), it->second);
  for (; it != b.end(); ++it) add_to(r, it->first, it->second);
  return r;
}

Exponents Collector::inverse(const Exponents& a) const {
  Exponents r;
  const auto m = static_cast<std::uint32_t>(basis_.generators());
  for (auto it = a.lower_bound(m); it != a.end(); ++it) r.emplace(it->first, -it->second);
  auto end = a.lower_bound(m);
  for (auto it = std::make_reverse_iterator(end); it != a.rend(); ++it) {
    mul_gen(r, static_cast<int>(it->first), -it->second);
  }
  return r;
}

Exponents Collector::power(const Exponents& a, Integer e) const {
  if (e < 0) return power(inverse(a), -e);
  Exponents result;
  Exponents base = a;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Exponents Collector::commutator(const Exponents& a, const Exponents& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Exponents Collector::collect(const Word& w, std::span<const GeneratorId> alphabet) const {
  const bool sorted = std::is_sorted(alphabet.begin(), alphabet.end());
  Exponents g;
  for (const Letter& l : w.letters()) {
    std::size_t idx;
    if (sorted) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), l.gen);
      if (it == alphabet.end() || *it != l.gen) throw AlphabetError("letter " + to_string(l.gen) + " is not in the alphabet");
      idx = static_cast<std::size_t>(it - alphabet.begin());
    } else {
      auto it = std::find(alphabet.begin(), alphabet.end(), l.gen);
      if (it == alphabet.end()) throw AlphabetError("letter " + to_string(l.gen) + " is not in the alphabet");
      idx = static_cast<std::size_t>(it - alphabet.begin());
    }
    mul_gen(g, static_cast<int>(idx), l.exp);
  }
  return g;
}

std::vector<Integer> CollectedWord::dense() const {
  std::vector<Integer> v(basis ? basis->size() : 0);
  for (const auto& [i, x] : exponents) v[i] = x;
  return v;
}

CollectedWord hall_collect(const Word& w, const HallBasis& basis, std::span<const GeneratorId> alphabet) {
  if (alphabet.size() != static_cast<std::size_t>(basis.generators())) {
    throw ParameterError("alphabet size does not match the Hall basis");
  }
  return {&basis, Collector(basis).collect(w, alphabet)};
}

}  // namespace sbraid
