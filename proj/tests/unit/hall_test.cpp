#include <gtest/gtest.h>

#include <map>

#include "sbraid/hall.hpp"
#include "sbraid/nilpotent.hpp"
#include "support.hpp"

namespace sbraid {
namespace {

using testing::Rng;

// Truncated Magnus series: monomials in noncommuting X_1..X_m of degree <= c.
using Series = std::map<std::vector<int>, Integer>;

Series series_mul(const Series& a, const Series& b, std::size_t c) {
  Series out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > c) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// x -> 1 + X, x^-1 -> 1 - X + X^2 - ...
Series letter_series(int gen, int exp, std::size_t c) {
  Series s{{{}, 1}};
  std::vector<int> mono;
  for (std::size_t d = 1; d <= c; ++d) {
    mono.push_back(gen);
    if (exp > 0) {
      if (d == 1) s[mono] = 1;
    } else {
      s[mono] = d % 2 ? -1 : 1;
    }
  }
  return s;
}

Series magnus(const Word& w, std::size_t c) {
  Series s{{{}, 1}};
  for (const Letter& l : w.letters()) s = series_mul(s, letter_series(l.gen.first - 1, l.exp, c), c);
  return s;
}

Word normal_form_word(const Exponents& e, const HallBasis& basis, const std::vector<Word>& gens) {
  Word w;
  for (const auto& [idx, v] : e) w *= basis.as_word(idx, gens).pow(static_cast<int>(v.get_si()));
  return w;
}

std::vector<Word> gen_words(int m) {
  std::vector<Word> out;
  for (int i = 1; i <= m; ++i) out.emplace_back(GeneratorId::x(i));
  return out;
}

TEST(Hall, Counts) {
  for (int m = 1; m <= 6; ++m) {
    HallBasis b(m, 3);
    EXPECT_EQ(b.weight_count(1), static_cast<std::size_t>(m));
    EXPECT_EQ(b.weight_count(2), static_cast<std::size_t>(m * (m - 1) / 2));
    EXPECT_EQ(Integer(static_cast<long>(b.weight_count(3))), witt_rank(m, 3));
    EXPECT_EQ(b.size(), HallBasis::count(m, 3));
    EXPECT_EQ(HallBasis(m, 2).size(), HallBasis::count(m, 2));
  }
}

TEST(Hall, CollectExamples) {
  HallBasis b(2, 2);
  Collector col(b);
  auto alpha = testing::free_alphabet(2);
  Word x1(GeneratorId::x(1)), x2(GeneratorId::x(2));
  Exponents e = col.collect(x2 * x1, alpha);
  EXPECT_EQ(e, (Exponents{{0, 1}, {1, 1}, {static_cast<std::uint32_t>(b.u(1, 0)), 1}}));
  EXPECT_TRUE(col.collect(x1 * x1.inverse(), alpha).empty());
  EXPECT_TRUE(col.collect(commutator(commutator(x2, x1), x1), alpha).empty());

  HallBasis b3(2, 3);
  Collector col3(b3);
  Exponents w = col3.collect(commutator(commutator(x2, x1), x1), alpha);
  EXPECT_EQ(w, (Exponents{{static_cast<std::uint32_t>(b3.w(1, 0, 0)), 1}}));
}

TEST(HallProperty, MagnusOracle) {
  Rng rng(41);
  for (int m = 2; m <= 3; ++m) {
    for (int c = 1; c <= 3; ++c) {
      HallBasis basis(m, c);
      Collector col(basis);
      auto alpha = testing::free_alphabet(m);
      auto gens = gen_words(m);
      for (int t = 0; t < 150; ++t) {
        Word w = testing::random_word(rng, alpha, 10);
        Exponents e = col.collect(w, alpha);
        ASSERT_EQ(magnus(normal_form_word(e, basis, gens), c), magnus(w, c)) << to_string(w);
      }
    }
  }
}

TEST(HallProperty, CollectIsHomomorphism) {
  Rng rng(42);
  for (int c = 2; c <= 3; ++c) {
    HallBasis basis(4, c);
    Collector col(basis);
    auto alpha = testing::free_alphabet(4);
    for (int t = 0; t < 400; ++t) {
      Word u = testing::random_word(rng, alpha, 14), v = testing::random_word(rng, alpha, 14);
      Exponents cu = col.collect(u, alpha), cv = col.collect(v, alpha);
      ASSERT_EQ(col.collect(u * v, alpha), col.multiply(cu, cv));
      ASSERT_EQ(col.collect(u.inverse(), alpha), col.inverse(cu));
      ASSERT_EQ(col.collect(commutator(u, v), alpha), col.commutator(cu, cv));
      ASSERT_EQ(col.collect(u.pow(3), alpha), col.power(cu, 3));
      ASSERT_EQ(col.collect(u.pow(-2), alpha), col.power(cu, -2));
    }
  }
}

TEST(HallProperty, MultiplyIsAssociative) {
  Rng rng(43);
  HallBasis basis(3, 3);
  Collector col(basis);
  auto alpha = testing::free_alphabet(3);
  for (int t = 0; t < 300; ++t) {
    Exponents a = col.collect(testing::random_word(rng, alpha, 8), alpha);
    Exponents b = col.collect(testing::random_word(rng, alpha, 8), alpha);
    Exponents d = col.collect(testing::random_word(rng, alpha, 8), alpha);
    ASSERT_EQ(col.multiply(col.multiply(a, b), d), col.multiply(a, col.multiply(b, d)));
  }
}

}  // namespace
}  // namespace sbraid
