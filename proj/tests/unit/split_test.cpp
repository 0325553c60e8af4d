#include <gtest/gtest.h>

#include "sbraid/error.hpp"
#include "sbraid/nilpotent.hpp"
#include "sbraid/split.hpp"

namespace sbraid {
namespace {

Word a(int j, int k, int e = 1) { return Word(GeneratorId::a(j, k), e); }
Word b(int j, int k, int e = 1) { return Word(GeneratorId::b(j, k), e); }
Word t(int p, int q, int e = 1) { return Word(GeneratorId::tau(p, q), e); }
Word c(int k) { return Word(GeneratorId::c(k)); }
Word d(int k) { return Word(GeneratorId::d(k)); }

std::size_t index_of(const std::vector<GeneratorId>& basis, const GeneratorId& x) {
  return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), x) - basis.begin());
}

TEST(Split, KernelAlphabet) {
  for (int n = 2; n <= 5; ++n)
    for (int g = 1; g <= 3; ++g)
      EXPECT_EQ(kernel_alphabet(n, g).size(), static_cast<std::size_t>(2 * g * (n - 1) + n * (n - 1) / 2));
  EXPECT_EQ(kernel_alphabet(2, 1), (std::vector<GeneratorId>{GeneratorId::a(2, 1), GeneratorId::b(2, 1),
                                                             GeneratorId::tau(1, 2)}));
}

TEST(Split, Projection) {
  EXPECT_EQ(project(a(1, 1), 2, 1), c(1));
  EXPECT_TRUE(project(t(1, 2), 2, 1).is_identity());
  EXPECT_EQ(project(a(2, 1) * b(1, 1), 2, 1), d(1));
  EXPECT_THROW(project(c(1), 2, 1), AlphabetError);
}

TEST(Split, Section) {
  EXPECT_EQ(section(d(1), 2, 1), b(1, 1));
  EXPECT_EQ(section(c(1), 2, 1), a(1, 1) * a(2, 1) * t(1, 2));
  EXPECT_EQ(section(c(1), 3, 2), t(1, 2) * t(1, 3) * a(1, 1) * t(1, 3, -1) * t(1, 2, -1));
  EXPECT_THROW(section(c(3), 3, 2), AlphabetError);
  for (int n = 2; n <= 5; ++n)
    for (int g = 1; g <= 3; ++g)
      for (int k = 1; k <= g; ++k) {
        EXPECT_EQ(project(section(c(k), n, g), n, g), c(k));
        EXPECT_EQ(project(section(d(k), n, g), n, g), d(k));
      }
}

TEST(Split, ForwardRuleExamples) {
  EXPECT_EQ(forward_rule(GeneratorId::a(1, 1), GeneratorId::a(2, 1), 2, 1).image, t(1, 2, -1) * a(2, 1) * t(1, 2));
  EXPECT_EQ(forward_rule(GeneratorId::b(1, 1), GeneratorId::a(2, 1), 2, 1).image, a(2, 1) * t(1, 2));
  auto r = forward_rule(GeneratorId::tau(1, 3), GeneratorId::tau(2, 4), 4, 1);
  EXPECT_EQ(r.image, conj_upper(commutator(t(3, 4), t(1, 4)), t(2, 4)));
  EXPECT_EQ(r.instance.family, Family::IIItau);
  EXPECT_THROW(forward_rule(GeneratorId::a(2, 1), GeneratorId::a(2, 1), 3, 1), ParameterError);
  EXPECT_THROW(forward_rule(GeneratorId::a(1, 1), GeneratorId::a(1, 1), 3, 1), ParameterError);
}

TEST(Split, TauConjugatorsResolveOrReport) {
  for (int n = 2; n <= 4; ++n) {
    for (int dd = 2; dd <= n; ++dd) {
      for (const GeneratorId& h : kernel_alphabet(n, 1)) {
        try {
          auto r = forward_rule(GeneratorId::tau(1, dd), h, n, 1);
          EXPECT_EQ(r.instance.lhs, conj_upper(t(1, dd), Word(h)));
        } catch (const MatchError&) {
        }
      }
    }
  }
}

TEST(Split, ActionMatrixExamples) {
  auto basis = kernel_alphabet(2, 1);
  const std::size_t ia = index_of(basis, GeneratorId::a(2, 1)), ib = index_of(basis, GeneratorId::b(2, 1)),
                    it = index_of(basis, GeneratorId::tau(1, 2));
  ActionMatrix mb = action_matrix({GeneratorId::b(1, 1), 1}, 2, 1);
  ActionMatrix expect_b = ActionMatrix::identity(basis, mb.letter());
  expect_b.at(it, ia) = 1;
  EXPECT_EQ(mb, expect_b);
  ActionMatrix ma = action_matrix({GeneratorId::a(1, 1), 1}, 2, 1);
  ActionMatrix expect_a = ActionMatrix::identity(basis, ma.letter());
  expect_a.at(it, ib) = -1;
  EXPECT_EQ(ma, expect_a);
  EXPECT_TRUE(action_matrix({GeneratorId::tau(1, 2), 1}, 2, 1).is_identity());
  EXPECT_TRUE(action_matrix({GeneratorId::a(2, 1), -1}, 2, 1).is_identity());
  EXPECT_THROW(action_matrix({GeneratorId::c(1), 1}, 2, 1), AlphabetError);
}

TEST(SplitProperty, MatricesAreUnipotentAndInvertible) {
  for (int n = 2; n <= 4; ++n) {
    for (int g = 1; g <= 2; ++g) {
      for (const GeneratorId& x : strand_generators(n, g)) {
        ActionMatrix m = action_matrix({x, 1}, n, g), mi = action_matrix({x, -1}, n, g);
        ASSERT_TRUE(m.has_unipotent_form());
        ASSERT_TRUE(mi.has_unipotent_form());
        ASSERT_TRUE((m * mi).is_identity());
        ASSERT_TRUE((m * m * mi).has_unipotent_form());
      }
    }
  }
}

TEST(SplitProperty, ForwardRulesAgreeInClassTwoQuotient) {
  for (int n = 2; n <= 4; ++n) {
    for (int g = 1; g <= 2; ++g) {
      const auto& nq = cached_quotient(Preset::PureClosedAbt, n, g, 2);
      for (int k = 1; k <= g; ++k) {
        for (const GeneratorId& x : {GeneratorId::a(1, k), GeneratorId::b(1, k)}) {
          for (const GeneratorId& h : kernel_alphabet(n, g)) {
            auto r = forward_rule(x, h, n, g);
            ASSERT_EQ(nq.evaluate(conj_upper(Word(x), Word(h))).exponents, nq.evaluate(r.image).exponents);
          }
        }
      }
    }
  }
}

TEST(Split, AlmostDirect) {
  for (auto [n, g] : {std::pair{2, 1}, {3, 2}, {4, 1}}) {
    auto rep = almost_direct_check(n, g);
    EXPECT_TRUE(rep.pass) << n << "," << g << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.pairs_checked, 2 * static_cast<std::size_t>(g) * kernel_alphabet(n, g).size());
    EXPECT_TRUE(rep.tau_gamma2.pass);
  }
  EXPECT_THROW(almost_direct_check(1, 1), ParameterError);
}

TEST(Split, SectionRelator) {
  EXPECT_TRUE(verify_section_relator(2, 1).pass);
  auto r42 = verify_section_relator(4, 2);
  EXPECT_TRUE(r42.pass);
  ASSERT_EQ(r42.quotient_trivial.size(), 1u);
  EXPECT_TRUE(r42.quotient_trivial[0].second);
  EXPECT_TRUE(verify_section_relator(2, 1, {3, std::nullopt}).pass);
  for (int i = 1; i <= 2; ++i) {
    auto m = verify_section_relator(3, 2, {2, i});
    EXPECT_FALSE(m.pass);
    EXPECT_FALSE(m.derivation_pass);
    EXPECT_FALSE(m.quotient_trivial[0].second);
  }
  EXPECT_EQ(section_relator_word(2).size(), 8u);
  EXPECT_EQ(section_relator_word(2, 1).size(), 7u);
  EXPECT_THROW(section_relator_word(2, 3), ParameterError);
  EXPECT_THROW(verify_section_relator(2, 1, {4, std::nullopt}), ParameterError);
  EXPECT_THROW(verify_section_relator(1, 1), ParameterError);
}

}  // namespace
}  // namespace sbraid
