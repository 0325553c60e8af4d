#include <gtest/gtest.h>

#include "sbraid/error.hpp"
#include "sbraid/nilpotent.hpp"
#include "sbraid/split.hpp"
#include "support.hpp"

namespace sbraid {
namespace {

using testing::Rng;

TEST(Witt, Examples) {
  EXPECT_EQ(witt_rank(2, 1), 2);
  EXPECT_EQ(witt_rank(2, 3), 2);
  EXPECT_EQ(witt_rank(3, 2), 3);
  EXPECT_EQ(witt_rank(2, 6), 9);
  EXPECT_THROW(witt_rank(0, 2), ParameterError);
}

TEST(Quotient, FreeGroupsMatchWitt) {
  for (int m = 1; m <= 4; ++m) {
    auto q = lcs_quotients(build_presentation(Preset::Free, m, 0), 3);
    ASSERT_EQ(q.pieces.size(), 3u);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(Integer(q.pieces[k - 1].rank), witt_rank(m, k)) << "m=" << m << " k=" << k;
      EXPECT_TRUE(q.pieces[k - 1].torsion.empty());
    }
  }
  auto f2 = lcs_quotients(build_presentation(Preset::Free, 2, 0), 3);
  EXPECT_EQ(f2.rational_ranks, (std::vector<long>{2, 1, 2}));
}

TEST(Quotient, BraidGroupsStabilize) {
  for (int n : {3, 4, 5}) {
    auto q = lcs_quotients(build_presentation(Preset::ArtinBraid, n, 0), 2);
    EXPECT_EQ(q.pieces[0].rank, 1);
    EXPECT_TRUE(q.pieces[0].torsion.empty());
    EXPECT_EQ(q.pieces[1].rank, 0);
    EXPECT_TRUE(q.pieces[1].torsion.empty());
    EXPECT_EQ(q.stabilizes_at, 2);
  }
  auto q3 = lcs_quotients(build_presentation(Preset::ArtinBraid, 4, 0), 3);
  EXPECT_EQ(q3.rational_ranks, (std::vector<long>{1, 0, 0}));
}

// P_n is an iterated almost-direct product of free groups F_1, ..., F_{n-1},
// so its graded ranks are sums of Witt ranks.
TEST(Quotient, ArtinPureBraidRanksAreWittSums) {
  for (int n = 2; n <= 4; ++n) {
    auto q = lcs_quotients(build_presentation(Preset::ArtinPureBraid, n, 0), 3);
    for (int k = 1; k <= 3; ++k) {
      Integer expect = 0;
      for (int m = 1; m < n; ++m) expect += witt_rank(m, k);
      EXPECT_EQ(Integer(q.pieces[k - 1].rank), expect) << "n=" << n << " k=" << k;
      EXPECT_TRUE(q.pieces[k - 1].torsion.empty());
    }
  }
}

TEST(Quotient, SurfaceGroups) {
  auto q = lcs_quotients(build_presentation(Preset::SurfaceGroup, 0, 1), 2);
  EXPECT_EQ(q.pieces[0].rank, 2);
  EXPECT_TRUE(q.pieces[1].torsion.empty());
  EXPECT_EQ(q.pieces[1].rank, 0);
  // closed surface group of genus 2: Gamma_2/Gamma_3 has rank C(4,2) - 1
  auto q2 = lcs_quotients(build_presentation(Preset::SurfaceGroup, 0, 2), 2);
  EXPECT_EQ(q2.rational_ranks, (std::vector<long>{4, 5}));
  for (int g = 1; g <= 4; ++g) {
    auto ab = abelian_invariants(build_presentation(Preset::SurfaceGroup, 0, g));
    EXPECT_EQ(ab.rank, 2 * g);
    EXPECT_TRUE(ab.torsion.empty());
  }
}

TEST(Quotient, Abelianizations) {
  auto b3 = abelian_invariants(build_presentation(Preset::ArtinBraid, 3, 0));
  EXPECT_EQ(b3.rank, 1);
  EXPECT_TRUE(b3.torsion.empty());
  for (int n = 2; n <= 5; ++n) {
    for (int g = 1; g <= 3; ++g) {
      auto ab = abelian_invariants(build_presentation(Preset::PureClosedAbt, n, g));
      EXPECT_EQ(ab.rank, 2 * n * g) << n << "," << g;
      EXPECT_TRUE(ab.torsion.empty());
      auto lcs = cached_quotient(Preset::PureClosedAbt, n, g, 1).quotients();
      EXPECT_EQ(lcs.pieces[0].rank, ab.rank);
    }
  }
}

TEST(Quotient, Evaluate) {
  const auto& nq = cached_quotient(Preset::PureClosedAbt, 2, 1, 2);
  auto p = build_presentation(Preset::PureClosedAbt, 2, 1);
  for (const Word& r : p.relators) EXPECT_TRUE(nq.is_trivial(r));
  EXPECT_TRUE(nq.is_trivial(section(Word(section_relator_word(1)), 2, 1)));
  EXPECT_FALSE(nq.is_trivial(Word(GeneratorId::a(1, 1))));

  NilpotentQuotient free(build_presentation(Preset::Free, 2, 0), 2);
  EXPECT_FALSE(free.is_trivial(Word(GeneratorId::x(1))));
  EXPECT_TRUE(free.is_trivial(Word()));
}

TEST(QuotientProperty, RelatorsTrivialInOwnClassTwoQuotient) {
  for (int n = 2; n <= 4; ++n) {
    for (int g = 1; g <= 2; ++g) {
      const auto& nq = cached_quotient(Preset::PureClosedAbt, n, g, 2);
      for (const Word& r : build_presentation(Preset::PureClosedAbt, n, g).relators) ASSERT_TRUE(nq.is_trivial(r));
    }
  }
}

TEST(QuotientProperty, EvaluateIsCanonicalModuloNormalClosure) {
  Rng rng(51);
  for (int g = 1; g <= 2; ++g) {
    auto p = build_presentation(Preset::PureClosedAbt, 3, g);
    const auto& nq = cached_quotient(Preset::PureClosedAbt, 3, g, 2);
    for (int t = 0; t < 200; ++t) {
      Word w = testing::random_word(rng, p.generators, 10);
      Word h = testing::random_word(rng, p.generators, 6);
      const Word& r = p.relators[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(p.relators.size()) - 1))];
      Word w2 = w * conj_upper(h, r.pow(testing::uniform(rng, 0, 1) ? 1 : -1));
      ASSERT_EQ(nq.evaluate(w).exponents, nq.evaluate(w2).exponents);
    }
  }
}

// The literal point presentation loses ER2 with k = g (ER2A excludes r = 2g);
// the boundary reading restores agreement with the strand one.
TEST(PointReadings, ClassTwoComparisonWithStrandPresentation) {
  for (int n = 2; n <= 4; ++n) {
    for (int g = 1; g <= 2; ++g) {
      auto strand = build_presentation(Preset::PureClosedAbt, n, g);
      const auto& sq = cached_quotient(Preset::PureClosedAbt, n, g, 2);
      long strand_rank = sq.quotients().pieces[1].rank;
      for (PointReading reading : {PointReading::Literal, PointReading::Boundary}) {
        auto point = build_presentation(Preset::PureClosedA, n, g, reading);
        NilpotentQuotient pq(point, 2);
        auto pieces = pq.quotients().pieces;
        int lost = 0;
        for (const Word& r : strand.relators) lost += pq.is_trivial(translate_to_point(r, n, g)) ? 0 : 1;
        int extra = 0;
        for (const Word& r : point.relators) extra += sq.is_trivial(translate_to_strand(r, n, g)) ? 0 : 1;
        EXPECT_EQ(extra, 0) << "point relators are consequences of the strand ones";
        EXPECT_EQ(pieces[0].rank, 2 * n * g);
        if (reading == PointReading::Boundary) {
          EXPECT_EQ(lost, 0) << n << "," << g;
          EXPECT_EQ(pieces[1].rank, strand_rank) << n << "," << g;
        } else {
          EXPECT_GT(lost, 0) << n << "," << g;
          EXPECT_GT(pieces[1].rank, strand_rank) << n << "," << g;
        }
      }
    }
  }
}

TEST(Quotient, Limits) {
  auto p = build_presentation(Preset::Free, 5, 0);
  EXPECT_THROW(NilpotentQuotient(p, 3, ResourceLimits{10, 1000}), ResourceLimitError);
  EXPECT_THROW(NilpotentQuotient(p, 4), ParameterError);
  EXPECT_THROW(NilpotentQuotient(p, 0), ParameterError);
  auto big = build_presentation(Preset::PureClosedAbt, 4, 2);
  EXPECT_THROW(NilpotentQuotient(big, 2, ResourceLimits{100000, 5}), ResourceLimitError);
}

}  // namespace
}  // namespace sbraid
