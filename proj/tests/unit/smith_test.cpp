#include <gtest/gtest.h>

#include <functional>

#include "sbraid/lattice.hpp"
#include "sbraid/smith.hpp"
#include "support.hpp"

namespace sbraid {
namespace {

using testing::Rng;

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

void expect_smith_postconditions(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  ASSERT_EQ(s.U * m * s.V, s.D);
  ASSERT_TRUE(is_unimodular(s.U));
  ASSERT_TRUE(is_unimodular(s.V));
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < s.D.rows(); ++i) {
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j) ASSERT_EQ(s.D(i, j), 0);
    }
    if (i >= s.D.cols()) continue;
    const Integer& d = s.D(i, i);
    ASSERT_GE(d, 0);
    if (d == 0) {
      zero_seen = true;
      continue;
    }
    ASSERT_FALSE(zero_seen) << "nonzero after zero on the diagonal";
    ASSERT_TRUE(mpz_divisible_p(d.get_mpz_t(), prev.get_mpz_t()));
    prev = d;
  }
}

// gcd of all k x k minors, by brute force over row and column subsets.
Integer minors_gcd(const IntMatrix& m, std::size_t k) {
  Integer acc = 0;
  std::vector<std::size_t> rs, cs;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
    if (rs.size() == k) return pick_cols(0);
    for (std::size_t i = from; i < m.rows(); ++i) {
      rs.push_back(i);
      pick_rows(i + 1);
      rs.pop_back();
    }
  };
  pick_cols = [&](std::size_t from) {
    if (cs.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      Integer d = determinant(sub);
      mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = from; j < m.cols(); ++j) {
      cs.push_back(j);
      pick_cols(j + 1);
      cs.pop_back();
    }
  };
  pick_rows(0);
  return acc;
}

TEST(Smith, Examples) {
  auto s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  EXPECT_EQ(s.D, from_rows({{2, 0}, {0, 4}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).D, IntMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).D, IntMatrix(2, 3));
  EXPECT_EQ(invariant_factors(from_rows({{2, 4}, {6, 8}})), (std::vector<Integer>{2, 4}));
  EXPECT_TRUE(invariant_factors(IntMatrix(0, 0)).empty());
}

TEST(Smith, Determinant) {
  EXPECT_EQ(determinant(from_rows({{2, 4}, {6, 8}})), -8);
  EXPECT_EQ(determinant(from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 0);
  EXPECT_EQ(determinant(from_rows({{0, 0, 2}, {0, 3, 0}, {5, 0, 0}})), -30);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(SmithProperty, DiagonalMatchesMinorsGcd) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    std::size_t c = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    IntMatrix m = testing::random_matrix(rng, r, c, 9);
    SmithForm s = smith_normal_form(m);
    Integer prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prefix *= s.D(k - 1, k - 1);
      ASSERT_EQ(prefix, minors_gcd(m, k)) << "k=" << k;
    }
  }
}

TEST(SmithProperty, PostconditionsOnRandomMatrices) {
  Rng rng(32);
  for (int t = 0; t < 400; ++t) {
    std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 0, 12));
    std::size_t c = static_cast<std::size_t>(testing::uniform(rng, 0, 12));
    expect_smith_postconditions(testing::random_matrix(rng, r, c, 50));
  }
  // low rank products force repeated invariant factors
  for (int t = 0; t < 50; ++t) {
    IntMatrix a = testing::random_matrix(rng, 8, 3, 6), b = testing::random_matrix(rng, 3, 8, 6);
    expect_smith_postconditions(a * b);
  }
}

TEST(Lattice, QuotientInvariants) {
  // Z^3 / <(2,0,0), (0,4,6)>  =  Z/2 + Z/2 + Z
  std::vector<SparseVector> rows{{{0, 2}}, {{1, 4}, {2, 6}}};
  auto inv = quotient_invariants(rows, 3);
  EXPECT_EQ(inv.rank, 1);
  EXPECT_EQ(inv.torsion, (std::vector<Integer>{2, 2}));
  EXPECT_TRUE(quotient_invariants({{{0, 1}}, {{1, -1}}}, 2).trivial());
  EXPECT_EQ(quotient_invariants({}, 4).rank, 4);
}

TEST(LatticeProperty, AgreesWithDenseSmith) {
  Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 0, 10));
    std::size_t c = static_cast<std::size_t>(testing::uniform(rng, 1, 10));
    IntMatrix m = testing::random_matrix(rng, r, c, 4);
    std::vector<SparseVector> rows(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (m(i, j) != 0) rows[i][static_cast<std::uint32_t>(j)] = m(i, j);
    auto inv = quotient_invariants(rows, c);
    auto f = invariant_factors(m);
    std::vector<Integer> torsion;
    for (const Integer& d : f)
      if (d > 1) torsion.push_back(d);
    ASSERT_EQ(inv.rank, static_cast<long>(c - f.size()));
    ASSERT_EQ(inv.torsion, torsion);
  }
}

}  // namespace
}  // namespace sbraid
