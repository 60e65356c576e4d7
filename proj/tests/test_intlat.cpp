#include "toric/errors.hpp"
#include "toric/intlat.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

std::vector<BigInt> divisors_of(const IntMatrix& m) { return smith_normal_form(m).divisors; }

}  // namespace

TEST(Smith, Identity) {
  EXPECT_EQ(divisors_of(IntMatrix::identity(3)), (std::vector<BigInt>{1, 1, 1}));
}

TEST(Smith, DiagonalTwoThree) {
  EXPECT_EQ(divisors_of(IntMatrix{{2, 0}, {0, 3}}), (std::vector<BigInt>{1, 6}));
}

TEST(Smith, UpperTriangular) {
  EXPECT_EQ(divisors_of(IntMatrix{{2, 1}, {0, 2}}), (std::vector<BigInt>{1, 4}));
}

TEST(Smith, ZeroMatrix) {
  const auto snf = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(snf.divisors, (std::vector<BigInt>{0, 0}));
  EXPECT_EQ(snf.rank(), 0u);
}

TEST(Smith, EmptyMatrix) {
  const auto snf = smith_normal_form(IntMatrix(0, 3));
  EXPECT_TRUE(snf.divisors.empty());
  EXPECT_EQ(quotient_torsion(IntMatrix(0, 3)), 1);
}

TEST(Smith, RandomRoundTrip) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
    const auto snf = smith_normal_form(m);
    ASSERT_EQ(snf.left * m * snf.right, snf.diagonal);
    ASSERT_EQ(snf.left_inverse * snf.diagonal * snf.right_inverse, m);
    ASSERT_EQ(abs(determinant(snf.left)), 1);
    ASSERT_EQ(abs(determinant(snf.right)), 1);
    for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
      ASSERT_EQ(snf.diagonal(i, i), snf.divisors[i]);
      ASSERT_GE(snf.divisors[i], 0);
      if (i + 1 < snf.divisors.size() && snf.divisors[i] != 0)
        ASSERT_EQ(snf.divisors[i + 1] % snf.divisors[i], 0);
    }
  }
}

TEST(Smith, Deterministic) {
  std::mt19937 rng(7);
  const IntMatrix m = random_matrix(rng, 4, 5);
  const auto a = smith_normal_form(m);
  const auto b = smith_normal_form(m);
  EXPECT_EQ(a.left, b.left);
  EXPECT_EQ(a.right, b.right);
}

TEST(Smith, BigEntries) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = BigInt("123456789012345678901234567890");
  m(1, 1) = BigInt("987654321098765432109876543210");
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.divisors[0] * snf.divisors[1], m(0, 0) * m(1, 1));
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
}

TEST(QuotientTorsion, StandardBasis) { EXPECT_EQ(quotient_torsion(IntMatrix::identity(4)), 1); }

TEST(QuotientTorsion, SingleRow) { EXPECT_EQ(quotient_torsion(IntMatrix{{2, 0}}), 2); }

TEST(QuotientTorsion, C2RootsInWeightBasis) {
  // Columns of the Cartan matrix of B2 = C2 are the simple roots in weight coordinates.
  EXPECT_EQ(quotient_torsion(IntMatrix{{2, -2}, {-1, 2}}), 2);
  EXPECT_EQ(quotient_exponent(IntMatrix{{2, -2}, {-1, 2}}), 2);
}

TEST(QuotientTorsion, UnimodularInvariance) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 4);
    const BigInt before = quotient_torsion(m);
    std::uniform_int_distribution<int> pick(0, 2), col(0, 3), factor(-3, 3);
    for (int step = 0; step < 6; ++step) {
      const auto a = static_cast<std::size_t>(pick(rng)), b = static_cast<std::size_t>(pick(rng));
      if (a != b) m.add_row_multiple(a, b, factor(rng));
      const auto c = static_cast<std::size_t>(col(rng)), d = static_cast<std::size_t>(col(rng));
      if (c != d) m.add_col_multiple(c, d, factor(rng));
      m.swap_rows(a, b);
    }
    ASSERT_EQ(quotient_torsion(m), before);
  }
}

TEST(QuotientExponent, CyclicVsNot) {
  EXPECT_EQ(quotient_exponent(IntMatrix{{2, 0}, {0, 2}}), 2);
  EXPECT_EQ(quotient_exponent(IntMatrix{{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(quotient_exponent(IntMatrix::identity(2)), 1);
}

TEST(Saturate, HalvingGenerator) {
  const auto s = saturate(IntMatrix{{2, 0}});
  EXPECT_EQ(s.basis, (IntMatrix{{1, 0}}));
  EXPECT_EQ(s.index, 2);
}

TEST(Saturate, Unimodular) {
  const auto s = saturate(IntMatrix{{1, 2}, {0, 1}});
  EXPECT_EQ(s.index, 1);
  EXPECT_EQ(s.basis, IntMatrix::identity(2));
}

TEST(Saturate, PlaneInThreeSpace) {
  const auto s = saturate(IntMatrix{{1, 1, 0}, {1, -1, 0}});
  EXPECT_EQ(s.index, 2);
  EXPECT_EQ(s.basis, (IntMatrix{{1, 0, 0}, {0, 1, 0}}));
}

TEST(Saturate, IndexMatchesTorsionInsideSpan) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 2, 4);
    const auto s = saturate(m);
    ASSERT_EQ(s.index, quotient_torsion(m));
    ASSERT_EQ(quotient_torsion(s.basis), 1);
  }
}

TEST(Hermite, ReducedEchelon) {
  const IntMatrix h = hermite_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t pivot = 0;
    while (pivot < h.cols() && h(i, pivot) == 0) ++pivot;
    ASSERT_LT(pivot, h.cols());
    EXPECT_GT(h(i, pivot), 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(h(k, pivot), 0);
      EXPECT_LT(h(k, pivot), h(i, pivot));
    }
  }
  EXPECT_EQ(abs(determinant(h)), abs(determinant(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})));
}

TEST(Hermite, DropsZeroRows) {
  EXPECT_EQ(hermite_normal_form(IntMatrix{{1, 2}, {2, 4}}), (IntMatrix{{1, 2}}));
}

TEST(Kernel, Annihilates) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 2, 5);
    const IntMatrix k = kernel(m);
    EXPECT_EQ(k.rows(), 5 - rank(m));
    const IntMatrix product = m * k.transpose();
    for (std::size_t i = 0; i < product.rows(); ++i)
      for (std::size_t j = 0; j < product.cols(); ++j) ASSERT_EQ(product(i, j), 0);
    if (k.rows()) EXPECT_EQ(quotient_torsion(k), 1);
  }
}

TEST(Determinant, Known) {
  EXPECT_EQ(determinant(IntMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
}

TEST(UnimodularInverse, RoundTrip) {
  const IntMatrix u{{2, 3}, {1, 2}};
  EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(2));
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), DomainError);
}
