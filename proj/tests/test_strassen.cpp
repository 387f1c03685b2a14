#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mmt/errors.hpp"
#include "mmt/strassen.hpp"
#include "oracles.hpp"

using mmt::Matrix;

namespace {

Matrix<std::int64_t> random_int(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-50, 50);
  Matrix<std::int64_t> m(n, n);
  for (auto& x : m.data()) x = d(rng);
  return m;
}

Matrix<double> random_double(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Matrix<double> m(n, n);
  for (auto& x : m.data()) x = d(rng);
  return m;
}

double rel_frobenius(const Matrix<double>& a, const Matrix<double>& b) {
  double num = 0, den = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num += (a.data()[k] - b.data()[k]) * (a.data()[k] - b.data()[k]);
    den += b.data()[k] * b.data()[k];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST(Hypermatrix, Shape) {
  const auto one = mmt::mu_hypermatrix(1, 1, 1);
  ASSERT_EQ(one.entries.size(), 1u);
  EXPECT_EQ(one.entries[0].a + one.entries[0].b + one.entries[0].c, 0u);
  const auto mu = mmt::mu_hypermatrix(2, 2, 2);
  EXPECT_EQ(mu.entries.size(), 8u);
  EXPECT_EQ(mu.da, 4u);
  EXPECT_EQ(mu.db, 4u);
  EXPECT_EQ(mu.dc, 4u);
  EXPECT_THROW(mmt::mu_hypermatrix(0, 1, 1), mmt::DimensionError);
}

TEST(Hypermatrix, ContractionIsTrace) {
  std::mt19937_64 rng(1);
  for (std::size_t l = 1; l <= 3; ++l)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto mu = mmt::mu_hypermatrix(l, m, n);
        for (int k = 0; k < 40; ++k) {
          const auto x = oracle::random_real(l, m, rng), a = oracle::random_real(m, n, rng),
                     y = oracle::random_real(n, l, rng);
          const auto prod = x * a * y;
          mmt::Scalar tr{};
          for (std::size_t i = 0; i < l; ++i) tr += prod(i, i);
          EXPECT_NEAR(std::abs(mmt::contract(mu, x, a, y) - tr), 0.0, 1e-12 * std::max(1.0, std::abs(tr)));
        }
      }
  const auto id = mmt::DenseMatrix::identity(2);
  EXPECT_EQ(mmt::contract(mmt::mu_hypermatrix(2, 2, 2), id, id, id).real(), 2.0);
  EXPECT_THROW(mmt::contract(mmt::mu_hypermatrix(2, 2, 2), id, id, mmt::DenseMatrix::identity(3)),
               mmt::DimensionError);
}

TEST(Strassen2x2, Examples) {
  const auto id = Matrix<std::int64_t>::identity(2);
  const auto r = mmt::strassen_2x2(id, id);
  EXPECT_EQ(r.c, id);
  EXPECT_EQ(r.mult_count, 7u);
  const Matrix<std::int64_t> a(2, 2, {1, 2, 3, 4}), b(2, 2, {5, 6, 7, 8});
  EXPECT_EQ(mmt::strassen_2x2(a, b).c, (Matrix<std::int64_t>(2, 2, {19, 22, 43, 50})));
  EXPECT_THROW(mmt::strassen_2x2(Matrix<std::int64_t>(3, 3), id), mmt::DimensionError);
}

TEST(Strassen2x2, MatchesNaiveOnRandomIntegers) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_int(2, rng), b = random_int(2, rng);
    const auto r = mmt::strassen_2x2(a, b);
    ASSERT_EQ(r.c, naive_multiply(a, b));
    ASSERT_EQ(r.mult_count, 7u);
  }
}

TEST(StrassenRecursive, CountsAndExactness) {
  std::mt19937_64 rng(3);
  const auto a1 = random_int(1, rng), b1 = random_int(1, rng);
  const auto r1 = mmt::strassen_recursive(a1, b1);
  EXPECT_EQ(r1.c, naive_multiply(a1, b1));
  EXPECT_EQ(r1.mult_count, 1u);
  for (std::size_t n : {2u, 3u, 4u, 5u, 8u, 16u}) {
    const auto a = random_int(n, rng), b = random_int(n, rng);
    const auto r = mmt::strassen_recursive(a, b);
    EXPECT_EQ(r.c, naive_multiply(a, b)) << n;
  }
  EXPECT_EQ(mmt::strassen_recursive(random_int(4, rng), random_int(4, rng)).mult_count, 49u);
  EXPECT_EQ(mmt::strassen_recursive(random_int(8, rng), random_int(8, rng), 2).mult_count, 49u * 8u);
  EXPECT_EQ(mmt::strassen_recursive(random_int(8, rng), random_int(8, rng), 8).mult_count, 512u);
}

TEST(StrassenRecursive, FloatingAgreementUpTo256) {
  std::mt19937_64 rng(4);
  for (std::size_t n : {4u, 32u, 100u, 256u}) {
    const auto a = random_double(n, rng), b = random_double(n, rng);
    const auto r = mmt::strassen_recursive(a, b, 16);
    EXPECT_LE(rel_frobenius(r.c, naive_multiply(a, b)), 1e-8) << n;
  }
}

TEST(RankDecomposition, StrassenAndTrivial) {
  const auto s = mmt::strassen_decomposition();
  EXPECT_EQ(s.terms.size(), 7u);
  const auto c = mmt::verify_rank_decomposition(s, 2, 2, 2);
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.max_error, 0.0);
  for (std::size_t l = 1; l <= 3; ++l)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto t = mmt::trivial_decomposition(l, m, n);
        EXPECT_EQ(t.terms.size(), l * m * n);
        EXPECT_TRUE(mmt::verify_rank_decomposition(t, l, m, n).valid);
      }
}

TEST(RankDecomposition, RejectsPerturbations) {
  for (std::size_t k = 0; k < 7; ++k)
    for (double eps : {1e-3, -1e-3, 0.5}) {
      auto s = mmt::strassen_decomposition();
      s.terms[k].weight += eps;
      const auto c = mmt::verify_rank_decomposition(s, 2, 2, 2);
      EXPECT_FALSE(c.valid) << k << " " << eps;
      EXPECT_GE(c.max_error, std::abs(eps) * (1 - 1e-12));
    }
  auto dropped = mmt::strassen_decomposition();
  dropped.terms.pop_back();
  EXPECT_FALSE(mmt::verify_rank_decomposition(dropped, 2, 2, 2).valid);
  auto bad = mmt::strassen_decomposition();
  bad.terms[0].u.push_back(0);
  EXPECT_THROW(mmt::verify_rank_decomposition(bad, 2, 2, 2), mmt::DimensionError);
}

TEST(Omega, Examples) {
  EXPECT_NEAR(mmt::omega_upper(2, 7), std::log2(7.0), 1e-12);
  EXPECT_NEAR(mmt::omega_upper(2, 8), 3.0, 1e-12);
  EXPECT_NEAR(mmt::omega_upper(4, 49), std::log2(7.0), 1e-12);
  EXPECT_THROW(mmt::omega_upper(1, 7), mmt::DomainError);
  EXPECT_THROW(mmt::omega_upper(2, 3), mmt::DomainError);
}
