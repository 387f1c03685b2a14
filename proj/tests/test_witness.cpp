#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <set>

#include "mmt/errors.hpp"
#include "mmt/tensornorm.hpp"
#include "mmt/witness.hpp"
#include "oracles.hpp"

using mmt::Dims;
using mmt::Exponent;
using mmt::ExponentTriple;
using mmt::Matrix;
using mmt::WitnessTag;

namespace {

ExponentTriple T(const char* csv) { return ExponentTriple::parse(csv); }

const char* kGrid[] = {"1", "3/2", "2", "3", "inf"};

}  // namespace

TEST(Witness, Shapes) {
  const auto e = mmt::make_witness({WitnessTag::E, 2, 3});
  EXPECT_EQ(e, (Matrix<std::int64_t>(2, 3, {1, 0, 0, 0, 0, 0})));
  EXPECT_EQ(mmt::make_witness({WitnessTag::C, 3, 2}), (Matrix<std::int64_t>(3, 2, {1, 0, 1, 0, 1, 0})));
  EXPECT_EQ(mmt::make_witness({WitnessTag::R, 2, 3}), (Matrix<std::int64_t>(2, 3, {1, 1, 1, 0, 0, 0})));
  EXPECT_EQ(mmt::make_witness({WitnessTag::J, 2, 2}), (Matrix<std::int64_t>(2, 2, {1, 1, 1, 1})));
  EXPECT_EQ(mmt::make_witness({WitnessTag::IPad, 3, 2}), (Matrix<std::int64_t>(3, 2, {1, 0, 0, 1, 0, 0})));
  EXPECT_EQ(mmt::make_witness({WitnessTag::Hadamard, 2, 2}), (Matrix<std::int64_t>(2, 2, {1, 1, 1, -1})));
  EXPECT_THROW(mmt::make_witness({WitnessTag::Hadamard, 3, 3}), mmt::DomainError);
  EXPECT_THROW(mmt::make_witness({WitnessTag::Hadamard, 4, 2}), mmt::DomainError);
  EXPECT_EQ(mmt::parse_witness_tag("H"), WitnessTag::Hadamard);
  EXPECT_EQ(mmt::parse_witness_tag("I"), WitnessTag::IPad);
}

TEST(Hadamard, KroneckerAndGram) {
  const auto h4 = mmt::sylvester_hadamard(4);
  const auto h2 = mmt::sylvester_hadamard(2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h4(i, j), h2(i / 2, j / 2) * h2(i % 2, j % 2));
  for (std::size_t n = 1; n <= 64; n *= 2) {
    const auto h = mmt::sylvester_hadamard(n);
    EXPECT_TRUE(mmt::hadamard_gram_exact(h)) << n;
    Matrix<std::int64_t> nI(n, n);
    for (std::size_t i = 0; i < n; ++i) nI(i, i) = static_cast<std::int64_t>(n);
    EXPECT_EQ(naive_multiply(h, h.transpose()), nI);
  }
  auto bad = mmt::sylvester_hadamard(4);
  bad(1, 1) = -bad(1, 1);
  EXPECT_FALSE(mmt::hadamard_gram_exact(bad));
}

TEST(Hadamard, SingularValuesAreSqrtN) {
  for (std::size_t n = 2; n <= 32; n *= 2) {
    const auto h = mmt::sylvester_hadamard(n);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<double>(h(i, j));
    const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
    for (Eigen::Index k = 0; k < s.size(); ++k) EXPECT_NEAR(s(k), std::sqrt(static_cast<double>(n)), 1e-10);
  }
}

TEST(Hadamard, InftyOneBelowThreeHalves) {
  for (std::size_t n = 2; n <= 8; n *= 2) {
    const auto h = mmt::DenseMatrix::from_integers(mmt::sylvester_hadamard(n));
    const double v = mmt::infty_one_norm_exact(h).value;
    EXPECT_EQ(v, oracle::brute_infty_one(h));
    EXPECT_LE(v, std::pow(n, 1.5));
  }
}

TEST(IdentityNorm, Examples) {
  EXPECT_EQ(mmt::identity_pq_norm(3, 2, Exponent::infinity(), Exponent()), 2.0);
  EXPECT_EQ(mmt::identity_pq_norm(4, 4, Exponent::from_value(2), Exponent::from_value(3)), 1.0);
  EXPECT_EQ(mmt::identity_pq_norm(4, 4, Exponent::from_value(3), Exponent::from_value(3)), 1.0);
  EXPECT_DOUBLE_EQ(mmt::identity_pq_norm(4, 9, Exponent::infinity(), Exponent::from_value(2)), 2.0);
}

TEST(Sharpness, Examples) {
  const auto a = mmt::sharpness_check({2, 2, 2}, T("1,2,inf"));
  EXPECT_TRUE(a.equal);
  EXPECT_EQ(a.witnesses, "E,R,J");
  const auto b = mmt::sharpness_check({4, 3, 2}, T("1,1,1"));
  EXPECT_TRUE(b.equal);
  // ‖E‖=1, ‖R_{2,4}‖_{1,1}=1, ‖J_{3,2}‖_{1,1}=3, tr=1; factor 4^{1/2}·3^0·2^1.
  EXPECT_NEAR(b.lhs, 1.0 / 3.0, 1e-15);
  const auto c = mmt::sharpness_check({4, 3, 2}, T("1,inf,inf"));
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.witnesses, "C,E,J");
}

TEST(Sharpness, FullGridEquality) {
  for (std::size_t l = 1; l <= 4; ++l)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; n <= 4; ++n)
        for (const char* p : kGrid)
          for (const char* q : kGrid)
            for (const char* r : kGrid) {
              const auto rep = mmt::sharpness_check({l, m, n}, ExponentTriple::parse(p, q, r));
              EXPECT_TRUE(rep.equal) << l << m << n << " " << p << "," << q << "," << r << " " << rep.relerr;
            }
}

TEST(Sharpness, InequalityOnRandomTriples) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const Dims d{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    const mmt::FeasibleTriple t(oracle::random_real(d.l, d.m, rng), oracle::random_real(d.m, d.n, rng),
                                oracle::random_real(d.n, d.l, rng));
    const ExponentTriple e = ExponentTriple::parse(kGrid[rng() % 5], kGrid[rng() % 5], kGrid[rng() % 5]);
    try {
      const double lhs = mmt::quotient(t, e).value;
      EXPECT_LE(lhs, mmt::sharpness_rhs(t, e) * (1 + 1e-10));
      ++checked;
    } catch (const mmt::UnsupportedNormError&) {
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(IdentityQuotient, ClosedFormMatchesDirect) {
  const char* orderings[] = {"1,3/2,3", "1,3,3/2", "3/2,1,3", "3/2,3,1", "3,1,3/2", "3,3/2,1",
                             "1,2,inf", "2,2,2",   "inf,1,inf", "1,1,1"};
  for (std::size_t l = 1; l <= 4; ++l)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; n <= 4; ++n)
        for (const char* es : orderings) {
          const Dims d{l, m, n};
          const double cf = mmt::identity_quotient_closed_form(d, T(es));
          const double dir = mmt::identity_quotient_direct(d, T(es));
          EXPECT_NEAR(cf, dir, 1e-12 * dir) << l << m << n << " " << es;
        }
}

TEST(IdentityQuotient, Branches) {
  std::set<int> seen;
  for (const char* es : {"1,3/2,3", "1,3,3/2", "3/2,1,3", "3/2,3,1", "3,1,3/2", "3,3/2,1"})
    seen.insert(mmt::identity_branch(T(es)));
  EXPECT_EQ(seen.size(), 6u);
  // l = 2n, m = n, p <= q <= r: n^{1/r - 1/p + 1}.
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_NEAR(mmt::identity_quotient_closed_form({2 * n, n, n}, T("1,2,inf")), 1.0, 1e-12);
    EXPECT_NEAR(mmt::identity_quotient_closed_form({2 * n, n, n}, T("3/2,2,3")),
                std::pow(n, 1.0 / 3 - 2.0 / 3 + 1), 1e-12);
    EXPECT_NEAR(mmt::identity_quotient_closed_form({n, n, n}, T("2,2,2")), static_cast<double>(n), 1e-12);
  }
  EXPECT_EQ(mmt::identity_growth_exponent(T("1,2,inf")), mmt::Rational(0));
  EXPECT_EQ(mmt::identity_growth_exponent(T("1,1,1")), mmt::Rational(1));
}
