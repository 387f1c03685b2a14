#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mmt/bounds.hpp"
#include "mmt/errors.hpp"
#include "mmt/tensornorm.hpp"
#include "mmt/witness.hpp"
#include "oracles.hpp"

using mmt::DenseMatrix;
using mmt::Dims;
using mmt::ExponentTriple;
using mmt::FeasibleTriple;
using mmt::QuotientMode;
using mmt::QuotientOptions;

namespace {

ExponentTriple T(const char* csv) { return ExponentTriple::parse(csv); }

FeasibleTriple random_triple(const Dims& d, std::mt19937_64& rng) {
  return {oracle::random_real(d.l, d.m, rng), oracle::random_real(d.m, d.n, rng), oracle::random_real(d.n, d.l, rng)};
}

FeasibleTriple e_triple(const Dims& d) {
  using mmt::WitnessTag;
  return {mmt::witness_matrix({WitnessTag::E, d.l, d.m}), mmt::witness_matrix({WitnessTag::E, d.m, d.n}),
          mmt::witness_matrix({WitnessTag::E, d.n, d.l})};
}

// sum_i ‖sum_j M_ij y_j‖ with y_1 = (1,0) and y_2 on a fine angle grid; the x_i
// are then optimal in closed form, and rotating all vectors fixes y_1.
double circle_grid_h2(int steps) {
  double best = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double b = 2 * std::numbers::pi * k / steps;
    const double y2x = std::cos(b), y2y = std::sin(b);
    const double r0 = std::hypot(1 + y2x, y2y), r1 = std::hypot(1 - y2x, -y2y);
    best = std::max(best, r0 + r1);
  }
  return best;
}

const char* kExact[] = {"1,2,inf", "1,1,1", "inf,inf,inf", "2,2,2", "1,inf,2", "1,3,inf", "inf,1,3/2",
                        "2,inf,1", "1,3/2,inf", "3,inf,1"};

}  // namespace

TEST(FeasibleTriple, Validation) {
  EXPECT_THROW(FeasibleTriple(DenseMatrix::identity(2), DenseMatrix::identity(3), DenseMatrix::identity(2)),
               mmt::DimensionError);
  EXPECT_THROW(FeasibleTriple(DenseMatrix::identity(2), DenseMatrix(2, 2), DenseMatrix::identity(2)),
               mmt::DegenerateInputError);
  const FeasibleTriple t(mmt::witness_matrix({mmt::WitnessTag::J, 2, 3}), mmt::witness_matrix({mmt::WitnessTag::J, 3, 4}),
                         mmt::witness_matrix({mmt::WitnessTag::J, 4, 2}));
  EXPECT_EQ(t.dims(), (Dims{2, 3, 4}));
  EXPECT_EQ(t.rotated().dims(), (Dims{3, 4, 2}));
  EXPECT_EQ(t.conjugated().dims(), (Dims{2, 4, 3}));
}

TEST(TraceProduct, MatchesExplicitProduct) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto t = random_triple({1 + k % 3u, 1 + k % 4u, 2u}, rng);
    const DenseMatrix p = t.x() * t.m() * t.y();
    mmt::Scalar tr{};
    for (std::size_t i = 0; i < p.rows(); ++i) tr += p(i, i);
    EXPECT_NEAR(std::abs(mmt::trace_product(t.x(), t.m(), t.y()) - tr), 0.0, 1e-12);
  }
  EXPECT_EQ(mmt::trace_product(DenseMatrix::identity(2), DenseMatrix::identity(2), DenseMatrix::identity(2)).real(), 2.0);
}

TEST(SpectralQuotient, ExamplesAndCeiling) {
  EXPECT_EQ(mmt::spectral_quotient(e_triple({3, 2, 4})), 1.0);
  const FeasibleTriple id(DenseMatrix::identity(2), DenseMatrix::identity(2), DenseMatrix::identity(2));
  EXPECT_NEAR(mmt::spectral_quotient(id), 1 / std::sqrt(2.0), 1e-15);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) EXPECT_LE(mmt::spectral_quotient(random_triple({3, 3, 3}, rng)), 1 + 1e-12);
}

TEST(Quotient, ScalarAndWitnessExamples) {
  const FeasibleTriple one(DenseMatrix::identity(1), DenseMatrix::identity(1), DenseMatrix::identity(1));
  for (const char* e : kExact) EXPECT_EQ(mmt::quotient(one, T(e)).value, 1.0) << e;
  EXPECT_EQ(mmt::quotient(e_triple({2, 3, 4}), T("1,2,inf")).value, 1.0);
}

TEST(Quotient, ScalingInvariance) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto t = random_triple({2, 3, 2}, rng);
    for (const char* e : kExact) {
      const double a = mmt::quotient(t, T(e)).value;
      const double b = mmt::quotient(t.scaled(-3.0, 0.25, 7.0), T(e)).value;
      EXPECT_NEAR(a, b, 1e-12 * a) << e;
    }
  }
}

TEST(Quotient, CyclicAndConjugateSymmetry) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const auto t = random_triple({1 + k % 3u, 1 + k % 4u, 1 + k % 2u}, rng);
    for (const char* es : kExact) {
      const ExponentTriple e = T(es);
      const double q = mmt::quotient(t, e).value;
      const auto r1 = t.rotated();
      const double c1 = mmt::quotient(r1, mmt::rotate_exponents(e)).value;
      const double c2 = mmt::quotient(r1.rotated(), mmt::rotate_exponents(mmt::rotate_exponents(e))).value;
      const double cj = mmt::quotient(t.conjugated(), mmt::conjugate_triple(e)).value;
      EXPECT_NEAR(c1, q, 1e-12 * q) << es;
      EXPECT_NEAR(c2, q, 1e-12 * q) << es;
      EXPECT_NEAR(cj, q, 1e-12 * q) << es;
    }
  }
}

TEST(Quotient, Modes) {
  std::mt19937_64 rng(5);
  const auto t = random_triple({3, 3, 3}, rng);
  const ExponentTriple e = T("3,3/2,5/4");
  EXPECT_THROW(mmt::quotient(t, e), mmt::UnsupportedNormError);
  QuotientOptions sound;
  sound.mode = QuotientMode::sound;
  QuotientOptions best;
  best.mode = QuotientMode::best_available;
  const auto s = mmt::quotient(t, e, sound), b = mmt::quotient(t, e, best);
  EXPECT_TRUE(s.certified);
  EXPECT_FALSE(b.certified);
  EXPECT_LE(s.value, b.value * (1 + 1e-12));
  EXPECT_EQ(s.norms[0].kind, mmt::NormKind::upper_bound);
  // Exact denominators: all modes agree.
  const double x = mmt::quotient(t, T("1,2,inf")).value;
  EXPECT_EQ(mmt::quotient(t, T("1,2,inf"), sound).value, x);
  EXPECT_EQ(mmt::quotient(t, T("1,2,inf"), best).value, x);
}

TEST(GrothendieckAscent, CircleGridOracleForH2) {
  const double grid = circle_grid_h2(200000);
  EXPECT_NEAR(grid, 2 * std::sqrt(2.0), 1e-9);
  const double denom = oracle::brute_infty_one(DenseMatrix::from_rows({{1, 1}, {1, -1}}));
  EXPECT_EQ(denom, 2.0);
  mmt::AscentConfig cfg;
  cfg.restarts = 50;
  const auto est = mmt::grothendieck_ascent(DenseMatrix::from_rows({{1, 1}, {1, -1}}), 2, cfg);
  EXPECT_NEAR(est.value, grid / denom, 1e-6);
  ASSERT_TRUE(est.certificate);
  EXPECT_NEAR(mmt::quotient(*est.certificate, mmt::grothendieck_triple()).value, est.value, 1e-12);
}

TEST(GrothendieckAscent, TrivialCases) {
  mmt::AscentConfig cfg;
  cfg.restarts = 10;
  EXPECT_NEAR(mmt::grothendieck_ascent(mmt::witness_matrix({mmt::WitnessTag::J, 3, 4}), 3, cfg).value, 1.0, 1e-12);
  EXPECT_NEAR(mmt::grothendieck_ascent(mmt::witness_matrix({mmt::WitnessTag::E, 2, 3}), 2, cfg).value, 1.0, 1e-12);
  EXPECT_NEAR(mmt::grothendieck_ascent(DenseMatrix::from_rows({{1, 1}, {1, -1}}), 1, cfg).value, 1.0, 1e-12);
  EXPECT_THROW(mmt::grothendieck_ascent(DenseMatrix(2, 2), 2, cfg), mmt::DegenerateInputError);
  EXPECT_THROW(mmt::grothendieck_ascent(DenseMatrix::identity(2), 0, cfg), mmt::DimensionError);
}

TEST(GrothendieckAscent, ObjectiveNondecreasingPerSweep) {
  std::mt19937_64 rng(6);
  mmt::AscentConfig cfg;
  cfg.restarts = 5;
  cfg.keep_trace = true;
  const auto est = mmt::grothendieck_ascent(oracle::random_real(5, 4, rng), 3, cfg);
  ASSERT_FALSE(est.trace.empty());
  for (const auto& run : est.trace)
    for (std::size_t k = 1; k < run.size(); ++k) EXPECT_GE(run[k], run[k - 1] * (1 - 1e-12));
}

TEST(KgLowerBound, Examples) {
  mmt::AscentConfig cfg;
  cfg.restarts = 50;
  EXPECT_NEAR(mmt::kg_lower_bound({mmt::witness_matrix({mmt::WitnessTag::J, 3, 3})}, 3, cfg).value, 1.0, 1e-12);
  const auto h = mmt::kg_lower_bound({DenseMatrix::identity(2), DenseMatrix::from_rows({{1, 1}, {1, -1}})}, 2, cfg);
  EXPECT_GE(h.value, std::sqrt(2.0) - 1e-6);
  EXPECT_THROW(mmt::kg_lower_bound({}, 2, cfg), mmt::DomainError);
}

TEST(EstimateTensorNorm, Examples) {
  mmt::AscentConfig cfg;
  cfg.restarts = 20;
  cfg.max_sweeps = 200;
  EXPECT_NEAR(mmt::estimate_tensor_norm({1, 1, 1}, T("1,2,inf"), cfg).value, 1.0, 1e-12);
  for (const Dims d : {Dims{2, 2, 2}, Dims{1, 3, 2}, Dims{4, 2, 3}})
    EXPECT_GE(mmt::estimate_tensor_norm(d, T("2,2,2"), cfg).value, 1.0 - 1e-12);
  EXPECT_GE(mmt::estimate_tensor_norm({2, 2, 2}, T("1,2,inf"), cfg).value, std::sqrt(2.0) - 1e-6);
}

TEST(EstimateTensorNorm, CertifiedAndSandwiched) {
  mmt::AscentConfig cfg;
  cfg.restarts = 10;
  cfg.max_sweeps = 100;
  for (const char* es : {"1,2,inf", "2,2,2", "1,3,inf", "3,3/2,5/4", "inf,1,inf"}) {
    const Dims d{2, 3, 2};
    const auto est = mmt::estimate_tensor_norm(d, T(es), cfg);
    ASSERT_TRUE(est.certificate) << es;
    mmt::QuotientOptions sound;
    sound.mode = QuotientMode::sound;
    EXPECT_NEAR(mmt::quotient(*est.certificate, T(es), sound).value, est.value, 1e-12 * est.value) << es;
    EXPECT_TRUE(mmt::within_sandwich(d, T(es), est.value)) << es;
  }
}

TEST(EstimateTensorNorm, DeterministicUnderSeed) {
  mmt::AscentConfig cfg;
  cfg.restarts = 8;
  cfg.max_sweeps = 50;
  const auto a = mmt::estimate_tensor_norm({3, 2, 3}, T("1,3,2"), cfg);
  const auto b = mmt::estimate_tensor_norm({3, 2, 3}, T("1,3,2"), cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.source, b.source);
  EXPECT_THROW(mmt::estimate_tensor_norm({0, 2, 2}, T("1,2,inf"), cfg), mmt::DimensionError);
}
