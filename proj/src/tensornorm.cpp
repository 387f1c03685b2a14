#include "mmt/tensornorm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "mmt/errors.hpp"
#include "mmt/random.hpp"
#include "mmt/witness.hpp"

namespace mmt {

FeasibleTriple::FeasibleTriple(DenseMatrix x, DenseMatrix m, DenseMatrix y)
    : x_(std::move(x)), m_(std::move(m)), y_(std::move(y)) {
  if (x_.cols() != m_.rows() || m_.cols() != y_.rows() || y_.cols() != x_.rows()) {
    throw DimensionError("feasible triple needs X l x m, M m x n, Y n x l");
  }
  if (x_.is_zero() || m_.is_zero() || y_.is_zero()) throw DegenerateInputError("feasible triple has a zero matrix");
}

FeasibleTriple FeasibleTriple::rotated() const { return FeasibleTriple(m_, y_, x_); }

FeasibleTriple FeasibleTriple::conjugated() const {
  return FeasibleTriple(y_.conjugate_transpose(), m_.conjugate_transpose(), x_.conjugate_transpose());
}

FeasibleTriple FeasibleTriple::scaled(Scalar cx, Scalar cm, Scalar cy) const {
  return FeasibleTriple(x_.scaled(cx), m_.scaled(cm), y_.scaled(cy));
}

ExponentTriple rotate_exponents(const ExponentTriple& e) { return {e.r, e.p, e.q}; }

namespace {

NormResult denominator_norm(const DenseMatrix& a, const Exponent& p, const Exponent& q, const QuotientOptions& o,
                            bool& certified) {
  if (has_exact_path(a, p, q, o.norm)) return pq_norm_exact(a, p, q, o.norm);
  switch (o.mode) {
    case QuotientMode::exact:
      return pq_norm_exact(a, p, q, o.norm);  // throws with guidance
    case QuotientMode::sound:
      return pq_norm_upper_bound(a, p, q);
    case QuotientMode::best_available:
      certified = false;
      return pq_norm_lower_heuristic(a, p, q, o.heuristic_restarts, o.seed);
  }
  throw UnsupportedNormError("unknown quotient mode");
}

}  // namespace

Quotient quotient(const FeasibleTriple& t, const ExponentTriple& e, const QuotientOptions& opts) {
  Quotient out;
  out.norms[0] = denominator_norm(t.x(), e.p, e.q, opts, out.certified);
  out.norms[1] = denominator_norm(t.y(), e.q, e.r, opts, out.certified);
  out.norms[2] = denominator_norm(t.m(), e.r, e.p, opts, out.certified);
  out.trace_abs = std::abs(trace_product(t.x(), t.m(), t.y()));
  out.value = out.trace_abs / (out.norms[0].value * out.norms[1].value * out.norms[2].value);
  return out;
}

double spectral_quotient(const FeasibleTriple& t) {
  return std::abs(trace_product(t.x(), t.m(), t.y())) /
         (frobenius_norm(t.x()) * frobenius_norm(t.m()) * frobenius_norm(t.y()));
}

namespace {

const ExponentTriple& groth() {
  static const ExponentTriple g = grothendieck_triple();
  return g;
}

void check_config(const AscentConfig& c) {
  if (c.restarts == 0) throw DomainError("ascent needs at least one restart");
  if (c.max_sweeps == 0) throw DomainError("ascent needs at least one sweep");
}

// v <- v / ‖v‖_2; returns false (v untouched) when v = 0.
bool normalize_into(std::vector<double>& v, const std::vector<double>& src) {
  double s = 0.0;
  for (double x : src) s += x * x;
  if (s == 0.0) return false;
  const double inv = 1.0 / std::sqrt(s);
  for (std::size_t k = 0; k < src.size(); ++k) v[k] = src[k] * inv;
  return true;
}

struct AscentRun {
  double objective = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> xs, ys;
  std::size_t sweeps = 0;
};

AscentRun ascent_run(const DenseMatrix& m, std::size_t l, const AscentConfig& cfg, std::uint64_t run_seed,
                     std::vector<double>* trace) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Rng rng(run_seed);
  AscentRun run;
  run.xs.assign(rows, std::vector<double>(l, 0.0));
  run.ys.assign(cols, std::vector<double>(l, 0.0));
  for (auto& x : run.xs) x[0] = 1.0;
  for (auto& y : run.ys) {
    std::vector<double> g(l);
    for (auto& v : g) v = standard_normal(rng);
    if (!normalize_into(y, g)) y[0] = 1.0;
  }
  std::vector<double> acc(l);
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t j = 0; j < cols; ++j) {
        const double mij = m.real_at(i, j);
        if (mij == 0.0) continue;
        for (std::size_t a = 0; a < l; ++a) acc[a] += mij * run.ys[j][a];
      }
      normalize_into(run.xs[i], acc);
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t i = 0; i < rows; ++i) {
        const double mij = m.real_at(i, j);
        if (mij == 0.0) continue;
        for (std::size_t a = 0; a < l; ++a) acc[a] += mij * run.xs[i][a];
      }
      normalize_into(run.ys[j], acc);
      for (std::size_t a = 0; a < l; ++a) obj += acc[a] * run.ys[j][a];
    }
    run.sweeps = sweep + 1;
    if (trace) trace->push_back(obj);
    const bool done = sweep > 0 && obj - prev <= cfg.tol * std::abs(obj);
    prev = obj;
    run.objective = obj;
    if (done) break;
  }
  return run;
}

FeasibleTriple ascent_certificate(const DenseMatrix& m, std::size_t l, const AscentRun& run) {
  DenseMatrix x(l, m.rows()), y(m.cols(), l);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t a = 0; a < l; ++a) x.set(a, i, run.xs[i][a]);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t a = 0; a < l; ++a) y.set(j, a, run.ys[j][a]);
  return FeasibleTriple(std::move(x), m, std::move(y));
}

}  // namespace

TensorNormEstimate grothendieck_ascent(const DenseMatrix& m, std::size_t l, const AscentConfig& config) {
  check_config(config);
  if (!m.is_real()) throw UnsupportedNormError("grothendieck_ascent is real-only");
  if (l == 0) throw DimensionError("vector dimension l must be >= 1");
  if (m.is_zero()) throw DegenerateInputError("grothendieck_ascent of a zero matrix");

  TensorNormEstimate est;
  est.triple = groth();
  est.dims = {l, m.rows(), m.cols()};
  est.seed = config.seed;
  est.source = "grothendieck-ascent";

  AscentRun best;
  for (std::size_t r = 0; r < config.restarts; ++r) {
    std::vector<double> trace;
    AscentRun run = ascent_run(m, l, config, sub_seed(config.seed, r), config.keep_trace ? &trace : nullptr);
    est.iterations += run.sweeps;
    if (config.keep_trace) est.trace.push_back(std::move(trace));
    if (run.objective > best.objective) best = std::move(run);
  }
  est.restarts_used = config.restarts;

  FeasibleTriple cert = ascent_certificate(m, l, best);
  const bool enumerable = std::min(m.rows(), m.cols()) <= config.norm.enumeration_cap;
  QuotientOptions qo;
  qo.norm = config.norm;
  qo.mode = enumerable ? QuotientMode::exact : QuotientMode::sound;
  est.value = quotient(cert, groth(), qo).value;
  if (!enumerable) {
    const double heur = infty_one_norm_heuristic(m, config.restarts, config.seed).value;
    est.unsound_value = std::abs(best.objective) / heur;
  }
  est.certificate = std::move(cert);
  return est;
}

TensorNormEstimate kg_lower_bound(const std::vector<DenseMatrix>& matrices, std::size_t l, const AscentConfig& config) {
  if (matrices.empty()) throw DomainError("kg_lower_bound needs at least one matrix");
  std::optional<TensorNormEstimate> best;
  for (const auto& m : matrices) {
    auto est = grothendieck_ascent(m, l, config);
    if (!best || est.value > best->value) {
      const std::size_t restarts = best ? best->restarts_used : 0, iters = best ? best->iterations : 0;
      best = std::move(est);
      best->restarts_used += restarts;
      best->iterations += iters;
    } else {
      best->restarts_used += est.restarts_used;
      best->iterations += est.iterations;
    }
  }
  return *best;
}

namespace {

DenseMatrix w(WitnessTag tag, std::size_t r, std::size_t c) { return witness_matrix({tag, r, c}); }

DenseMatrix hadamard_block(std::size_t rows, std::size_t cols) {
  std::size_t n = 1;
  while (n < std::max(rows, cols)) n *= 2;
  return DenseMatrix::from_integers(sylvester_hadamard(n).block(0, 0, rows, cols));
}

DenseMatrix random_sign_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(rows * cols);
  for (auto& x : v) x = random_sign(rng);
  return DenseMatrix::real(rows, cols, v);
}

// Frobenius-normalised alternating maximisation of tr(XMY); each iterate is scored
// with the true (sound) quotient.
void alternating_ascent(const Dims& d, const AscentConfig& cfg, TensorNormEstimate& est,
                        const std::function<void(const FeasibleTriple&, const char*)>& offer) {
  const std::size_t restarts = std::min<std::size_t>(cfg.restarts, 8);
  const std::size_t sweeps = std::min<std::size_t>(cfg.max_sweeps, 30);
  auto gaussian = [](std::size_t r, std::size_t c, Rng& rng) {
    std::vector<double> v(r * c);
    for (auto& x : v) x = standard_normal(rng);
    return DenseMatrix::real(r, c, v);
  };
  auto unit = [](const DenseMatrix& a) { return a.scaled(1.0 / frobenius_norm(a)); };
  for (std::size_t k = 0; k < restarts; ++k) {
    Rng rng(sub_seed(cfg.seed ^ 0xa5a5a5a5ULL, k));
    DenseMatrix x = gaussian(d.l, d.m, rng), m = gaussian(d.m, d.n, rng), y = gaussian(d.n, d.l, rng);
    for (std::size_t s = 0; s < sweeps; ++s) {
      const DenseMatrix gx = (m * y).transpose();
      if (gx.is_zero()) break;
      x = unit(gx);
      const DenseMatrix gm = (y * x).transpose();
      if (gm.is_zero()) break;
      m = unit(gm);
      const DenseMatrix gy = (x * m).transpose();
      if (gy.is_zero()) break;
      y = unit(gy);
      ++est.iterations;
    }
    ++est.restarts_used;
    offer(FeasibleTriple(x, m, y), "alternating-ascent");
  }
}

}  // namespace

TensorNormEstimate estimate_tensor_norm(const Dims& d, const ExponentTriple& e, const AscentConfig& config) {
  check_config(config);
  if (d.l == 0 || d.m == 0 || d.n == 0) throw DimensionError("tensor dimensions must be >= 1");

  TensorNormEstimate est;
  est.triple = e;
  est.dims = d;
  est.seed = config.seed;
  est.value = -1.0;

  QuotientOptions qo;
  qo.mode = QuotientMode::sound;
  qo.norm = config.norm;

  auto offer = [&](const FeasibleTriple& t, const char* source) {
    const double v = quotient(t, e, qo).value;
    if (v > est.value) {
      est.value = v;
      est.certificate = t;
      est.source = source;
    }
  };

  std::vector<std::pair<const char*, FeasibleTriple>> structured;
  structured.emplace_back("E-triple", FeasibleTriple(w(WitnessTag::E, d.l, d.m), w(WitnessTag::E, d.m, d.n),
                                                     w(WitnessTag::E, d.n, d.l)));
  structured.emplace_back("witness-E,R,J", FeasibleTriple(w(WitnessTag::E, d.l, d.m), w(WitnessTag::J, d.m, d.n),
                                                          w(WitnessTag::R, d.n, d.l)));
  structured.emplace_back("witness-C,E,J", FeasibleTriple(w(WitnessTag::C, d.l, d.m), w(WitnessTag::J, d.m, d.n),
                                                          w(WitnessTag::E, d.n, d.l)));
  structured.emplace_back("identity", identity_triple(d));
  const bool cube = d.l == d.m && d.m == d.n;
  if (cube && d.n >= 2 && is_power_of_two(d.n)) {
    const DenseMatrix h = DenseMatrix::from_integers(sylvester_hadamard(d.n));
    const DenseMatrix id = DenseMatrix::identity(d.n);
    structured.emplace_back("hadamard", FeasibleTriple(h, h, id));
  }
  for (const auto& [name, t] : structured) {
    offer(t, name);
    if (cube) {
      offer(t.rotated(), name);
      offer(t.rotated().rotated(), name);
    }
  }

  // Grothendieck orbit: e = R^k(1,2,∞); run the ascent at the pre-image dims and rotate back.
  int k = -1;
  ExponentTriple g = groth();
  for (int s = 0; s < 3; ++s, g = rotate_exponents(g))
    if (g == e) k = s;
  if (k >= 0) {
    const Dims base = k == 0 ? d : k == 1 ? Dims{d.n, d.l, d.m} : Dims{d.m, d.n, d.l};
    std::vector<DenseMatrix> ms{w(WitnessTag::J, base.m, base.n), w(WitnessTag::E, base.m, base.n),
                                hadamard_block(base.m, base.n)};
    for (std::uint64_t s = 0; s < 2; ++s) ms.push_back(random_sign_matrix(base.m, base.n, sub_seed(config.seed, 1000 + s)));
    for (const auto& m : ms) {
      auto g_est = grothendieck_ascent(m, base.l, config);
      est.restarts_used += g_est.restarts_used;
      est.iterations += g_est.iterations;
      FeasibleTriple t = *g_est.certificate;
      for (int s = 0; s < k; ++s) t = t.rotated();
      offer(t, "grothendieck-ascent");
      if (g_est.unsound_value && (!est.unsound_value || *g_est.unsound_value > *est.unsound_value))
        est.unsound_value = g_est.unsound_value;
    }
  }

  QuotientOptions cheap = qo;
  cheap.norm.enumeration_cap = std::min<std::size_t>(qo.norm.enumeration_cap, 10);
  alternating_ascent(d, config, est, [&](const FeasibleTriple& t, const char* source) {
    const double v = quotient(t, e, cheap).value;
    if (v > est.value) {
      est.value = v;
      est.certificate = t;
      est.source = source;
    }
  });

  // Re-score the winner with the caller's options so the certificate reproduces the value.
  est.value = quotient(*est.certificate, e, qo).value;
  return est;
}

}  // namespace mmt
