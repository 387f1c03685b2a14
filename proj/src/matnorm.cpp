#include "mmt/matnorm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "mmt/errors.hpp"
#include "mmt/random.hpp"

namespace mmt {

const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::exact: return "exact";
    case NormKind::lower_bound: return "lower-bound";
    case NormKind::upper_bound: return "upper-bound";
  }
  return "?";
}

const char* to_string(NormPath p) {
  switch (p) {
    case NormPath::zero: return "zero";
    case NormPath::scalar: return "scalar";
    case NormPath::max_column: return "max-column";
    case NormPath::max_row: return "max-row";
    case NormPath::rank_one: return "rank-one";
    case NormPath::monomial: return "monomial";
    case NormPath::spectral: return "spectral";
    case NormPath::vertex_columns: return "vertex-columns";
    case NormPath::vertex_rows: return "vertex-rows";
    case NormPath::heuristic: return "heuristic";
    case NormPath::comparison_bound: return "comparison-bound";
  }
  return "?";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Scalar phase(Scalar v) {
  const double a = std::abs(v);
  return a == 0.0 ? Scalar(1.0) : v / a;
}

template <typename T>
double magnitude(T v) {
  return std::abs(v);
}

template <typename T>
double generic_norm(std::span<const T> v, const Exponent& p) {
  if (v.empty()) throw DimensionError("vector_norm of an empty vector");
  double mx = 0.0;
  for (const auto& x : v) mx = std::max(mx, magnitude(x));
  if (p.is_infinite() || mx == 0.0) return mx;
  if (p.is_one()) {
    double s = 0.0;
    for (const auto& x : v) s += magnitude(x);
    return s;
  }
  double s = 0.0;
  if (p.is_two()) {
    for (const auto& x : v) {
      const double t = magnitude(x) / mx;
      s += t * t;
    }
    return mx * std::sqrt(s);
  }
  const double pv = p.value();
  for (const auto& x : v) s += std::pow(magnitude(x) / mx, pv);
  return mx * std::pow(s, p.reciprocal_value());
}

std::vector<Scalar> basis_vector(std::size_t n, std::size_t k) {
  std::vector<Scalar> e(n);
  e[k] = 1.0;
  return e;
}

std::vector<Scalar> multiply(const DenseMatrix& m, std::span<const Scalar> z) {
  std::vector<Scalar> w(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc{};
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += row[j] * z[j];
    w[i] = acc;
  }
  return w;
}

std::vector<Scalar> multiply_adjoint(const DenseMatrix& m, std::span<const Scalar> g) {
  std::vector<Scalar> h(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) h[j] += std::conj(row[j]) * g[i];
  }
  return h;
}

NormResult make_result(double value, NormKind kind, NormPath path, const Exponent& p, const Exponent& q,
                       std::optional<std::vector<Scalar>> cert) {
  NormResult r;
  r.value = value;
  r.kind = kind;
  r.path = path;
  r.p = p;
  r.q = q;
  r.certificate = std::move(cert);
  return r;
}

struct RankOne {
  std::vector<Scalar> u, v;
};

std::optional<RankOne> rank_one_factors(const DenseMatrix& m) {
  std::size_t pi = 0, pj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        pi = i;
        pj = j;
      }
  if (best <= 0.0) return std::nullopt;
  RankOne f;
  f.u = m.column(pj);
  f.v.resize(m.cols());
  const Scalar pivot = m(pi, pj);
  for (std::size_t j = 0; j < m.cols(); ++j) f.v[j] = m(pi, j) / pivot;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar approx = f.u[i] * f.v[j];
      if (std::abs(m(i, j) - approx) > 4.0 * kEps * (std::abs(m(i, j)) + std::abs(approx))) return std::nullopt;
    }
  return f;
}

struct MonomialEntry {
  std::size_t col;
  double modulus;
};

std::optional<std::vector<MonomialEntry>> monomial_entries(const DenseMatrix& m) {
  std::vector<int> col_used(m.cols(), 0);
  std::vector<MonomialEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int in_row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == Scalar{}) continue;
      if (++in_row > 1 || ++col_used[j] > 1) return std::nullopt;
      out.push_back({j, std::abs(m(i, j))});
    }
  }
  return out;
}

struct VertexMax {
  double value = 0.0;
  std::vector<double> signs;
};

// max ‖Aδ‖_q over δ ∈ {±1}^cols with δ_0 = +1 (the norm is even in δ).
// Gray-code walk: one column update per step, periodic resync against drift.
VertexMax max_over_sign_vectors(std::span<const double> a, std::size_t rows, std::size_t cols, const Exponent& q) {
  std::vector<double> colmajor(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) colmajor[j * rows + i] = a[i * cols + j];

  std::vector<double> delta(cols, 1.0);
  std::vector<double> s(rows, 0.0);
  auto resync = [&] {
    std::fill(s.begin(), s.end(), 0.0);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) s[i] += colmajor[j * rows + i] * delta[j];
  };
  resync();

  const bool q_one = q.is_one(), q_inf = q.is_infinite(), q_two = q.is_two();
  const double qv = q.value();
  // Monotone surrogate of ‖s‖_q: the root is taken once at the end.
  auto score = [&]() {
    double t = 0.0;
    if (q_inf) {
      for (double x : s) t = std::max(t, std::abs(x));
    } else if (q_one) {
      for (double x : s) t += std::abs(x);
    } else if (q_two) {
      for (double x : s) t += x * x;
    } else {
      for (double x : s) t += std::pow(std::abs(x), qv);
    }
    return t;
  };

  const std::uint64_t count = std::uint64_t{1} << (cols - 1);
  double best = -1.0;
  std::uint64_t best_gray = 0;
  for (std::uint64_t g = 0;; ++g) {
    const double t = score();
    if (t > best) {
      best = t;
      best_gray = g ^ (g >> 1);
    }
    if (g + 1 == count) break;
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(g + 1)) + 1;
    delta[j] = -delta[j];
    const double f = 2.0 * delta[j];
    const double* c = colmajor.data() + j * rows;
    for (std::size_t i = 0; i < rows; ++i) s[i] += f * c[i];
    if (((g + 1) & 4095) == 0) resync();
  }

  VertexMax out;
  out.signs.assign(cols, 1.0);
  for (std::size_t k = 0; k + 1 < cols; ++k)
    if ((best_gray >> k) & 1) out.signs[k + 1] = -1.0;
  delta = out.signs;
  resync();
  out.value = vector_norm(std::span<const double>(s), q);
  return out;
}

std::vector<Scalar> to_scalars(std::span<const double> v) { return {v.begin(), v.end()}; }

bool vertex_columns_ok(const DenseMatrix& m, const Exponent& p, const NormOptions& o) {
  return p.is_infinite() && m.is_real() && m.cols() <= o.enumeration_cap;
}

bool vertex_rows_ok(const DenseMatrix& m, const Exponent& q, const NormOptions& o) {
  return q.is_one() && m.is_real() && m.rows() <= o.enumeration_cap;
}

std::optional<NormPath> choose_path(const DenseMatrix& m, const Exponent& p, const Exponent& q,
                                    const NormOptions& opts) {
  if (m.is_zero()) return NormPath::zero;
  if (m.rows() == 1 && m.cols() == 1) return NormPath::scalar;
  if (p.is_one()) return NormPath::max_column;
  if (q.is_infinite()) return NormPath::max_row;
  if (rank_one_factors(m)) return NormPath::rank_one;
  if (monomial_entries(m)) return NormPath::monomial;
  if (p.is_two() && q.is_two()) return NormPath::spectral;
  const bool cols_ok = vertex_columns_ok(m, p, opts);
  const bool rows_ok = vertex_rows_ok(m, q, opts);
  if (cols_ok && rows_ok) return m.rows() < m.cols() ? NormPath::vertex_rows : NormPath::vertex_columns;
  if (cols_ok) return NormPath::vertex_columns;
  if (rows_ok) return NormPath::vertex_rows;
  return std::nullopt;
}

NormResult vertex_columns_norm(const DenseMatrix& m, const Exponent& p, const Exponent& q) {
  const auto a = m.real_entries();
  auto best = max_over_sign_vectors(a, m.rows(), m.cols(), q);
  return make_result(best.value, NormKind::exact, NormPath::vertex_columns, p, q, to_scalars(best.signs));
}

// ‖M‖_{p,1} = ‖M^T‖_{∞,p*}: enumerate sign vectors over the rows of M.
NormResult vertex_rows_norm(const DenseMatrix& m, const Exponent& p, const Exponent& q) {
  const DenseMatrix t = m.transpose();
  const auto a = t.real_entries();
  const Exponent ps = p.conjugate();
  auto best = max_over_sign_vectors(a, t.rows(), t.cols(), ps);
  std::vector<double> w(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w[j] += m.real_at(i, j) * best.signs[i];
  auto z = holder_dual(to_scalars(w), ps);
  for (auto& x : z) x = x.real();
  return make_result(best.value, NormKind::exact, NormPath::vertex_rows, p, q, std::move(z));
}

}  // namespace

double vector_norm(std::span<const Scalar> v, const Exponent& p) { return generic_norm(v, p); }
double vector_norm(std::span<const double> v, const Exponent& p) { return generic_norm(v, p); }

std::vector<Scalar> holder_dual(std::span<const Scalar> v, const Exponent& r) {
  if (v.empty()) throw DimensionError("holder_dual of an empty vector");
  std::size_t k = 0;
  double mx = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > mx) {
      mx = std::abs(v[i]);
      k = i;
    }
  std::vector<Scalar> z(v.size());
  if (mx == 0.0) {
    z[0] = 1.0;
    return z;
  }
  if (r.is_infinite()) {
    z[k] = phase(v[k]);
    return z;
  }
  if (r.is_one()) {
    for (std::size_t i = 0; i < v.size(); ++i) z[i] = v[i] == Scalar{} ? Scalar{} : phase(v[i]);
    return z;
  }
  const double e = r.value() - 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = phase(v[i]) * std::pow(std::abs(v[i]) / mx, e);
  return z;
}

double norm_ratio(const DenseMatrix& m, std::span<const Scalar> z, const Exponent& p, const Exponent& q) {
  if (z.size() != m.cols()) throw DimensionError("certificate length does not match matrix columns");
  const double den = vector_norm(z, p);
  if (den == 0.0) throw DegenerateInputError("norm_ratio of a zero vector");
  const auto w = multiply(m, z);
  return vector_norm(std::span<const Scalar>(w), q) / den;
}

bool has_exact_path(const DenseMatrix& m, const Exponent& p, const Exponent& q, const NormOptions& opts) {
  return choose_path(m, p, q, opts).has_value();
}

NormResult pq_norm_exact(const DenseMatrix& m, const Exponent& p, const Exponent& q, const NormOptions& opts) {
  const auto path = choose_path(m, p, q, opts);
  if (!path) {
    throw UnsupportedNormError("no exact route for the (" + p.to_string() + "," + q.to_string() + ")-norm of a " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " " +
                               to_string(m.field()) + " matrix; use pq_norm_lower_heuristic for a lower bound");
  }
  switch (*path) {
    case NormPath::zero:
      return make_result(0.0, NormKind::exact, *path, p, q, basis_vector(m.cols(), 0));
    case NormPath::scalar:
      return make_result(std::abs(m(0, 0)), NormKind::exact, *path, p, q, std::vector<Scalar>{1.0});
    case NormPath::max_column: {
      double best = -1.0;
      std::size_t bj = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto c = m.column(j);
        const double v = vector_norm(std::span<const Scalar>(c), q);
        if (v > best) {
          best = v;
          bj = j;
        }
      }
      return make_result(best, NormKind::exact, *path, p, q, basis_vector(m.cols(), bj));
    }
    case NormPath::max_row: {
      const Exponent ps = p.conjugate();
      double best = -1.0;
      std::size_t bi = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        const double v = vector_norm(m.row(i), ps);
        if (v > best) {
          best = v;
          bi = i;
        }
      }
      std::vector<Scalar> conj_row(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) conj_row[j] = std::conj(m(bi, j));
      return make_result(best, NormKind::exact, *path, p, q, holder_dual(conj_row, ps));
    }
    case NormPath::rank_one: {
      auto f = *rank_one_factors(m);
      const Exponent ps = p.conjugate();
      const double value =
          vector_norm(std::span<const Scalar>(f.u), q) * vector_norm(std::span<const Scalar>(f.v), ps);
      for (auto& x : f.v) x = std::conj(x);
      return make_result(value, NormKind::exact, *path, p, q, holder_dual(f.v, ps));
    }
    case NormPath::monomial: {
      const auto entries = *monomial_entries(m);
      std::vector<double> d;
      for (const auto& e : entries) d.push_back(e.modulus);
      std::vector<Scalar> z(m.cols());
      if (p <= q) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < d.size(); ++i)
          if (d[i] > d[k]) k = i;
        z[entries[k].col] = 1.0;
        return make_result(d[k], NormKind::exact, *path, p, q, std::move(z));
      }
      // Hölder: ‖d∘w‖_q <= ‖d‖_s ‖w‖_p with 1/s = 1/q - 1/p, equality at w = |d|^{s/p}.
      const Rational inv_s = q.reciprocal() - p.reciprocal();
      const Exponent s = Exponent::from_reciprocal(inv_s);
      const Rational power = p.reciprocal() / inv_s;
      const double mx = *std::max_element(d.begin(), d.end());
      for (const auto& e : entries) z[e.col] = mmt::pow(e.modulus / mx, power);
      return make_result(vector_norm(std::span<const double>(d), s), NormKind::exact, *path, p, q, std::move(z));
    }
    case NormPath::spectral: {
      Eigen::MatrixXcd a(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinV);
      std::vector<Scalar> z(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        z[j] = svd.matrixV()(static_cast<Eigen::Index>(j), 0);
        if (m.is_real()) z[j] = z[j].real();
      }
      return make_result(svd.singularValues()(0), NormKind::exact, *path, p, q, std::move(z));
    }
    case NormPath::vertex_columns:
      return vertex_columns_norm(m, p, q);
    case NormPath::vertex_rows:
      return vertex_rows_norm(m, p, q);
    case NormPath::heuristic:
    case NormPath::comparison_bound:
      break;
  }
  throw UnsupportedNormError("unreachable norm path");
}

NormResult infty_one_norm_exact(const DenseMatrix& m, const NormOptions& opts) {
  const Exponent inf = Exponent::infinity(), one = Exponent::from_value(1);
  if (!m.is_real()) {
    throw UnsupportedNormError("exact (inf,1)-norm is only available over the reals");
  }
  if (m.is_zero()) return make_result(0.0, NormKind::exact, NormPath::zero, inf, one, basis_vector(m.cols(), 0));
  if (std::min(m.rows(), m.cols()) > opts.enumeration_cap) {
    throw SizeError("(inf,1)-norm enumeration needs min(rows, cols) <= " + std::to_string(opts.enumeration_cap) +
                    "; use infty_one_norm_heuristic for a lower bound");
  }
  return m.rows() < m.cols() ? vertex_rows_norm(m, inf, one) : vertex_columns_norm(m, inf, one);
}

namespace detail {

// One alternating sign ascent from delta; returns ε^T M δ after every half-step.
std::vector<double> infty_one_ascent(const DenseMatrix& m, std::vector<double>& delta) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<double> eps(rows, 1.0);
  std::vector<double> trace;
  auto bilinear = [&] {
    double t = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < cols; ++j) acc += m.real_at(i, j) * delta[j];
      t += eps[i] * acc;
    }
    return t;
  };
  trace.push_back(bilinear());
  for (std::size_t iter = 0; iter < 10000; ++iter) {
    bool flipped = false;
    for (std::size_t i = 0; i < rows; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < cols; ++j) acc += m.real_at(i, j) * delta[j];
      const double s = acc >= 0.0 ? 1.0 : -1.0;
      flipped |= s != eps[i];
      eps[i] = s;
    }
    trace.push_back(bilinear());
    for (std::size_t j = 0; j < cols; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rows; ++i) acc += m.real_at(i, j) * eps[i];
      const double s = acc >= 0.0 ? 1.0 : -1.0;
      flipped |= s != delta[j];
      delta[j] = s;
    }
    trace.push_back(bilinear());
    if (!flipped) break;
  }
  return trace;
}

}  // namespace detail

NormResult infty_one_norm_heuristic(const DenseMatrix& m, std::size_t restarts, std::uint64_t seed) {
  const Exponent inf = Exponent::infinity(), one = Exponent::from_value(1);
  if (!m.is_real()) throw UnsupportedNormError("(inf,1) sign ascent is only available over the reals");
  const std::size_t runs = std::max<std::size_t>(restarts, 1);
  double best = -1.0;
  std::vector<double> best_delta;
  for (std::size_t r = 0; r < runs; ++r) {
    std::vector<double> delta(m.cols(), 1.0);
    if (r > 0) {
      Rng rng(sub_seed(seed, r));
      for (auto& d : delta) d = random_sign(rng);
    }
    detail::infty_one_ascent(m, delta);
    std::vector<Scalar> z(delta.begin(), delta.end());
    const auto w = multiply(m, z);
    const double v = vector_norm(std::span<const Scalar>(w), one);
    if (v > best || (v == best && std::lexicographical_compare(delta.begin(), delta.end(), best_delta.begin(),
                                                               best_delta.end()))) {
      best = v;
      best_delta = delta;
    }
  }
  return make_result(best, NormKind::lower_bound, NormPath::heuristic, inf, one, to_scalars(best_delta));
}

NormResult pq_norm_lower_heuristic(const DenseMatrix& m, const Exponent& p, const Exponent& q,
                                   std::size_t restarts, std::uint64_t seed) {
  const Exponent ps = p.conjugate();
  const std::size_t n = m.cols();
  std::vector<std::vector<Scalar>> starts;
  starts.emplace_back(n, Scalar(1.0));
  for (std::size_t j = 0; j < n; ++j) starts.push_back(basis_vector(n, j));
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(sub_seed(seed, r));
    std::vector<Scalar> z(n);
    for (auto& x : z) x = m.is_real() ? Scalar(standard_normal(rng)) : Scalar(standard_normal(rng), standard_normal(rng));
    starts.push_back(std::move(z));
  }

  double best = -1.0;
  std::vector<Scalar> best_z = basis_vector(n, 0);
  for (auto& z : starts) {
    double val = norm_ratio(m, z, p, q);
    for (int iter = 0; iter < 500; ++iter) {
      const auto w = multiply(m, z);
      if (vector_norm(std::span<const Scalar>(w), q) == 0.0) break;
      const auto g = holder_dual(w, q);
      const auto h = multiply_adjoint(m, g);
      bool nonzero = false;
      for (const auto& x : h) nonzero |= x != Scalar{};
      if (!nonzero) break;
      auto next = holder_dual(h, ps);
      if (m.is_real())
        for (auto& x : next) x = x.real();
      const double nv = norm_ratio(m, next, p, q);
      if (!(nv > val * (1.0 + 1e-13))) {
        if (nv > val) {
          val = nv;
          z = std::move(next);
        }
        break;
      }
      val = nv;
      z = std::move(next);
    }
    if (val > best) {
      best = val;
      best_z = z;
    }
  }
  return make_result(best, NormKind::lower_bound, NormPath::heuristic, p, q, std::move(best_z));
}

double spectral_norm(const DenseMatrix& m) {
  if (m.is_zero()) return 0.0;
  Eigen::MatrixXcd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

NormResult pq_norm_upper_bound(const DenseMatrix& m, const Exponent& p, const Exponent& q) {
  if (m.is_zero()) return make_result(0.0, NormKind::exact, NormPath::zero, p, q, basis_vector(m.cols(), 0));
  const Exponent two = Exponent::from_value(2);
  const double c = frobenius_comparison_constant(q, two, m.rows()) * frobenius_comparison_constant(two, p, m.cols());
  return make_result(c * spectral_norm(m), NormKind::upper_bound, NormPath::comparison_bound, p, q, std::nullopt);
}

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double frobenius_comparison_constant(const Exponent& p, const Exponent& q, std::size_t n) {
  if (n == 0) throw DomainError("frobenius_comparison_constant needs n >= 1");
  return mmt::pow(static_cast<double>(n), max(Rational(0), p.reciprocal() - q.reciprocal()));
}

}  // namespace mmt
