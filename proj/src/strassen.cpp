#include "mmt/strassen.hpp"

#include <algorithm>
#include <cmath>

namespace mmt {

Hypermatrix mu_hypermatrix(std::size_t l, std::size_t m, std::size_t n) {
  if (l == 0 || m == 0 || n == 0) throw DimensionError("mu_hypermatrix dimensions must be >= 1");
  Hypermatrix h{l * m, m * n, n * l, {}};
  h.entries.reserve(l * m * n);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) h.entries.push_back({i * m + j, j * n + k, k * l + i, 1.0});
  return h;
}

Scalar contract(const Hypermatrix& h, const DenseMatrix& x, const DenseMatrix& m, const DenseMatrix& y) {
  if (x.rows() * x.cols() != h.da || m.rows() * m.cols() != h.db || y.rows() * y.cols() != h.dc) {
    throw DimensionError("contract: flattened sizes do not match the hypermatrix shape");
  }
  const auto xs = x.entries(), ms = m.entries(), ys = y.entries();
  Scalar s{};
  for (const auto& e : h.entries) s += e.value * xs[e.a] * ms[e.b] * ys[e.c];
  return s;
}

RankCheck verify_rank_decomposition(const RankDecomposition& d, std::size_t l, std::size_t m, std::size_t n,
                                    double tol) {
  const Hypermatrix mu = mu_hypermatrix(l, m, n);
  const std::size_t da = mu.da, db = mu.db, dc = mu.dc;
  std::vector<double> dense(da * db * dc, 0.0);
  for (const auto& e : mu.entries) dense[(e.a * db + e.b) * dc + e.c] = e.value;
  for (const auto& t : d.terms) {
    if (t.u.size() != da || t.v.size() != db || t.w.size() != dc) {
      throw DimensionError("rank term vector lengths must be lm, mn, nl");
    }
    for (std::size_t a = 0; a < da; ++a) {
      if (t.u[a] == 0.0) continue;
      for (std::size_t b = 0; b < db; ++b) {
        if (t.v[b] == 0.0) continue;
        const double uv = t.weight * t.u[a] * t.v[b];
        for (std::size_t c = 0; c < dc; ++c) dense[(a * db + b) * dc + c] -= uv * t.w[c];
      }
    }
  }
  RankCheck r;
  for (double x : dense) r.max_error = std::max(r.max_error, std::abs(x));
  r.valid = r.max_error <= tol;
  return r;
}

RankDecomposition strassen_decomposition() {
  // u on A (a1 a2 a3 a4 = A00 A01 A10 A11), v on B (B00 B01 B10 B11),
  // w on the trace partner Y: w at k·2+i is the coefficient in C_ik.
  return {{
      {1, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 1}},
      {1, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}},
      {1, {-1, 0, 1, 0}, {0, 1, 0, -1}, {0, 1, 0, 1}},
      {1, {0, 0, 1, 1}, {-1, 1, 0, 0}, {0, 0, 1, 1}},
      {1, {-1, 0, 1, 1}, {1, -1, 0, 1}, {0, 1, 1, 1}},
      {1, {1, 1, -1, -1}, {0, 0, 0, 1}, {0, 0, 1, 0}},
      {1, {0, 0, 0, 1}, {-1, 1, 1, -1}, {0, 1, 0, 0}},
  }};
}

RankDecomposition trivial_decomposition(std::size_t l, std::size_t m, std::size_t n) {
  const Hypermatrix mu = mu_hypermatrix(l, m, n);
  RankDecomposition d;
  for (const auto& e : mu.entries) {
    RankTerm t;
    t.u.assign(mu.da, 0.0);
    t.v.assign(mu.db, 0.0);
    t.w.assign(mu.dc, 0.0);
    t.u[e.a] = t.v[e.b] = t.w[e.c] = 1.0;
    d.terms.push_back(std::move(t));
  }
  return d;
}

double omega_upper(std::size_t n, std::uint64_t r) {
  if (n < 2) throw DomainError("omega_upper needs n >= 2");
  if (r < static_cast<std::uint64_t>(n) * n) throw DomainError("rank of mu_{n,n,n} is at least n^2");
  return std::log(static_cast<double>(r)) / std::log(static_cast<double>(n));
}

}  // namespace mmt
