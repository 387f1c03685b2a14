#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmt/dense_matrix.hpp"
#include "mmt/exponent.hpp"

namespace mmt {

/// How a reported norm value relates to the true ‖M‖_{p,q}.
enum class NormKind {
  exact,        ///< closed form, enumeration, or SVD
  lower_bound,  ///< value of an explicit certificate; never above the true norm
  upper_bound,  ///< analytic comparison bound; never below the true norm
};

const char* to_string(NormKind k);

/// The exact evaluation route taken by pq_norm_exact.
enum class NormPath {
  zero,
  scalar,
  max_column,     ///< p = 1
  max_row,        ///< q = ∞
  rank_one,       ///< ‖u v^T‖_{p,q} = ‖u‖_q ‖v‖_{p*}
  monomial,       ///< at most one nonzero per row and column
  spectral,       ///< (2,2): largest singular value
  vertex_columns, ///< p = ∞: maximise ‖Mδ‖_q over δ ∈ {±1}^cols
  vertex_rows,    ///< q = 1: ‖M‖_{p,1} = max_ε ‖M^T ε‖_{p*}
  heuristic,
  comparison_bound,
};

const char* to_string(NormPath p);

struct NormResult {
  double value = 0.0;
  NormKind kind = NormKind::exact;
  NormPath path = NormPath::zero;
  Exponent p, q;
  /// z with ‖Mz‖_q / ‖z‖_p == value, when the path produces one.
  std::optional<std::vector<Scalar>> certificate;
};

struct NormOptions {
  /// Largest side enumerated over {±1}^side by the vertex paths.
  std::size_t enumeration_cap = 20;
};

/// Hölder p-norm. Throws DimensionError on empty input.
double vector_norm(std::span<const Scalar> v, const Exponent& p);
double vector_norm(std::span<const double> v, const Exponent& p);

/// z_j = phase(v_j) |v_j|^{r-1}, so that sum conj(v_j) z_j = ‖v‖_r ‖z‖_{r*}.
/// For r = ∞ the vector is phase(v_k) e_k at the first index of largest modulus.
std::vector<Scalar> holder_dual(std::span<const Scalar> v, const Exponent& r);

/// ‖Mz‖_q / ‖z‖_p. Throws DegenerateInputError when z = 0.
double norm_ratio(const DenseMatrix& m, std::span<const Scalar> z, const Exponent& p, const Exponent& q);

/// True when pq_norm_exact has a route for (M, p, q).
bool has_exact_path(const DenseMatrix& m, const Exponent& p, const Exponent& q, const NormOptions& opts = {});

/// ‖M‖_{p,q} by an exact route; throws UnsupportedNormError otherwise.
///
/// Routes, tried in order: zero matrix, 1x1, p = 1, q = ∞, rank one,
/// monomial, (2,2), then sign-vertex enumeration for p = ∞ or q = 1 on real
/// matrices whose enumerated side is within the cap.
NormResult pq_norm_exact(const DenseMatrix& m, const Exponent& p, const Exponent& q, const NormOptions& opts = {});

/// ‖M‖_{∞,1} = max over sign vectors, enumerating {±1}^{min(m,n)}.
/// Real matrices only; SizeError above the cap.
NormResult infty_one_norm_exact(const DenseMatrix& m, const NormOptions& opts = {});

/// Alternating sign ascent for ‖M‖_{∞,1}; a lower bound.
NormResult infty_one_norm_heuristic(const DenseMatrix& m, std::size_t restarts, std::uint64_t seed);

/// Nonlinear power method on the p-sphere (a conditional-gradient ascent of
/// ‖Mz‖_q); a lower bound.
NormResult pq_norm_lower_heuristic(const DenseMatrix& m, const Exponent& p, const Exponent& q,
                                   std::size_t restarts, std::uint64_t seed);

/// c_{q,2}(rows) σ_max(M) c_{2,p}(cols) >= ‖M‖_{p,q}.
NormResult pq_norm_upper_bound(const DenseMatrix& m, const Exponent& p, const Exponent& q);

/// Largest singular value.
double spectral_norm(const DenseMatrix& m);

double frobenius_norm(const DenseMatrix& m);

/// c_{p,q}(n) = n^{max(0, 1/p - 1/q)}.
double frobenius_comparison_constant(const Exponent& p, const Exponent& q, std::size_t n);

namespace detail {
/// One sign-ascent run from `delta` (updated in place); the bilinear value after each half step.
std::vector<double> infty_one_ascent(const DenseMatrix& m, std::vector<double>& delta);
}  // namespace detail

}  // namespace mmt
