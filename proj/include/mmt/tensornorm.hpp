#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmt/dense_matrix.hpp"
#include "mmt/exponent.hpp"
#include "mmt/matnorm.hpp"

namespace mmt {

struct Dims {
  std::size_t l = 1, m = 1, n = 1;
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// (X, M, Y) with X l×m, M m×n, Y n×l, none of them zero.
class FeasibleTriple {
 public:
  FeasibleTriple(DenseMatrix x, DenseMatrix m, DenseMatrix y);

  const DenseMatrix& x() const noexcept { return x_; }
  const DenseMatrix& m() const noexcept { return m_; }
  const DenseMatrix& y() const noexcept { return y_; }
  Dims dims() const noexcept { return {x_.rows(), x_.cols(), m_.cols()}; }

  /// (M, Y, X): a certificate for rotate_exponents(e) with dims (m, n, l).
  FeasibleTriple rotated() const;
  /// (Y†, M†, X†): a certificate for conjugate_triple(e) with dims (l, n, m).
  FeasibleTriple conjugated() const;
  FeasibleTriple scaled(Scalar cx, Scalar cm, Scalar cy) const;

 private:
  DenseMatrix x_, m_, y_;
};

/// (p,q,r) -> (r,p,q): the exponents paired with FeasibleTriple::rotated.
ExponentTriple rotate_exponents(const ExponentTriple& e);

/// How the three denominator norms may be obtained.
enum class QuotientMode {
  exact,           ///< exact paths only; UnsupportedNormError otherwise
  sound,           ///< exact, else the comparison upper bound; the quotient stays a lower bound
  best_available,  ///< exact, else a heuristic lower bound; the quotient may overshoot
};

struct QuotientOptions {
  QuotientMode mode = QuotientMode::exact;
  NormOptions norm;
  std::size_t heuristic_restarts = 16;
  std::uint64_t seed = 42;
};

struct Quotient {
  double value = 0.0;
  /// False when some denominator is a heuristic lower bound.
  bool certified = true;
  double trace_abs = 0.0;
  /// ‖X‖_{p,q}, ‖Y‖_{q,r}, ‖M‖_{r,p}.
  std::array<NormResult, 3> norms;
};

/// |tr(XMY)| / (‖X‖_{p,q} ‖Y‖_{q,r} ‖M‖_{r,p}).
Quotient quotient(const FeasibleTriple& t, const ExponentTriple& e, const QuotientOptions& opts = {});

/// |tr(XMY)| / (‖X‖_F ‖M‖_F ‖Y‖_F).
double spectral_quotient(const FeasibleTriple& t);

struct AscentConfig {
  std::size_t restarts = 100;
  std::size_t max_sweeps = 500;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  NormOptions norm;
  /// Record the objective after every sweep of every restart.
  bool keep_trace = false;
};

struct TensorNormEstimate {
  /// Certified lower bound on ‖μ_{l,m,n}‖_{p,q,r}.
  double value = 0.0;
  std::optional<FeasibleTriple> certificate;
  ExponentTriple triple;
  Dims dims;
  std::size_t restarts_used = 0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  /// Which candidate family produced the value.
  std::string source;
  /// Quotient against a heuristic denominator; never a certificate.
  std::optional<double> unsound_value;
  /// Objective per sweep, restart after restart (keep_trace only).
  std::vector<std::vector<double>> trace;
};

/// Alternating unit-vector ascent on sum_ij M_ij <x_i, y_j> with x_i, y_j in R^l,
/// divided by ‖M‖_{∞,1}. Real M only.
TensorNormEstimate grothendieck_ascent(const DenseMatrix& m, std::size_t l, const AscentConfig& config = {});

/// Best certified quotient over structured candidates and ascent searches.
TensorNormEstimate estimate_tensor_norm(const Dims& dims, const ExponentTriple& e, const AscentConfig& config = {});

/// max over the inputs of grothendieck_ascent; a lower bound on K_G(l).
TensorNormEstimate kg_lower_bound(const std::vector<DenseMatrix>& matrices, std::size_t l,
                                  const AscentConfig& config = {});

}  // namespace mmt
