#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mmt/dense_matrix.hpp"
#include "mmt/exponent.hpp"
#include "mmt/tensornorm.hpp"

namespace mmt {

struct GrothendieckConstantConfig {
  Field field = Field::real;
  double kg_upper = proven_upper(Field::real);

  /// π/(2 ln(1+√2)) over the reals; 1.4049 over the complexes.
  static double proven_upper(Field f);
  static GrothendieckConstantConfig for_field(Field f) { return {f, proven_upper(f)}; }
  /// True when kg_upper is at least the proven bound, so any violation is a bug.
  bool is_proven() const { return kg_upper >= proven_upper(field); }
};

/// kg · l^{|1/q-1/2|} · m^{1-1/p} · n^{1/r}.
double upper_bound(const Dims& d, const ExponentTriple& e, const GrothendieckConstantConfig& cfg = {});
/// 1 / (l^{|1/q-1/2|} · m^{|1/p-1/2|} · n^{|1/r-1/2|}).
double lower_bound(const Dims& d, const ExponentTriple& e);

struct SandwichReport {
  Dims dims;
  ExponentTriple triple;
  double lower = 0.0;
  TensorNormEstimate estimate;
  double upper = 0.0;
  bool holds = true;
};

/// Throws SandwichViolation on lower <= estimate <= upper failing while kg_upper is proven;
/// with a smaller kg_upper the violation is only reported through `holds`.
SandwichReport sandwich(const Dims& d, const ExponentTriple& e, const GrothendieckConstantConfig& cfg = {},
                        const AscentConfig& ascent = {});

/// lower <= value <= upper for a value obtained elsewhere.
bool within_sandwich(const Dims& d, const ExponentTriple& e, double value, const GrothendieckConstantConfig& cfg = {});

enum class DivergenceCase {
  I,              ///< (1,q,∞), 2 < q <= ∞
  I_conjugate,    ///< (1,q,∞), 1 <= q < 2
  II,             ///< (1,∞,r), 1 < r < 2
  II_conjugate,   ///< (1,∞,r), 2 < r < ∞
  II_r2,          ///< (1,∞,2)
};

const char* to_string(DivergenceCase c);
DivergenceCase parse_divergence_case(const std::string& s);

struct DivergenceSpec {
  DivergenceCase kind = DivergenceCase::I;
  /// q for the Case I variants, r for Case II.
  Exponent param = Exponent::infinity();
};

/// Throws DomainError when param is outside the case's range.
void validate(const DivergenceSpec& s);
ExponentTriple divergence_exponents(const DivergenceSpec& s);
/// g with quotient(n) >= n^g.
Rational divergence_growth(const DivergenceSpec& s);
/// The n×n×n triple of the case (constant scalings omitted; the quotient ignores them).
FeasibleTriple divergence_triple(const DivergenceSpec& s, std::size_t n);

struct DivergencePoint {
  std::size_t n = 0;
  double quotient = 0.0;
  double floor = 0.0;
  /// All three denominators exact (otherwise the comparison upper bound stood in).
  bool exact = true;
  bool floor_holds = true;
};

/// Quotient of the case's triple at size n (a power of two), sound above the enumeration cap.
DivergencePoint divergence_experiment(const DivergenceSpec& s, std::size_t n, const NormOptions& opts = {});

/// Lexicographically smallest triple among the rotations of e and of its conjugate.
ExponentTriple canonicalize(const ExponentTriple& e);

/// Least-squares slope of log2(values) against log2(ns).
double loglog_slope(const std::vector<std::size_t>& ns, const std::vector<double>& values);

struct UniquenessVerdict {
  enum class Kind { bounded_candidate, diverges } kind = Kind::bounded_candidate;
  ExponentTriple input;
  ExponentTriple canonical;
  /// "identity", "case-I", "case-II", "case-II-r2"; empty for bounded candidates.
  std::string construction;
  /// Triple the sequence was evaluated at (same tensor norm as the input).
  ExponentTriple evaluated;
  Rational growth;
  double slope = 0.0;
  bool floors_hold = true;
  bool slope_ok = true;
  std::vector<DivergencePoint> points;
};

inline constexpr double kSlopeTolerance = 0.05;

/// bounded-candidate for the orbit of (1,2,∞); otherwise measures a divergent sequence.
/// Needs at least three sizes; the Hadamard constructions need powers of two.
UniquenessVerdict uniqueness_verdict(const ExponentTriple& e, const std::vector<std::size_t>& sizes,
                                     const NormOptions& opts = {});

}  // namespace mmt
