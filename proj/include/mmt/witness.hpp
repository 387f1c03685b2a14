#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "mmt/dense_matrix.hpp"
#include "mmt/exponent.hpp"
#include "mmt/matrix.hpp"
#include "mmt/tensornorm.hpp"

namespace mmt {

/// E: single 1 at (0,0). C: first column ones. R: first row ones. J: all ones.
/// IPad: identity padded with zero rows or columns. Hadamard: Sylvester, square.
enum class WitnessTag { E, C, R, J, IPad, Hadamard };

struct WitnessKind {
  WitnessTag tag = WitnessTag::E;
  std::size_t rows = 1, cols = 1;
};

const char* to_string(WitnessTag t);
/// "E", "C", "R", "J", "I"/"IPad", "H"/"Hadamard".
WitnessTag parse_witness_tag(const std::string& s);

/// Integer witness matrix. Hadamard needs rows == cols == 2^k (DomainError otherwise).
Matrix<std::int64_t> make_witness(const WitnessKind& kind);
DenseMatrix witness_matrix(const WitnessKind& kind);

/// Sylvester H_n = [[1,1],[1,-1]]^{⊗k}, n = 2^k.
Matrix<std::int64_t> sylvester_hadamard(std::size_t n);
bool is_power_of_two(std::size_t n) noexcept;
/// H H^T == n I in integer arithmetic.
bool hadamard_gram_exact(const Matrix<std::int64_t>& h);

/// ‖I_{m,n}‖_{p,q}: min(m,n)^{1/q-1/p} when p >= q, else 1.
double identity_pq_norm(std::size_t m, std::size_t n, const Exponent& p, const Exponent& q);

struct SharpnessReport {
  Dims dims;
  ExponentTriple triple;
  /// "E,R,J" for q <= 2, "C,E,J" for q > 2 (X, Y, M).
  std::string witnesses;
  double lhs = 0.0, rhs = 0.0, relerr = 0.0;
  bool equal = false;
};

/// Both sides of the comparison
///   |tr XMY| / (‖X‖_{p,q}‖Y‖_{q,r}‖M‖_{r,p})
///     <= |tr XMY| / (‖X‖_{1,2}‖Y‖_{2,∞}‖M‖_{∞,1}) · l^{|1/q-1/2|} m^{1-1/p} n^{1/r}
/// on the extremal witnesses, with exact norms.
SharpnessReport sharpness_check(const Dims& dims, const ExponentTriple& e, double tol = 1e-10);

/// Right-hand side of the comparison above for an arbitrary triple.
double sharpness_rhs(const FeasibleTriple& t, const ExponentTriple& e);

/// Which of the six orderings selects the identity-triple formula (0..5, first match).
int identity_branch(const ExponentTriple& e);

/// Quotient of (I_{l,m}, I_{m,n}, I_{n,l}) from the six-branch formula.
double identity_quotient_closed_form(const Dims& dims, const ExponentTriple& e);
/// Same quotient evaluated from the matrices with exact norms.
double identity_quotient_direct(const Dims& dims, const ExponentTriple& e);
FeasibleTriple identity_triple(const Dims& dims);

/// Growth exponent of the identity quotient along l = 2n, m = n.
Rational identity_growth_exponent(const ExponentTriple& e);

}  // namespace mmt
