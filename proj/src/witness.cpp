#include "mmt/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "mmt/errors.hpp"

namespace mmt {

const char* to_string(WitnessTag t) {
  switch (t) {
    case WitnessTag::E: return "E";
    case WitnessTag::C: return "C";
    case WitnessTag::R: return "R";
    case WitnessTag::J: return "J";
    case WitnessTag::IPad: return "IPad";
    case WitnessTag::Hadamard: return "Hadamard";
  }
  return "?";
}

WitnessTag parse_witness_tag(const std::string& s) {
  if (s == "E") return WitnessTag::E;
  if (s == "C") return WitnessTag::C;
  if (s == "R") return WitnessTag::R;
  if (s == "J") return WitnessTag::J;
  if (s == "I" || s == "IPad") return WitnessTag::IPad;
  if (s == "H" || s == "Hadamard") return WitnessTag::Hadamard;
  throw ParseError("unknown witness kind '" + s + "' (expected E, C, R, J, IPad or Hadamard)", 0);
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Matrix<std::int64_t> sylvester_hadamard(std::size_t n) {
  if (!is_power_of_two(n)) throw DomainError("Sylvester Hadamard size must be a power of two, got " + std::to_string(n));
  Matrix<std::int64_t> h(1, 1, 1);
  for (std::size_t s = 1; s < n; s *= 2) {
    Matrix<std::int64_t> next(2 * s, 2 * s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        next(i, j) = h(i, j);
        next(i, j + s) = h(i, j);
        next(i + s, j) = h(i, j);
        next(i + s, j + s) = -h(i, j);
      }
    h = std::move(next);
  }
  return h;
}

bool hadamard_gram_exact(const Matrix<std::int64_t>& h) {
  if (h.rows() != h.cols()) return false;
  const auto n = static_cast<std::int64_t>(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t k = 0; k < h.rows(); ++k) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < h.cols(); ++j) s += h(i, j) * h(k, j);
      if (s != (i == k ? n : 0)) return false;
    }
  return true;
}

Matrix<std::int64_t> make_witness(const WitnessKind& kind) {
  const std::size_t r = kind.rows, c = kind.cols;
  if (r == 0 || c == 0) throw DimensionError("witness dimensions must be >= 1");
  Matrix<std::int64_t> w(r, c);
  switch (kind.tag) {
    case WitnessTag::E:
      w(0, 0) = 1;
      break;
    case WitnessTag::C:
      for (std::size_t i = 0; i < r; ++i) w(i, 0) = 1;
      break;
    case WitnessTag::R:
      for (std::size_t j = 0; j < c; ++j) w(0, j) = 1;
      break;
    case WitnessTag::J:
      w = Matrix<std::int64_t>(r, c, 1);
      break;
    case WitnessTag::IPad:
      for (std::size_t i = 0; i < std::min(r, c); ++i) w(i, i) = 1;
      break;
    case WitnessTag::Hadamard:
      if (r != c) throw DomainError("Hadamard witness must be square");
      w = sylvester_hadamard(r);
      break;
  }
  return w;
}

DenseMatrix witness_matrix(const WitnessKind& kind) { return DenseMatrix::from_integers(make_witness(kind)); }

double identity_pq_norm(std::size_t m, std::size_t n, const Exponent& p, const Exponent& q) {
  if (p < q) return 1.0;
  return mmt::pow(static_cast<double>(std::min(m, n)), q.reciprocal() - p.reciprocal());
}

double sharpness_rhs(const FeasibleTriple& t, const ExponentTriple& e) {
  const Exponent one = Exponent::from_value(1), two = Exponent::from_value(2), inf = Exponent::infinity();
  const ExponentTriple g{one, two, inf};
  const Quotient base = quotient(t, g);
  const Dims d = t.dims();
  const Rational half(1, 2);
  return base.value * mmt::pow(static_cast<double>(d.l), abs(e.q.reciprocal() - half)) *
         mmt::pow(static_cast<double>(d.m), Rational(1) - e.p.reciprocal()) *
         mmt::pow(static_cast<double>(d.n), e.r.reciprocal());
}

SharpnessReport sharpness_check(const Dims& dims, const ExponentTriple& e, double tol) {
  SharpnessReport rep;
  rep.dims = dims;
  rep.triple = e;
  const bool low_q = e.q <= Exponent::from_value(2);
  const DenseMatrix j = witness_matrix({WitnessTag::J, dims.m, dims.n});
  const FeasibleTriple t = low_q ? FeasibleTriple(witness_matrix({WitnessTag::E, dims.l, dims.m}), j,
                                                  witness_matrix({WitnessTag::R, dims.n, dims.l}))
                                 : FeasibleTriple(witness_matrix({WitnessTag::C, dims.l, dims.m}), j,
                                                  witness_matrix({WitnessTag::E, dims.n, dims.l}));
  rep.witnesses = low_q ? "E,R,J" : "C,E,J";
  rep.lhs = quotient(t, e).value;
  rep.rhs = sharpness_rhs(t, e);
  rep.relerr = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), std::numeric_limits<double>::min());
  rep.equal = rep.relerr <= tol;
  return rep;
}

int identity_branch(const ExponentTriple& e) {
  const auto& [p, q, r] = e;
  if (p <= q && q <= r) return 0;
  if (p <= r && r <= q) return 1;
  if (q <= p && p <= r) return 2;
  if (q <= r && r <= p) return 3;
  if (r <= p && p <= q) return 4;
  return 5;
}

namespace {

// Exponents of min(m,n), min(l,n), min(l,m) in the branch formula.
std::array<Rational, 3> branch_exponents(const ExponentTriple& e) {
  const Rational ip = e.p.reciprocal(), iq = e.q.reciprocal(), ir = e.r.reciprocal();
  switch (identity_branch(e)) {
    case 0: return {ir - ip, 0, 0};
    case 1: return {ir - ip, iq - ir, 0};
    case 2: return {ir - ip, 0, ip - iq};
    case 3: return {0, 0, ip - iq};
    case 4: return {0, iq - ir, 0};
    default: return {0, iq - ir, ip - iq};
  }
}

}  // namespace

double identity_quotient_closed_form(const Dims& d, const ExponentTriple& e) {
  const auto ex = branch_exponents(e);
  const double lead = static_cast<double>(std::min({d.l, d.m, d.n}));
  return lead * mmt::pow(static_cast<double>(std::min(d.m, d.n)), ex[0]) *
         mmt::pow(static_cast<double>(std::min(d.l, d.n)), ex[1]) *
         mmt::pow(static_cast<double>(std::min(d.l, d.m)), ex[2]);
}

FeasibleTriple identity_triple(const Dims& d) {
  return FeasibleTriple(witness_matrix({WitnessTag::IPad, d.l, d.m}), witness_matrix({WitnessTag::IPad, d.m, d.n}),
                        witness_matrix({WitnessTag::IPad, d.n, d.l}));
}

double identity_quotient_direct(const Dims& d, const ExponentTriple& e) { return quotient(identity_triple(d), e).value; }

Rational identity_growth_exponent(const ExponentTriple& e) {
  const auto ex = branch_exponents(e);
  return Rational(1) + ex[0] + ex[1] + ex[2];
}

}  // namespace mmt
