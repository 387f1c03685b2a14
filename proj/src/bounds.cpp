#include "mmt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mmt/errors.hpp"
#include "mmt/witness.hpp"

namespace mmt {

double GrothendieckConstantConfig::proven_upper(Field f) {
  return f == Field::real ? std::numbers::pi / (2.0 * std::log(1.0 + std::numbers::sqrt2)) : 1.4049;
}

namespace {

void check_dims(const Dims& d) {
  if (d.l == 0 || d.m == 0 || d.n == 0) throw DimensionError("tensor dimensions must be >= 1");
}

double dpow(std::size_t base, const Rational& e) { return mmt::pow(static_cast<double>(base), e); }

const Rational kHalf(1, 2);

}  // namespace

double upper_bound(const Dims& d, const ExponentTriple& e, const GrothendieckConstantConfig& cfg) {
  check_dims(d);
  return cfg.kg_upper * dpow(d.l, abs(e.q.reciprocal() - kHalf)) * dpow(d.m, Rational(1) - e.p.reciprocal()) *
         dpow(d.n, e.r.reciprocal());
}

double lower_bound(const Dims& d, const ExponentTriple& e) {
  check_dims(d);
  return 1.0 / (dpow(d.l, abs(e.q.reciprocal() - kHalf)) * dpow(d.m, abs(e.p.reciprocal() - kHalf)) *
                dpow(d.n, abs(e.r.reciprocal() - kHalf)));
}

bool within_sandwich(const Dims& d, const ExponentTriple& e, double value, const GrothendieckConstantConfig& cfg) {
  // Relative slack for rounding in the power evaluations only.
  constexpr double slack = 1e-12;
  return lower_bound(d, e) * (1.0 - slack) <= value && value <= upper_bound(d, e, cfg) * (1.0 + slack);
}

SandwichReport sandwich(const Dims& d, const ExponentTriple& e, const GrothendieckConstantConfig& cfg,
                        const AscentConfig& ascent) {
  check_dims(d);
  SandwichReport rep;
  rep.dims = d;
  rep.triple = e;
  rep.lower = lower_bound(d, e);
  rep.upper = upper_bound(d, e, cfg);
  rep.estimate = estimate_tensor_norm(d, e, ascent);
  rep.holds = within_sandwich(d, e, rep.estimate.value, cfg);
  if (!rep.holds && cfg.is_proven()) {
    throw SandwichViolation("sandwich violated at dims " + std::to_string(d.l) + "," + std::to_string(d.m) + "," +
                            std::to_string(d.n) + " triple " + e.to_string() + ": estimate " +
                            std::to_string(rep.estimate.value) + " outside [" + std::to_string(rep.lower) + ", " +
                            std::to_string(rep.upper) + "]");
  }
  return rep;
}

const char* to_string(DivergenceCase c) {
  switch (c) {
    case DivergenceCase::I: return "I";
    case DivergenceCase::I_conjugate: return "I-conjugate";
    case DivergenceCase::II: return "II";
    case DivergenceCase::II_conjugate: return "II-conjugate";
    case DivergenceCase::II_r2: return "II-r2";
  }
  return "?";
}

DivergenceCase parse_divergence_case(const std::string& s) {
  if (s == "I") return DivergenceCase::I;
  if (s == "I-conjugate") return DivergenceCase::I_conjugate;
  if (s == "II") return DivergenceCase::II;
  if (s == "II-conjugate") return DivergenceCase::II_conjugate;
  if (s == "II-r2") return DivergenceCase::II_r2;
  throw ParseError("unknown divergence case '" + s + "' (expected I, I-conjugate, II, II-conjugate, II-r2)", 0);
}

void validate(const DivergenceSpec& s) {
  const Exponent one = Exponent::from_value(1), two = Exponent::from_value(2);
  const Exponent& x = s.param;
  bool ok = false;
  switch (s.kind) {
    case DivergenceCase::I: ok = two < x; break;
    case DivergenceCase::I_conjugate: ok = x < two; break;
    case DivergenceCase::II: ok = one < x && x < two; break;
    case DivergenceCase::II_conjugate: ok = two < x && !x.is_infinite(); break;
    case DivergenceCase::II_r2: ok = x == two; break;
  }
  if (!ok) {
    throw DomainError(std::string("exponent ") + x.to_string() + " is outside the range of case " + to_string(s.kind));
  }
}

ExponentTriple divergence_exponents(const DivergenceSpec& s) {
  validate(s);
  const Exponent one = Exponent::from_value(1), inf = Exponent::infinity();
  switch (s.kind) {
    case DivergenceCase::I:
    case DivergenceCase::I_conjugate:
      return {one, s.param, inf};
    default:
      return {one, inf, s.param};
  }
}

Rational divergence_growth(const DivergenceSpec& s) {
  validate(s);
  const Rational inv = s.param.reciprocal();
  switch (s.kind) {
    case DivergenceCase::I: return kHalf - inv;
    case DivergenceCase::I_conjugate: return inv - kHalf;
    case DivergenceCase::II: return inv - kHalf;
    case DivergenceCase::II_conjugate: return kHalf - inv;
    case DivergenceCase::II_r2: return kHalf;
  }
  return Rational(0);
}

FeasibleTriple divergence_triple(const DivergenceSpec& s, std::size_t n) {
  validate(s);
  if (!is_power_of_two(n)) throw DomainError("divergence sizes must be powers of two, got " + std::to_string(n));
  const DenseMatrix h = DenseMatrix::from_integers(sylvester_hadamard(n));
  const DenseMatrix ht = h.transpose();
  const DenseMatrix id = DenseMatrix::identity(n);
  switch (s.kind) {
    case DivergenceCase::I:
      // X = sign(M^T) makes every term of tr(XM) = sum X_ij M_ji nonnegative.
      return FeasibleTriple(ht, h, id);
    case DivergenceCase::I_conjugate:
      return FeasibleTriple(ht, h, id).conjugated();
    case DivergenceCase::II:
    case DivergenceCase::II_r2:
      // tr(XH) = n^2 with X = H^T.
      return FeasibleTriple(ht, id, h);
    case DivergenceCase::II_conjugate:
      return FeasibleTriple(ht, id, h).rotated().conjugated();
  }
  throw DomainError("unknown divergence case");
}

DivergencePoint divergence_experiment(const DivergenceSpec& s, std::size_t n, const NormOptions& opts) {
  const FeasibleTriple t = divergence_triple(s, n);
  QuotientOptions qo;
  qo.mode = QuotientMode::sound;
  qo.norm = opts;
  const Quotient q = quotient(t, divergence_exponents(s), qo);
  DivergencePoint pt;
  pt.n = n;
  pt.quotient = q.value;
  pt.floor = dpow(n, divergence_growth(s));
  pt.exact = std::all_of(q.norms.begin(), q.norms.end(), [](const NormResult& r) { return r.kind == NormKind::exact; });
  pt.floor_holds = pt.quotient >= pt.floor * (1.0 - 1e-12);
  return pt;
}

ExponentTriple canonicalize(const ExponentTriple& e) {
  ExponentTriple best = e;
  for (ExponentTriple start : {e, conjugate_triple(e)}) {
    ExponentTriple t = start;
    for (int k = 0; k < 3; ++k, t = rotate_exponents(t)) best = std::min(best, t);
  }
  return best;
}

double loglog_slope(const std::vector<std::size_t>& ns, const std::vector<double>& values) {
  if (ns.size() != values.size()) throw DimensionError("slope fit needs one value per size");
  if (ns.size() < 3) throw DomainError("slope fit needs at least three points");
  double mx = 0.0, my = 0.0;
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    if (ns[k] == 0 || !(values[k] > 0.0)) throw DomainError("slope fit needs positive sizes and values");
    xs.push_back(std::log2(static_cast<double>(ns[k])));
    ys.push_back(std::log2(values[k]));
    mx += xs.back();
    my += ys.back();
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  if (sxx == 0.0) throw DomainError("slope fit needs at least two distinct sizes");
  return sxy / sxx;
}

namespace {

std::vector<ExponentTriple> orbit(const ExponentTriple& e) {
  std::vector<ExponentTriple> out;
  for (ExponentTriple start : {e, conjugate_triple(e)}) {
    ExponentTriple t = start;
    for (int k = 0; k < 3; ++k, t = rotate_exponents(t)) out.push_back(t);
  }
  return out;
}

void finish(UniquenessVerdict& v, const std::vector<std::size_t>& sizes) {
  std::vector<double> qs;
  for (const auto& p : v.points) {
    qs.push_back(p.quotient);
    v.floors_hold = v.floors_hold && p.floor_holds;
  }
  v.slope = loglog_slope(sizes, qs);
  v.slope_ok = v.slope >= v.growth.to_double() - kSlopeTolerance;
}

}  // namespace

UniquenessVerdict uniqueness_verdict(const ExponentTriple& e, const std::vector<std::size_t>& sizes,
                                     const NormOptions& opts) {
  if (sizes.size() < 3) throw DomainError("uniqueness verdict needs at least three sizes");
  UniquenessVerdict v;
  v.input = e;
  v.canonical = canonicalize(e);
  v.evaluated = e;
  if (v.canonical == grothendieck_triple()) return v;
  v.kind = UniquenessVerdict::Kind::diverges;

  // Identity triples along l = 2n, m = n, on whichever rotation grows fastest.
  ExponentTriple best_rot = e;
  Rational best_g = identity_growth_exponent(e);
  ExponentTriple t = rotate_exponents(e);
  for (int k = 1; k < 3; ++k, t = rotate_exponents(t)) {
    const Rational g = identity_growth_exponent(t);
    if (g > best_g) {
      best_g = g;
      best_rot = t;
    }
  }
  if (best_g > Rational(0)) {
    v.construction = "identity";
    v.evaluated = best_rot;
    v.growth = best_g;
    for (std::size_t n : sizes) {
      if (n == 0) throw DimensionError("sizes must be >= 1");
      DivergencePoint p;
      p.n = n;
      p.quotient = identity_quotient_direct({2 * n, n, n}, best_rot);
      p.floor = dpow(n, best_g);
      p.floor_holds = p.quotient >= p.floor * (1.0 - 1e-12);
      v.points.push_back(p);
    }
    finish(v, sizes);
    return v;
  }

  // Otherwise min = 1 and max = ∞; some orbit member is (1,q,∞) with q > 2 or (1,∞,r) with 1 < r <= 2.
  const Exponent one = Exponent::from_value(1), two = Exponent::from_value(2), inf = Exponent::infinity();
  std::optional<DivergenceSpec> spec;
  for (const auto& o : orbit(e)) {
    if (o.p == one && o.r == inf && two < o.q) {
      spec = DivergenceSpec{DivergenceCase::I, o.q};
      break;
    }
  }
  if (!spec) {
    for (const auto& o : orbit(e)) {
      if (o.p == one && o.q == inf && one < o.r && o.r < two) {
        spec = DivergenceSpec{DivergenceCase::II, o.r};
        break;
      }
      if (o.p == one && o.q == inf && o.r == two) {
        spec = DivergenceSpec{DivergenceCase::II_r2, o.r};
        break;
      }
    }
  }
  if (!spec) throw DomainError("no divergence construction applies to " + e.to_string());
  v.construction = spec->kind == DivergenceCase::I    ? "case-I"
                   : spec->kind == DivergenceCase::II ? "case-II"
                                                      : "case-II-r2";
  v.evaluated = divergence_exponents(*spec);
  v.growth = divergence_growth(*spec);
  for (std::size_t n : sizes) v.points.push_back(divergence_experiment(*spec, n, opts));
  finish(v, sizes);
  return v;
}

}  // namespace mmt
