#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mmt {

/// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const noexcept { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);
Rational max(const Rational& a, const Rational& b);

/// base^e. Integer exponents and e = 0 are evaluated exactly.
double pow(double base, const Rational& e);

/// A Hölder exponent p in [1, ∞].
///
/// Stored as the exact reciprocal 1/p in [0, 1], so ∞ is 1/p = 0 and the
/// conjugate is 1 - 1/p. Ordering and equality are decided on the rationals,
/// never on floating-point values.
class Exponent {
 public:
  /// p = 1.
  Exponent() : inv_(1) {}

  static Exponent infinity() { return Exponent(Rational(0)); }
  static Exponent from_value(std::int64_t num, std::int64_t den = 1);
  static Exponent from_reciprocal(const Rational& inv);

  /// Accepts "inf", "infinity", "∞", integers, fractions ("3/2") and decimals ("1.5").
  static Exponent parse(std::string_view text);

  bool is_infinite() const noexcept { return inv_.is_zero(); }
  bool is_one() const noexcept { return inv_ == Rational(1); }
  bool is_two() const noexcept { return inv_ == Rational(1, 2); }

  /// 1/p, exact.
  const Rational& reciprocal() const noexcept { return inv_; }
  double reciprocal_value() const noexcept { return inv_.to_double(); }
  /// p as a double; +inf for ∞.
  double value() const noexcept;

  /// Hölder conjugate p* with 1/p + 1/p* = 1.
  Exponent conjugate() const { return Exponent(Rational(1) - inv_); }

  /// "1", "3/2", "inf".
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) = default;
  /// Orders by the value of p (so 1 < 2 < ∞).
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    return b.inv_ <=> a.inv_;
  }

 private:
  explicit Exponent(const Rational& inv);
  Rational inv_;
};

/// (p, q, r), the exponents of the three operator norms in a tensor-norm quotient.
struct ExponentTriple {
  Exponent p, q, r;

  friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
  friend std::strong_ordering operator<=>(const ExponentTriple& a, const ExponentTriple& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.r <=> b.r;
  }

  std::string to_string() const;
  static ExponentTriple parse(std::string_view p, std::string_view q, std::string_view r);
  /// "p,q,r" comma-separated.
  static ExponentTriple parse(std::string_view csv);
};

/// (p,q,r) -> (q,r,p).
ExponentTriple cyclic_triple(const ExponentTriple& e);
/// (p,q,r) -> (r*,q*,p*).
ExponentTriple conjugate_triple(const ExponentTriple& e);

/// The Grothendieck exponents (1, 2, ∞).
ExponentTriple grothendieck_triple();

}  // namespace mmt
