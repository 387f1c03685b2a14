#include "mmt/exponent.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mmt/errors.hpp"

namespace mmt {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross multiplication preserves order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

double pow(double base, const Rational& e) {
  if (e.is_zero()) return 1.0;
  if (e.den() == 1) return std::pow(base, static_cast<double>(e.num()));
  return std::pow(base, e.to_double());
}

Exponent::Exponent(const Rational& inv) : inv_(inv) {
  if (inv_ < Rational(0) || Rational(1) < inv_) {
    throw DomainError("exponent must lie in [1, inf], got 1/p = " + inv_.to_string());
  }
}

Exponent Exponent::from_value(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw DomainError("exponent must be >= 1");
  return Exponent(Rational(den, num));
}

Exponent Exponent::from_reciprocal(const Rational& inv) { return Exponent(inv); }

namespace {

std::string lower_trimmed(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string out(text.substr(b, e - b));
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 15) throw DomainError("cannot parse exponent '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("cannot parse exponent '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Exponent Exponent::parse(std::string_view text) {
  const std::string s = lower_trimmed(text);
  if (s == "inf" || s == "infinity" || s == "\xe2\x88\x9e" || s == "+inf") return infinity();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const auto num = parse_digits(std::string_view(s).substr(0, slash), text);
    const auto den = parse_digits(std::string_view(s).substr(slash + 1), text);
    if (den == 0) throw DomainError("exponent with zero denominator");
    if (num < den) throw DomainError("exponent must be >= 1, got " + std::string(text));
    return from_value(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const auto ip = std::string_view(s).substr(0, dot);
    const auto fp = std::string_view(s).substr(dot + 1);
    const std::int64_t whole = ip.empty() ? 0 : parse_digits(ip, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const std::int64_t frac = fp.empty() ? 0 : parse_digits(fp, text);
    const std::int64_t num = whole * scale + frac;
    if (num < scale) throw DomainError("exponent must be >= 1, got " + std::string(text));
    return from_value(num, scale);
  }
  const auto v = parse_digits(s, text);
  if (v < 1) throw DomainError("exponent must be >= 1, got " + std::string(text));
  return from_value(v, 1);
}

double Exponent::value() const noexcept {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(inv_.den()) / static_cast<double>(inv_.num());
}

std::string Exponent::to_string() const {
  if (is_infinite()) return "inf";
  return Rational(inv_.den(), inv_.num()).to_string();
}

std::string ExponentTriple::to_string() const {
  return p.to_string() + "," + q.to_string() + "," + r.to_string();
}

ExponentTriple ExponentTriple::parse(std::string_view p, std::string_view q, std::string_view r) {
  return {Exponent::parse(p), Exponent::parse(q), Exponent::parse(r)};
}

ExponentTriple ExponentTriple::parse(std::string_view csv) {
  const auto a = csv.find(',');
  const auto b = a == std::string_view::npos ? a : csv.find(',', a + 1);
  if (a == std::string_view::npos || b == std::string_view::npos ||
      csv.find(',', b + 1) != std::string_view::npos) {
    throw DomainError("expected exponent triple 'p,q,r', got '" + std::string(csv) + "'");
  }
  return parse(csv.substr(0, a), csv.substr(a + 1, b - a - 1), csv.substr(b + 1));
}

ExponentTriple cyclic_triple(const ExponentTriple& e) { return {e.q, e.r, e.p}; }

ExponentTriple conjugate_triple(const ExponentTriple& e) {
  return {e.r.conjugate(), e.q.conjugate(), e.p.conjugate()};
}

ExponentTriple grothendieck_triple() {
  return {Exponent::from_value(1), Exponent::from_value(2), Exponent::infinity()};
}

}  // namespace mmt
