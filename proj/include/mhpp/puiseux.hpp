#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mhpp/rational.hpp"

namespace mhpp {

/// Element of R u {-infinity}; -infinity is the valuation of zero.
class Valuation {
 public:
  Valuation() = default;  // -infinity
  Valuation(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static Valuation neg_infinity() { return {}; }
  bool is_neg_infinity() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return {};
    return Valuation(a.value() + b.value());
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return a.is_neg_infinity() == b.is_neg_infinity();
    return a.value() == b.value();
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  std::optional<Rational> value_;
};

std::string to_string(const Valuation& v);

/// Finite generalized Puiseux series sum c_k t^{e_k} with rational exponents
/// and coefficients.  Terms are kept with strictly decreasing exponents and
/// nonzero coefficients, so the first term is the leading one.
class PuiseuxNumber {
 public:
  struct Term {
    Rational exponent;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PuiseuxNumber() = default;
  PuiseuxNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  PuiseuxNumber(long q) : PuiseuxNumber(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  PuiseuxNumber(int q) : PuiseuxNumber(Rational(q)) {}   // NOLINT(google-explicit-constructor)

  /// c * t^e.
  static PuiseuxNumber t_power(const Rational& e, const Rational& c = 1);
  static PuiseuxNumber from_rational(const Rational& q) { return PuiseuxNumber(q); }
  /// Sorts, merges equal exponents and drops zero coefficients.
  static PuiseuxNumber from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Leading exponent; -infinity for zero.
  Valuation valuation() const;
  /// Zero for the zero element.
  Rational leading_coefficient() const;
  bool is_positive() const { return !is_zero() && sgn(terms_.front().coeff) > 0; }
  bool is_negative() const { return !is_zero() && sgn(terms_.front().coeff) < 0; }
  int sign() const { return is_zero() ? 0 : sgn(terms_.front().coeff); }
  /// The rational value when the series is a constant.
  std::optional<Rational> as_rational() const;

  PuiseuxNumber operator-() const;
  PuiseuxNumber& operator+=(const PuiseuxNumber& o);
  PuiseuxNumber& operator-=(const PuiseuxNumber& o);
  PuiseuxNumber& operator*=(const PuiseuxNumber& o);
  friend PuiseuxNumber operator+(PuiseuxNumber a, const PuiseuxNumber& b) { return a += b; }
  friend PuiseuxNumber operator-(PuiseuxNumber a, const PuiseuxNumber& b) { return a -= b; }
  friend PuiseuxNumber operator*(const PuiseuxNumber& a, const PuiseuxNumber& b);

  friend bool operator==(const PuiseuxNumber&, const PuiseuxNumber&) = default;
  /// Field order: x < y iff y - x has a positive leading coefficient.
  friend std::strong_ordering operator<=>(const PuiseuxNumber& a, const PuiseuxNumber& b);

 private:
  std::vector<Term> terms_;
};

PuiseuxNumber pow(const PuiseuxNumber& x, unsigned long k);

inline Valuation valuation(const PuiseuxNumber& x) { return x.valuation(); }
inline bool is_positive(const PuiseuxNumber& x) { return x.is_positive(); }
inline std::strong_ordering compare(const PuiseuxNumber& x, const PuiseuxNumber& y) { return x <=> y; }

/// Human-readable form, e.g. "3*t^2 + t^(-1)".
std::string to_string(const PuiseuxNumber& x);
std::ostream& operator<<(std::ostream& os, const PuiseuxNumber& x);

}  // namespace mhpp
