#include "mhpp/puiseux.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mhpp {

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return !a.is_neg_infinity() <=> !b.is_neg_infinity();
  }
  const int c = cmp(a.value(), b.value());
  return c <=> 0;
}

std::string to_string(const Valuation& v) {
  return v.is_neg_infinity() ? std::string("-inf") : to_string(v.value());
}

PuiseuxNumber::PuiseuxNumber(const Rational& q) {
  if (q != 0) terms_.push_back({Rational(0), q});
}

PuiseuxNumber PuiseuxNumber::t_power(const Rational& e, const Rational& c) {
  PuiseuxNumber x;
  if (c != 0) x.terms_.push_back({e, c});
  return x;
}

PuiseuxNumber PuiseuxNumber::from_terms(std::vector<Term> terms) {
  std::map<Rational, Rational, std::greater<>> acc;
  for (auto& t : terms) acc[t.exponent] += t.coeff;
  PuiseuxNumber x;
  for (auto& [e, c] : acc) {
    if (c != 0) x.terms_.push_back({e, c});
  }
  return x;
}

Valuation PuiseuxNumber::valuation() const {
  if (is_zero()) return Valuation::neg_infinity();
  return Valuation(terms_.front().exponent);
}

Rational PuiseuxNumber::leading_coefficient() const {
  return is_zero() ? Rational(0) : terms_.front().coeff;
}

std::optional<Rational> PuiseuxNumber::as_rational() const {
  if (is_zero()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().exponent == 0) return terms_.front().coeff;
  return std::nullopt;
}

PuiseuxNumber PuiseuxNumber::operator-() const {
  PuiseuxNumber r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two decreasing term lists, combining equal exponents.
std::vector<PuiseuxNumber::Term> merge(const std::vector<PuiseuxNumber::Term>& a,
                                       const std::vector<PuiseuxNumber::Term>& b, int sign_b) {
  std::vector<PuiseuxNumber::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent > a[i].exponent) {
      out.push_back({b[j].exponent, sign_b > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign_b > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

PuiseuxNumber& PuiseuxNumber::operator+=(const PuiseuxNumber& o) {
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

PuiseuxNumber& PuiseuxNumber::operator-=(const PuiseuxNumber& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

PuiseuxNumber operator*(const PuiseuxNumber& a, const PuiseuxNumber& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
    const auto& other = a.terms_.size() == 1 ? b : a;
    PuiseuxNumber r;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      r.terms_.push_back({t.exponent + mono.exponent, t.coeff * mono.coeff});
    }
    return r;
  }
  std::map<Rational, Rational, std::greater<>> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) acc[x.exponent + y.exponent] += x.coeff * y.coeff;
  }
  PuiseuxNumber r;
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, c});
  }
  return r;
}

PuiseuxNumber& PuiseuxNumber::operator*=(const PuiseuxNumber& o) {
  *this = *this * o;
  return *this;
}

std::strong_ordering operator<=>(const PuiseuxNumber& a, const PuiseuxNumber& b) {
  const int s = (a - b).sign();
  return s <=> 0;
}

PuiseuxNumber pow(const PuiseuxNumber& x, unsigned long k) {
  PuiseuxNumber result(1);
  PuiseuxNumber base = x;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const PuiseuxNumber& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += is_integer(e) && e > 0 ? "^" + e.get_str() : "^(" + e.get_str() + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PuiseuxNumber& x) { return os << to_string(x); }

}  // namespace mhpp
