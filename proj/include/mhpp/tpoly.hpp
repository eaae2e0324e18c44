#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "mhpp/dfunc.hpp"
#include "mhpp/lattice.hpp"
#include "mhpp/puiseux.hpp"
#include "mhpp/univariate.hpp"

namespace mhpp {

/// Maximum number of terms any intermediate polynomial may hold before a
/// GuardExceeded is thrown.  Default 10^6.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

/// Sparse polynomial in nvars variables with PuiseuxNumber coefficients.
class PuiseuxPolynomial {
 public:
  using Terms = std::map<LatticePoint, PuiseuxNumber>;

  explicit PuiseuxPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  PuiseuxPolynomial(std::size_t nvars, Terms terms);

  static PuiseuxPolynomial constant(std::size_t nvars, const PuiseuxNumber& c);
  /// z_index.
  static PuiseuxPolynomial variable(std::size_t nvars, std::size_t index);
  static PuiseuxPolynomial monomial(const LatticePoint& alpha, const PuiseuxNumber& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero when alpha is not in the support.
  PuiseuxNumber coefficient(const LatticePoint& alpha) const;

  /// -1 for the zero polynomial.
  long total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool is_multiaffine() const;
  bool has_nonnegative_coefficients() const;
  bool has_constant_coefficients() const;

  /// Adds c * z^alpha.
  void add_term(const LatticePoint& alpha, const PuiseuxNumber& c);

  PuiseuxPolynomial operator-() const;
  PuiseuxPolynomial& operator+=(const PuiseuxPolynomial& o);
  PuiseuxPolynomial& operator-=(const PuiseuxPolynomial& o);
  PuiseuxPolynomial& operator*=(const PuiseuxPolynomial& o);
  PuiseuxPolynomial& operator*=(const PuiseuxNumber& c);
  friend PuiseuxPolynomial operator+(PuiseuxPolynomial a, const PuiseuxPolynomial& b) { return a += b; }
  friend PuiseuxPolynomial operator-(PuiseuxPolynomial a, const PuiseuxPolynomial& b) { return a -= b; }
  friend PuiseuxPolynomial operator*(const PuiseuxPolynomial& a, const PuiseuxPolynomial& b);
  friend PuiseuxPolynomial operator*(PuiseuxPolynomial a, const PuiseuxNumber& c) { return a *= c; }

  friend bool operator==(const PuiseuxPolynomial&, const PuiseuxPolynomial&) = default;

 private:
  void check_vars(const PuiseuxPolynomial& o) const;

  std::size_t nvars_;
  Terms terms_;
};

PuiseuxPolynomial pow(const PuiseuxPolynomial& p, unsigned k);

PointSet support(const PuiseuxPolynomial& p);

/// alpha -> valuation of the coefficient of z^alpha.  Throws on the zero polynomial.
DiscreteFunction tropicalize(const PuiseuxPolynomial& p);

PuiseuxPolynomial partial_derivative(const PuiseuxPolynomial& p, std::size_t var);

/// z_var <- z_var + w, where w is a new last variable.
PuiseuxPolynomial substitute_shift(const PuiseuxPolynomial& p, std::size_t var);

/// z_drop <- z_keep; variable `drop` is removed and later indices shift down.
PuiseuxPolynomial diagonalize(const PuiseuxPolynomial& p, std::size_t keep, std::size_t drop);

/// z_var <- xi * z_var for xi >= 0 in the field order.
PuiseuxPolynomial scale_var(const PuiseuxPolynomial& p, std::size_t var, const PuiseuxNumber& xi);

/// Replaces z_var by a value and removes that variable.
PuiseuxPolynomial substitute_value(const PuiseuxPolynomial& p, std::size_t var,
                                   const PuiseuxNumber& value);

/// Multiaffine polarization: variable i of degree d_i becomes d_i symmetric
/// slot variables, laid out as SlotLayout::of(support(p)).
PuiseuxPolynomial polarize_poly(const PuiseuxPolynomial& p);

/// Sets every slot variable of a polarization back to its parent variable.
PuiseuxPolynomial collapse_slots(const PuiseuxPolynomial& p, const SlotLayout& layout);

/// z_{n+1}^r P(z_1/z_{n+1}, ..., z_n/z_{n+1}) with r = total degree.
PuiseuxPolynomial homogenize_poly(const PuiseuxPolynomial& p);

/// One-variable restrictions of a trivariate polynomial.
enum class SlicePattern {
  x_1_lambda,    // x -> P(x, 1, lambda)
  one_y_lambda,  // y -> P(1, y, lambda)
  one_lambda_z,  // z -> P(1, lambda, z)
  one_y_zero,    // y -> P(1, y, 0)
  one_zero_z,    // z -> P(1, 0, z)
};

inline constexpr SlicePattern kAllSlicePatterns[] = {
    SlicePattern::x_1_lambda, SlicePattern::one_y_lambda, SlicePattern::one_lambda_z,
    SlicePattern::one_y_zero, SlicePattern::one_zero_z};

const char* to_string(SlicePattern s);

/// lambda is ignored for the two boundary patterns.
UnivariatePoly<PuiseuxNumber> slice(const PuiseuxPolynomial& p, SlicePattern pattern,
                                    const PuiseuxNumber& lambda);

PuiseuxNumber evaluate(const PuiseuxPolynomial& p, std::span<const PuiseuxNumber> point);

std::ostream& operator<<(std::ostream& os, const PuiseuxPolynomial& p);

}  // namespace mhpp
