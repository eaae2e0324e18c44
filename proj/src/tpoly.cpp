#include "mhpp/tpoly.hpp"

#include <array>
#include <atomic>
#include <functional>
#include <string>

#include "mhpp/errors.hpp"

namespace mhpp {

namespace {

std::atomic<std::size_t> g_term_cap{1'000'000};

void guard(std::size_t size, const char* where) {
  if (size > g_term_cap.load()) {
    throw GuardExceeded(std::string(where) + ": more than " + std::to_string(g_term_cap.load()) +
                        " terms");
  }
}

void accumulate(PuiseuxPolynomial::Terms& terms, const LatticePoint& alpha, const PuiseuxNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

std::size_t term_cap() { return g_term_cap.load(); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap); }

PuiseuxPolynomial::PuiseuxPolynomial(std::size_t nvars, Terms terms) : nvars_(nvars) {
  for (auto& [alpha, c] : terms) {
    if (alpha.dim() != nvars_) throw InputError("PuiseuxPolynomial: exponent of wrong length");
    for (int e : alpha) {
      if (e < 0) throw InputError("PuiseuxPolynomial: negative exponent");
    }
    if (!c.is_zero()) terms_.emplace(alpha, std::move(c));
  }
}

PuiseuxPolynomial PuiseuxPolynomial::constant(std::size_t nvars, const PuiseuxNumber& c) {
  PuiseuxPolynomial p(nvars);
  p.add_term(LatticePoint::zero(nvars), c);
  return p;
}

PuiseuxPolynomial PuiseuxPolynomial::variable(std::size_t nvars, std::size_t index) {
  PuiseuxPolynomial p(nvars);
  p.add_term(LatticePoint::unit(nvars, index), PuiseuxNumber(1));
  return p;
}

PuiseuxPolynomial PuiseuxPolynomial::monomial(const LatticePoint& alpha, const PuiseuxNumber& c) {
  PuiseuxPolynomial p(alpha.dim());
  p.add_term(alpha, c);
  return p;
}

PuiseuxNumber PuiseuxPolynomial::coefficient(const LatticePoint& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? PuiseuxNumber() : it->second;
}

long PuiseuxPolynomial::total_degree() const {
  long d = -1;
  for (const auto& [alpha, c] : terms_) d = std::max(d, coord_sum(alpha));
  return d;
}

int PuiseuxPolynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha[var]);
  return d;
}

bool PuiseuxPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = coord_sum(terms_.begin()->first);
  for (const auto& [alpha, c] : terms_) {
    if (coord_sum(alpha) != d) return false;
  }
  return true;
}

bool PuiseuxPolynomial::is_multiaffine() const {
  for (const auto& [alpha, c] : terms_) {
    for (int e : alpha) {
      if (e > 1) return false;
    }
  }
  return true;
}

bool PuiseuxPolynomial::has_nonnegative_coefficients() const {
  for (const auto& [alpha, c] : terms_) {
    if (c.is_negative()) return false;
  }
  return true;
}

bool PuiseuxPolynomial::has_constant_coefficients() const {
  for (const auto& [alpha, c] : terms_) {
    if (!c.as_rational()) return false;
  }
  return true;
}

void PuiseuxPolynomial::add_term(const LatticePoint& alpha, const PuiseuxNumber& c) {
  if (alpha.dim() != nvars_) throw InputError("add_term: exponent of wrong length");
  accumulate(terms_, alpha, c);
}

void PuiseuxPolynomial::check_vars(const PuiseuxPolynomial& o) const {
  if (o.nvars_ != nvars_) {
    throw InputError("polynomial arithmetic: " + std::to_string(nvars_) + " vs " +
                     std::to_string(o.nvars_) + " variables");
  }
}

PuiseuxPolynomial PuiseuxPolynomial::operator-() const {
  PuiseuxPolynomial r = *this;
  for (auto& [alpha, c] : r.terms_) c = -c;
  return r;
}

PuiseuxPolynomial& PuiseuxPolynomial::operator+=(const PuiseuxPolynomial& o) {
  check_vars(o);
  for (const auto& [alpha, c] : o.terms_) accumulate(terms_, alpha, c);
  guard(terms_.size(), "add");
  return *this;
}

PuiseuxPolynomial& PuiseuxPolynomial::operator-=(const PuiseuxPolynomial& o) {
  check_vars(o);
  for (const auto& [alpha, c] : o.terms_) accumulate(terms_, alpha, -c);
  return *this;
}

PuiseuxPolynomial operator*(const PuiseuxPolynomial& a, const PuiseuxPolynomial& b) {
  a.check_vars(b);
  PuiseuxPolynomial r(a.nvars_);
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      accumulate(r.terms_, x + y, cx * cy);
    }
    guard(r.terms_.size(), "multiply");
  }
  return r;
}

PuiseuxPolynomial& PuiseuxPolynomial::operator*=(const PuiseuxPolynomial& o) {
  *this = *this * o;
  return *this;
}

PuiseuxPolynomial& PuiseuxPolynomial::operator*=(const PuiseuxNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, x] : terms_) x *= c;
  return *this;
}

PuiseuxPolynomial pow(const PuiseuxPolynomial& p, unsigned k) {
  PuiseuxPolynomial r = PuiseuxPolynomial::constant(p.nvars(), PuiseuxNumber(1));
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

PointSet support(const PuiseuxPolynomial& p) {
  PointSet s(p.nvars());
  for (const auto& [alpha, c] : p.terms()) s.insert(alpha);
  return s;
}

DiscreteFunction tropicalize(const PuiseuxPolynomial& p) {
  if (p.is_zero()) throw InputError("tropicalize: zero polynomial");
  DiscreteFunction::Map values;
  for (const auto& [alpha, c] : p.terms()) values.emplace(alpha, c.valuation().value());
  return DiscreteFunction(p.nvars(), std::move(values));
}

PuiseuxPolynomial partial_derivative(const PuiseuxPolynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw InputError("partial_derivative: variable out of range");
  PuiseuxPolynomial r(p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    if (alpha[var] == 0) continue;
    LatticePoint beta = alpha;
    beta[var] -= 1;
    r.add_term(beta, c * PuiseuxNumber(alpha[var]));
  }
  return r;
}

PuiseuxPolynomial substitute_shift(const PuiseuxPolynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw InputError("substitute_shift: variable out of range");
  PuiseuxPolynomial::Terms out;
  for (const auto& [alpha, c] : p.terms()) {
    const int d = alpha[var];
    std::vector<int> base = alpha.coords();
    base.push_back(0);
    for (int k = 0; k <= d; ++k) {
      std::vector<int> e = base;
      e[var] = d - k;
      e.back() = k;
      accumulate(out, LatticePoint(std::move(e)), c * PuiseuxNumber(Rational(binomial(d, k))));
    }
    guard(out.size(), "substitute_shift");
  }
  return PuiseuxPolynomial(p.nvars() + 1, std::move(out));
}

PuiseuxPolynomial diagonalize(const PuiseuxPolynomial& p, std::size_t keep, std::size_t drop) {
  if (keep == drop) throw InputError("diagonalize: the two variables must differ");
  if (keep >= p.nvars() || drop >= p.nvars()) throw InputError("diagonalize: variable out of range");
  PuiseuxPolynomial::Terms out;
  for (const auto& [alpha, c] : p.terms()) {
    std::vector<int> e = alpha.coords();
    e[keep] += e[drop];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
    accumulate(out, LatticePoint(std::move(e)), c);
  }
  return PuiseuxPolynomial(p.nvars() - 1, std::move(out));
}

PuiseuxPolynomial scale_var(const PuiseuxPolynomial& p, std::size_t var, const PuiseuxNumber& xi) {
  if (var >= p.nvars()) throw InputError("scale_var: variable out of range");
  if (xi.is_negative()) throw InputError("scale_var: scale factor must be nonnegative");
  PuiseuxPolynomial r(p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    r.add_term(alpha, c * pow(xi, static_cast<unsigned long>(alpha[var])));
  }
  return r;
}

PuiseuxPolynomial substitute_value(const PuiseuxPolynomial& p, std::size_t var,
                                   const PuiseuxNumber& value) {
  if (var >= p.nvars()) throw InputError("substitute_value: variable out of range");
  PuiseuxPolynomial::Terms out;
  for (const auto& [alpha, c] : p.terms()) {
    std::vector<int> e = alpha.coords();
    const int d = e[var];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var));
    accumulate(out, LatticePoint(std::move(e)), c * pow(value, static_cast<unsigned long>(d)));
  }
  return PuiseuxPolynomial(p.nvars() - 1, std::move(out));
}

PuiseuxPolynomial polarize_poly(const PuiseuxPolynomial& p) {
  const SlotLayout layout = SlotLayout::of(support(p));
  PuiseuxPolynomial::Terms out;
  for (const auto& [alpha, c] : p.terms()) {
    Rational weight = 1;
    for (std::size_t i = 0; i < alpha.dim(); ++i) weight *= Rational(binomial(layout.kappa()[i], alpha[i]));
    const PuiseuxNumber share = c * PuiseuxNumber(Rational(1 / weight));
    for (const auto& sigma : layout.lift(alpha)) accumulate(out, sigma, share);
    guard(out.size(), "polarize_poly");
  }
  return PuiseuxPolynomial(layout.slots(), std::move(out));
}

PuiseuxPolynomial collapse_slots(const PuiseuxPolynomial& p, const SlotLayout& layout) {
  if (p.nvars() != layout.slots()) throw InputError("collapse_slots: layout does not match");
  PuiseuxPolynomial::Terms out;
  for (const auto& [sigma, c] : p.terms()) accumulate(out, layout.collapse(sigma), c);
  return PuiseuxPolynomial(layout.variables(), std::move(out));
}

PuiseuxPolynomial homogenize_poly(const PuiseuxPolynomial& p) {
  const long r = std::max(0L, p.total_degree());
  PuiseuxPolynomial::Terms out;
  for (const auto& [alpha, c] : p.terms()) {
    std::vector<int> e = alpha.coords();
    e.push_back(static_cast<int>(r - coord_sum(alpha)));
    out.emplace(LatticePoint(std::move(e)), c);
  }
  return PuiseuxPolynomial(p.nvars() + 1, std::move(out));
}

const char* to_string(SlicePattern s) {
  switch (s) {
    case SlicePattern::x_1_lambda: return "x->P(x,1,lambda)";
    case SlicePattern::one_y_lambda: return "y->P(1,y,lambda)";
    case SlicePattern::one_lambda_z: return "z->P(1,lambda,z)";
    case SlicePattern::one_y_zero: return "y->P(1,y,0)";
    case SlicePattern::one_zero_z: return "z->P(1,0,z)";
  }
  return "?";
}

UnivariatePoly<PuiseuxNumber> slice(const PuiseuxPolynomial& p, SlicePattern pattern,
                                    const PuiseuxNumber& lambda) {
  if (p.nvars() != 3) throw InputError("slice: polynomial must be trivariate");
  std::size_t free_var = 0;
  std::array<PuiseuxNumber, 3> values{PuiseuxNumber(1), PuiseuxNumber(1), PuiseuxNumber(1)};
  switch (pattern) {
    case SlicePattern::x_1_lambda: free_var = 0; values[2] = lambda; break;
    case SlicePattern::one_y_lambda: free_var = 1; values[2] = lambda; break;
    case SlicePattern::one_lambda_z: free_var = 2; values[1] = lambda; break;
    case SlicePattern::one_y_zero: free_var = 1; values[2] = PuiseuxNumber(); break;
    case SlicePattern::one_zero_z: free_var = 2; values[1] = PuiseuxNumber(); break;
  }
  std::vector<PuiseuxNumber> coeffs(static_cast<std::size_t>(p.degree_in(free_var)) + 1);
  for (const auto& [alpha, c] : p.terms()) {
    PuiseuxNumber term = c;
    for (std::size_t v = 0; v < 3; ++v) {
      if (v == free_var || alpha[v] == 0) continue;
      term *= pow(values[v], static_cast<unsigned long>(alpha[v]));
    }
    coeffs[static_cast<std::size_t>(alpha[free_var])] += term;
  }
  return UnivariatePoly<PuiseuxNumber>(std::move(coeffs));
}

PuiseuxNumber evaluate(const PuiseuxPolynomial& p, std::span<const PuiseuxNumber> point) {
  if (point.size() != p.nvars()) throw InputError("evaluate: point has the wrong length");
  PuiseuxNumber sum;
  for (const auto& [alpha, c] : p.terms()) {
    PuiseuxNumber term = c;
    for (std::size_t v = 0; v < alpha.dim() && !term.is_zero(); ++v) {
      if (alpha[v] != 0) term *= pow(point[v], static_cast<unsigned long>(alpha[v]));
    }
    sum += term;
  }
  return sum;
}

std::ostream& operator<<(std::ostream& os, const PuiseuxPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [alpha, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    for (std::size_t v = 0; v < alpha.dim(); ++v) {
      if (alpha[v] == 0) continue;
      os << "*z" << v + 1;
      if (alpha[v] > 1) os << '^' << alpha[v];
    }
  }
  return os;
}

}  // namespace mhpp
