#include "mhpp/stability.hpp"

#include <string>

#include "mhpp/errors.hpp"

namespace mhpp {

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::newton: return "newton";
    case CertificateKind::val_newton_strict: return "val-newton-strict";
    case CertificateKind::hutchinson: return "hutchinson";
    case CertificateKind::sturm: return "sturm";
    case CertificateKind::rhombus_quotient: return "rhombus-quotient";
    case CertificateKind::slice_harness: return "slice-harness";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::proves_stable: return "proves-stable";
    case Verdict::proves_unstable: return "proves-unstable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool compare_sides(const PuiseuxNumber& lhs, const PuiseuxNumber& rhs, bool strict) {
  return strict ? lhs > rhs : lhs >= rhs;
}

Inequality make_inequality(std::string label, PuiseuxNumber lhs, PuiseuxNumber rhs, bool strict) {
  const bool holds = compare_sides(lhs, rhs, strict);
  return {std::move(label), std::move(lhs), std::move(rhs), strict, holds};
}

Witness index_witness(std::string rule, long k, Rational lhs, Rational rhs, std::string detail) {
  Witness w;
  w.rule = std::move(rule);
  w.points = {{"k", LatticePoint{static_cast<int>(k)}}};
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  w.detail = std::move(detail);
  return w;
}

}  // namespace

bool recheck(const StabilityCertificate& c) {
  for (const auto& q : c.detail) {
    if (compare_sides(q.lhs, q.rhs, q.strict) != q.holds) return false;
  }
  return true;
}

CheckReport newton_check(const RationalPoly& p, long n) {
  if (p.degree() > n) throw InputError("newton_check: degree exceeds the bound n");
  for (long k = 1; k + 1 <= n; ++k) {
    const Rational ck = Rational(binomial(n, k));
    Rational lhs = p.coeff(static_cast<std::size_t>(k)) * p.coeff(static_cast<std::size_t>(k)) / (ck * ck);
    Rational rhs = p.coeff(static_cast<std::size_t>(k - 1)) / Rational(binomial(n, k - 1)) *
                   (p.coeff(static_cast<std::size_t>(k + 1)) / Rational(binomial(n, k + 1)));
    if (lhs < rhs) {
      return CheckReport::fail(index_witness("newton", k, std::move(lhs), std::move(rhs),
                                             "a_k^2/C(n,k)^2 < a_{k-1}a_{k+1}/(C(n,k-1)C(n,k+1))"));
    }
  }
  return CheckReport::pass();
}

CheckReport val_newton_check(const DiscreteFunction& f, bool strict) {
  if (f.dim() != 1) throw InputError("val_newton_check: function must be univariate");
  std::vector<std::pair<int, Rational>> seq;
  for (const auto& [p, v] : f) seq.emplace_back(p[0], v);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i].first != seq[i - 1].first + 1) {
      throw InputError("val_newton_check: support is not an integer interval");
    }
  }
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    Rational lhs = 2 * seq[i].second;
    Rational rhs = seq[i - 1].second + seq[i + 1].second;
    const bool ok = strict ? lhs > rhs : lhs >= rhs;
    if (!ok) {
      return CheckReport::fail(index_witness(strict ? "val-newton-strict" : "val-newton",
                                             seq[i].first, std::move(lhs), std::move(rhs),
                                             "2f(k) vs f(k-1)+f(k+1)"));
    }
  }
  return CheckReport::pass();
}

namespace {

template <class Scalar>
StabilityCertificate hutchinson_impl(const UnivariatePoly<Scalar>& p, bool strict) {
  if (p.is_zero()) throw InputError("hutchinson_check: zero polynomial");
  const auto& c = p.coeffs();
  std::size_t lo = 0;
  while (c[lo] == Scalar(0)) ++lo;
  const std::size_t hi = c.size() - 1;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (!(c[k] > Scalar(0))) {
      throw InputError("hutchinson_check: coefficient " + std::to_string(k) +
                       " on the support interval is not positive");
    }
  }
  StabilityCertificate cert;
  cert.kind = CertificateKind::hutchinson;
  bool weak = true;
  bool strong = true;
  for (std::size_t k = lo + 1; k < hi; ++k) {
    PuiseuxNumber lhs = PuiseuxNumber(c[k]) * PuiseuxNumber(c[k]);
    PuiseuxNumber rhs = PuiseuxNumber(4) * PuiseuxNumber(c[k - 1]) * PuiseuxNumber(c[k + 1]);
    weak = weak && lhs >= rhs;
    strong = strong && lhs > rhs;
    cert.detail.push_back(
        make_inequality("a_" + std::to_string(k) + "^2 vs 4 a_" + std::to_string(k - 1) + " a_" +
                            std::to_string(k + 1),
                        std::move(lhs), std::move(rhs), strict));
  }
  if (!weak) {
    cert.verdict = Verdict::inconclusive;
    cert.notes.push_back("a_k^2 >= 4 a_{k-1} a_{k+1} fails; the criterion says nothing");
    return cert;
  }
  cert.verdict = Verdict::proves_stable;
  cert.notes.push_back("all zeros are real");
  if (strong) {
    cert.notes.push_back("strict inequalities: no multiple zeros except possibly z = 0");
  } else if (strict) {
    cert.notes.push_back("some inequality is tight: simple nonzero zeros are not certified");
  }
  return cert;
}

}  // namespace

StabilityCertificate hutchinson_check(const RationalPoly& p, bool strict) {
  return hutchinson_impl(p, strict);
}

StabilityCertificate hutchinson_check(const UnivariatePoly<PuiseuxNumber>& p, bool strict) {
  return hutchinson_impl(p, strict);
}

RationalPoly derivative(const RationalPoly& p) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) d.push_back(p.coeffs()[k] * static_cast<long>(k));
  return RationalPoly(std::move(d));
}

std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const long dd = den.degree();
  if (num.degree() < dd) return {RationalPoly(), num};
  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd + 1));
  for (long k = num.degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / den.leading();
    quo[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == 0) continue;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

namespace {

RationalPoly monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c = p.coeffs();
  const Rational lead = p.leading();
  for (auto& x : c) x /= lead;
  return RationalPoly(std::move(c));
}

RationalPoly subtract(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RationalPoly(std::move(c));
}

// Yun's square-free decomposition: p = c * prod_i factors[i]^(i+1).
std::vector<RationalPoly> squarefree_factors(const RationalPoly& p) {
  std::vector<RationalPoly> out;
  const RationalPoly dp = derivative(p);
  RationalPoly a = gcd(p, dp);
  RationalPoly b = divide(p, a).first;
  RationalPoly c = divide(dp, a).first;
  RationalPoly d = subtract(c, derivative(b));
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(a);
    b = divide(b, a).first;
    c = divide(d, a).first;
    d = subtract(c, derivative(b));
  }
  return out;
}

int sign_at_infinity(const RationalPoly& p, bool negative) {
  const int s = sgn(p.leading());
  return (negative && p.degree() % 2 == 1) ? -s : s;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& g) {
  std::vector<RationalPoly> chain{g, derivative(g)};
  while (!chain.back().is_zero()) {
    RationalPoly r = divide(chain[chain.size() - 2], chain.back()).second;
    std::vector<Rational> c = r.coeffs();
    for (auto& x : c) x = -x;
    chain.push_back(RationalPoly(std::move(c)));
  }
  chain.pop_back();
  return chain;
}

long sign_changes(const std::vector<int>& signs) {
  long changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational eval(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + p.coeffs()[k];
  return acc;
}

// Distinct real roots of a square-free polynomial.
long count_real_roots(const RationalPoly& g) {
  if (g.degree() <= 0) return 0;
  const auto chain = sturm_chain(g);
  std::vector<int> lo, hi;
  for (const auto& q : chain) {
    lo.push_back(sign_at_infinity(q, true));
    hi.push_back(sign_at_infinity(q, false));
  }
  return sign_changes(lo) - sign_changes(hi);
}

}  // namespace

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a;
  RationalPoly y = b;
  while (!y.is_zero()) {
    RationalPoly r = divide(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

long sturm_count_in(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw InputError("sturm_count_in: zero polynomial");
  const RationalPoly g = divide(p, gcd(p, derivative(p))).first;
  if (g.degree() <= 0) return 0;
  const auto chain = sturm_chain(g);
  std::vector<int> sa, sb;
  for (const auto& q : chain) {
    sa.push_back(sgn(eval(q, a)));
    sb.push_back(sgn(eval(q, b)));
  }
  return sign_changes(sa) - sign_changes(sb);
}

SturmResult sturm_real_rooted(const RationalPoly& p) {
  if (p.is_zero()) throw InputError("sturm_real_rooted: zero polynomial");
  SturmResult r;
  r.degree = p.degree();
  const auto factors = squarefree_factors(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const long mult = static_cast<long>(i) + 1;
    const long roots = count_real_roots(factors[i]);
    r.distinct_real_count += roots;
    r.real_count += mult * roots;
    if (mult >= 2) {
      const bool has_zero_root = factors[i].degree() >= 1 && factors[i].coeffs()[0] == 0;
      if (factors[i].degree() - (has_zero_root ? 1 : 0) >= 1) r.multiple_nonzero_root = true;
    }
  }
  r.all_real = r.real_count == r.degree;
  return r;
}

RationalPoly to_rational(const UnivariatePoly<PuiseuxNumber>& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) {
    auto q = x.as_rational();
    if (!q) throw InputError("expected constant coefficients, got " + to_string(x));
    c.push_back(*q);
  }
  return RationalPoly(std::move(c));
}

PuiseuxPolynomial onevar_hpp_construct(const DiscreteFunction& f) {
  if (f.dim() != 1) throw InputError("onevar_hpp_construct: function must be univariate");
  int prev = f.begin()->first[0] - 1;
  for (const auto& [p, v] : f) {
    if (p[0] != prev + 1 || p[0] < 0) {
      throw InputError("onevar_hpp_construct: support is not an interval of nonnegative integers");
    }
    prev = p[0];
  }
  if (!check_M_natural(f)) throw InputError("onevar_hpp_construct: f is not M-natural concave");
  PuiseuxPolynomial out(1);
  for (const auto& [p, v] : f) {
    const long k = p[0];
    const Rational scale = pow(Rational(4), -static_cast<long>(binomial(k, 2).get_si()));
    out.add_term(p, PuiseuxNumber::t_power(v, scale));
  }
  return out;
}

CheckReport sr_falsifier(const PuiseuxPolynomial& p, std::span<const std::vector<Rational>> samples) {
  if (!p.is_multiaffine()) throw InputError("sr_falsifier: polynomial is not multiaffine");
  if (!p.has_constant_coefficients()) {
    throw InputError("sr_falsifier: coefficients must be constant (real case)");
  }
  const std::size_t n = p.nvars();
  std::vector<PuiseuxPolynomial> first;
  for (std::size_t i = 0; i < n; ++i) first.push_back(partial_derivative(p, i));
  for (const auto& x : samples) {
    if (x.size() != n) throw InputError("sr_falsifier: sample of the wrong length");
    std::vector<PuiseuxNumber> point(x.begin(), x.end());
    const PuiseuxNumber value = evaluate(p, point);
    std::vector<PuiseuxNumber> grad;
    for (const auto& d : first) grad.push_back(evaluate(d, point));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const PuiseuxNumber mixed = evaluate(partial_derivative(first[i], j), point);
        const PuiseuxNumber lhs = grad[i] * grad[j];
        const PuiseuxNumber rhs = mixed * value;
        if (lhs < rhs) {
          Witness w;
          w.rule = "sr";
          w.vectors = {{"x", x}};
          w.points = {{"i", LatticePoint::unit(n, i)}, {"j", LatticePoint::unit(n, j)}};
          w.lhs = *lhs.as_rational();
          w.rhs = *rhs.as_rational();
          w.detail = "d_iP(x) d_jP(x) - d_ijP(x) P(x) = " + to_string(*w.lhs - *w.rhs) + " < 0";
          return CheckReport::fail(std::move(w));
        }
      }
    }
  }
  return CheckReport::pass();
}

std::vector<Rational> default_lambda_samples() {
  return {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
}

std::vector<Rational> default_mu_samples() { return {Rational(-1), Rational(0), Rational(1)}; }

namespace {

void require_trivariate_homogeneous(const PuiseuxPolynomial& p, const char* who) {
  if (p.nvars() != 3) throw InputError(std::string(who) + ": polynomial must be trivariate");
  if (p.is_zero() || !p.is_homogeneous()) {
    throw InputError(std::string(who) + ": polynomial must be nonzero and homogeneous");
  }
}

}  // namespace

StabilityCertificate lemma_basic_harness(const PuiseuxPolynomial& p, std::span<const Rational> lambdas) {
  require_trivariate_homogeneous(p, "lemma_basic_harness");
  if (!p.has_constant_coefficients() || !p.has_nonnegative_coefficients()) {
    throw InputError("lemma_basic_harness: coefficients must be nonnegative constants");
  }
  const int n = static_cast<int>(p.total_degree());
  const PuiseuxNumber zn = p.coefficient(LatticePoint{0, 0, n});
  const PuiseuxNumber yn = p.coefficient(LatticePoint{0, n, 0});
  if (!(zn * yn).is_positive()) {
    throw InputError("lemma_basic_harness: requires P(0,0,1) * P(0,1,0) > 0");
  }
  std::vector<Rational> lams(lambdas.begin(), lambdas.end());
  if (lams.empty()) lams = default_lambda_samples();

  StabilityCertificate cert;
  cert.kind = CertificateKind::slice_harness;
  cert.sampled = true;
  bool all = true;
  auto run = [&](SlicePattern pattern, const Rational& lambda, bool uses_lambda) {
    const RationalPoly s = to_rational(slice(p, pattern, PuiseuxNumber(lambda)));
    const SturmResult r = sturm_real_rooted(s);
    std::string label = std::string(to_string(pattern));
    if (uses_lambda) label += " at lambda=" + to_string(lambda);
    label += ": real roots with multiplicity vs degree";
    Inequality q = make_inequality(std::move(label), PuiseuxNumber(r.real_count),
                                   PuiseuxNumber(r.degree), false);
    all = all && q.holds;
    cert.detail.push_back(std::move(q));
  };
  for (const Rational& lambda : lams) {
    if (lambda <= 0) throw InputError("lemma_basic_harness: lambda samples must be positive");
    run(SlicePattern::x_1_lambda, lambda, true);
    run(SlicePattern::one_y_lambda, lambda, true);
    run(SlicePattern::one_lambda_z, lambda, true);
  }
  run(SlicePattern::one_y_zero, Rational(0), false);
  run(SlicePattern::one_zero_z, Rational(0), false);
  if (all) {
    cert.verdict = Verdict::proves_stable;
    cert.notes.push_back("every slice is real-rooted; the lambda > 0 hypothesis was checked only at the sampled values");
  } else {
    cert.verdict = Verdict::proves_unstable;
    cert.notes.push_back("a real specialization has a non-real zero, so P is not upper half-plane stable");
  }
  return cert;
}

RhombusQuotientReport rhombus_quotient_check(const PuiseuxPolynomial& p,
                                             const std::optional<Rational>& threshold) {
  require_trivariate_homogeneous(p, "rhombus_quotient_check");
  const long n = p.total_degree();
  std::map<LatticePoint, Rational> a;
  for (const auto& alpha : simplex_points(3, n)) {
    const auto c = p.coefficient(alpha).as_rational();
    if (!c || *c <= 0) {
      throw InputError("rhombus_quotient_check: coefficients on the whole triangle must be "
                       "positive constants");
    }
    a.emplace(alpha, *c);
  }
  RhombusQuotientReport out;
  for (const Rhombus& r : enumerate_rhombi(n)) {
    const Rational top = a.at(r.beta) * a.at(r.gamma);
    const Rational bottom = a.at(r.alpha) * a.at(r.delta);
    const Rational bound = threshold ? *threshold : ratio(r.level() + 1, 2 * r.level());
    // top/bottom >= num/den  <=>  top*den >= num*bottom  (bottom > 0)
    const bool ok = top * bound.get_den() >= bound.get_num() * bottom;
    const Rational quotient = top / bottom;
    if (!out.min_quotient || quotient < *out.min_quotient) {
      out.min_quotient = quotient;
      out.min_rhombus = r;
    }
    if (!ok && out.report.verdict) {
      Witness w;
      w.rule = "rhombus-quotient";
      w.points = {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}, {"delta", r.delta}};
      w.lhs = quotient;
      w.rhs = bound;
      w.detail = "a_beta a_gamma / (a_alpha a_delta) below the bound";
      out.report = CheckReport::fail(std::move(w));
    }
  }
  return out;
}

QuantBResult quant_b_construct(const DiscreteFunction& h, const Rational& q, bool force,
                               std::span<const Rational> lambdas) {
  if (!is_hive(h)) throw InputError("quant_b_construct: h is not a hive");
  const long n = *triangle_level(h.support());
  for (const auto& [alpha, v] : h) {
    if (!is_integer(v)) {
      throw InputError("quant_b_construct: hive values must be integers (scale h to clear denominators)");
    }
  }
  if (q <= 0) throw InputError("quant_b_construct: Q must be positive");
  if (!force && q < 2 * (n - 1)) {
    throw InputError("quant_b_construct: Q below 2(n-1) = " + std::to_string(2 * (n - 1)) +
                     " (use force to override)");
  }
  PuiseuxPolynomial poly(3);
  for (const auto& [alpha, v] : h) {
    poly.add_term(alpha, PuiseuxNumber(pow(q, base_hive_value(alpha) + to_long(v))));
  }
  auto rhombus = rhombus_quotient_check(poly, q);
  auto harness = lemma_basic_harness(poly, lambdas);
  return {std::move(poly), std::move(rhombus), std::move(harness)};
}

StrictHiveResult strict_hive_to_puiseux_hpp(const DiscreteFunction& h, std::span<const Rational> mus) {
  if (!is_hive(h, true)) throw InputError("strict_hive_to_puiseux_hpp: h is not a strict hive");
  PuiseuxPolynomial poly(3);
  for (const auto& [alpha, v] : h) poly.add_term(alpha, PuiseuxNumber::t_power(v));

  std::vector<Rational> ms(mus.begin(), mus.end());
  if (ms.empty()) ms = default_mu_samples();
  StabilityCertificate cert;
  cert.kind = CertificateKind::val_newton_strict;
  cert.sampled = true;
  bool all = true;
  auto run = [&](SlicePattern pattern, const PuiseuxNumber& lambda, const std::string& where) {
    const auto s = slice(poly, pattern, lambda);
    const auto& c = s.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_positive()) {
        all = false;
        cert.notes.push_back(std::string(to_string(pattern)) + where + ": coefficient " +
                             std::to_string(k) + " is not positive");
        return;
      }
    }
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
      PuiseuxNumber lhs(2 * c[k].valuation().value());
      PuiseuxNumber rhs(c[k - 1].valuation().value() + c[k + 1].valuation().value());
      Inequality q = make_inequality(std::string(to_string(pattern)) + where + ": 2 nu(a_" +
                                         std::to_string(k) + ") vs nu(a_" + std::to_string(k - 1) +
                                         ") + nu(a_" + std::to_string(k + 1) + ")",
                                     std::move(lhs), std::move(rhs), true);
      all = all && q.holds;
      cert.detail.push_back(std::move(q));
    }
  };
  for (const Rational& mu : ms) {
    const PuiseuxNumber lambda = PuiseuxNumber::t_power(mu);
    const std::string where = " at lambda=t^(" + to_string(mu) + ")";
    run(SlicePattern::x_1_lambda, lambda, where);
    run(SlicePattern::one_y_lambda, lambda, where);
    run(SlicePattern::one_lambda_z, lambda, where);
  }
  run(SlicePattern::one_y_zero, PuiseuxNumber(), "");
  run(SlicePattern::one_zero_z, PuiseuxNumber(), "");
  if (all) {
    cert.verdict = Verdict::proves_stable;
    cert.notes.push_back("every slice has positive coefficients with strictly concave valuations, "
                         "hence is real-rooted over R{t}; lambda = t^mu checked only at the sampled mu");
  } else {
    cert.verdict = Verdict::inconclusive;
  }
  return {std::move(poly), std::move(cert)};
}

CheckReport trop_of_hpp_is_hive_check(const PuiseuxPolynomial& p) {
  require_trivariate_homogeneous(p, "trop_of_hpp_is_hive_check");
  for (const auto& [alpha, c] : p.terms()) {
    if (!c.is_positive()) throw InputError("trop_of_hpp_is_hive_check: coefficients must be positive");
  }
  const DiscreteFunction h = tropicalize(p);
  if (triangle_level(h.support())) return is_hive(h);
  auto r = check_M(h);
  if (!r.verdict) r.witness->detail += " (support is a proper subset of the triangle; checked (M))";
  return r;
}

}  // namespace mhpp
