#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhpp/dfunc.hpp"
#include "mhpp/tpoly.hpp"
#include "mhpp/univariate.hpp"

namespace mhpp {

using RationalPoly = UnivariatePoly<Rational>;

enum class CertificateKind { newton, val_newton_strict, hutchinson, sturm, rhombus_quotient, slice_harness };
enum class Verdict { proves_stable, proves_unstable, inconclusive };

const char* to_string(CertificateKind k);
const char* to_string(Verdict v);

/// lhs >= rhs (or lhs > rhs when strict), both sides exact.
struct Inequality {
  std::string label;
  PuiseuxNumber lhs;
  PuiseuxNumber rhs;
  bool strict = false;
  bool holds = false;
};

struct StabilityCertificate {
  CertificateKind kind = CertificateKind::sturm;
  Verdict verdict = Verdict::inconclusive;
  std::vector<Inequality> detail;
  std::vector<std::string> notes;
  /// The underlying hypothesis quantifies over all lambda > 0 and was only
  /// checked at finitely many sample values.
  bool sampled = false;
};

/// Re-evaluates every inequality of a certificate; true when all recorded
/// `holds` flags match a fresh comparison.
bool recheck(const StabilityCertificate& c);

/// Newton's inequalities a_k^2/C(n,k)^2 >= a_{k-1} a_{k+1}/(C(n,k-1) C(n,k+1)).
/// Throws InputError when deg p > n.
CheckReport newton_check(const RationalPoly& p, long n);

/// Concavity 2 f(k) >= f(k-1) + f(k+1) (strict: >) of a function on an
/// integer interval.  Throws InputError if the support has gaps.
CheckReport val_newton_check(const DiscreteFunction& f, bool strict = false);

/// Hutchinson's criterion a_k^2 >= 4 a_{k-1} a_{k+1} on the support interval.
/// Throws InputError unless every coefficient on [M, N] is positive.
StabilityCertificate hutchinson_check(const RationalPoly& p, bool strict = false);
StabilityCertificate hutchinson_check(const UnivariatePoly<PuiseuxNumber>& p, bool strict = false);

struct SturmResult {
  bool all_real = false;
  long distinct_real_count = 0;
  bool multiple_nonzero_root = false;
  /// Real roots counted with multiplicity.
  long real_count = 0;
  long degree = 0;
};

/// Exact real-root information from a square-free decomposition and Sturm
/// chains.  Throws InputError for the zero polynomial.
SturmResult sturm_real_rooted(const RationalPoly& p);

/// Real roots of p in the half-open interval (a, b], counted without multiplicity.
long sturm_count_in(const RationalPoly& p, const Rational& a, const Rational& b);

/// Division with remainder over Q.
std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& num, const RationalPoly& den);
RationalPoly derivative(const RationalPoly& p);
/// Monic greatest common divisor.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// Rational coefficients of a slice; throws if some coefficient is not constant.
RationalPoly to_rational(const UnivariatePoly<PuiseuxNumber>& p);

/// sum_k 4^{-C(k,2)} t^{f(k)} z^k for an M-natural-concave f on [M, N].
/// Throws InputError when f is not M-natural concave on an interval.
PuiseuxPolynomial onevar_hpp_construct(const DiscreteFunction& f);

/// Evaluates d_iP d_jP - d_ijP * P at every sample and every pair i < j.  A
/// negative value refutes upper-half-plane stability (verdict false, witness
/// with the sample and both sides).  Passing every sample is inconclusive.
CheckReport sr_falsifier(const PuiseuxPolynomial& p, std::span<const std::vector<Rational>> samples);

std::vector<Rational> default_lambda_samples();  // 1/4, 1/2, 1, 2, 4
std::vector<Rational> default_mu_samples();      // -1, 0, 1

/// Real-rootedness of the five slice families of a homogeneous trivariate
/// polynomial with nonnegative constant coefficients, at each sampled lambda.
StabilityCertificate lemma_basic_harness(const PuiseuxPolynomial& p,
                                         std::span<const Rational> lambdas);

struct RhombusQuotientReport {
  CheckReport report;
  std::optional<Rational> min_quotient;
  std::optional<Rhombus> min_rhombus;
};

/// a_beta a_gamma / (a_alpha a_delta) >= bound for every rhombus, with bound
/// (l+1)/(2l) (l the common coordinate of beta, gamma) or the given threshold.
RhombusQuotientReport rhombus_quotient_check(const PuiseuxPolynomial& p,
                                             const std::optional<Rational>& threshold = std::nullopt);

struct QuantBResult {
  PuiseuxPolynomial polynomial;
  RhombusQuotientReport rhombus;
  StabilityCertificate harness;
};

/// Coefficients Q^{h0(alpha) + h(alpha)}, h0(i,j,k) = -C(i,2)-C(j,2)-C(k,2).
/// Requires an integer-valued hive and Q >= 2(n-1) (unless force).
QuantBResult quant_b_construct(const DiscreteFunction& h, const Rational& q, bool force = false,
                               std::span<const Rational> lambdas = {});

struct StrictHiveResult {
  PuiseuxPolynomial polynomial;
  StabilityCertificate certificate;
};

/// P = sum t^{h(alpha)} x^a y^b z^c for a strict hive h, certified by strict
/// valuation-Newton on every slice with lambda = t^mu.
StrictHiveResult strict_hive_to_puiseux_hpp(const DiscreteFunction& h,
                                            std::span<const Rational> mus = {});

/// is_hive(trop(P)) for P with positive coefficients supported in a triangle.
CheckReport trop_of_hpp_is_hive_check(const PuiseuxPolynomial& p);

}  // namespace mhpp
