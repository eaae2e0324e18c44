#include <gtest/gtest.h>

#include <random>

#include "mhpp/errors.hpp"
#include "mhpp/generators.hpp"
#include "mhpp/matrix.hpp"
#include "mhpp/tpoly.hpp"
#include "test_util.hpp"

using namespace mhpp;
using mhpp::testing::pts;

namespace {

using P = PuiseuxPolynomial;

PuiseuxNumber t(const Rational& e, const Rational& c = 1) { return PuiseuxNumber::t_power(e, c); }
P z(std::size_t n, std::size_t i) { return P::variable(n, i); }
P one(std::size_t n) { return P::constant(n, PuiseuxNumber(1)); }
P mono(std::initializer_list<int> a, const PuiseuxNumber& c = PuiseuxNumber(1)) {
  return P::monomial(LatticePoint(a), c);
}

P random_poly(std::mt19937_64& rng, std::size_t n, bool nonnegative) {
  std::uniform_int_distribution<int> deg(0, 2), nterms(1, 4), e(-2, 2);
  P p(n);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> a(n);
    for (auto& x : a) x = deg(rng);
    Rational c = mhpp::testing::random_rational(rng, 3, 2);
    if (nonnegative) c = abs(c) + 1;
    p.add_term(LatticePoint(a), t(e(rng), c));
  }
  return p;
}

template <class T>
T cofactor_det(const Matrix<T>& a, const T& one_v) {
  const std::size_t n = a.rows();
  if (n == 0) return one_v;
  T zero = one_v - one_v;
  T acc = zero;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) cols.push_back(j);
    }
    T term = a(0, c) * cofactor_det(a.submatrix(rows, cols), one_v);
    if (c % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

TEST(Polynomial, Support) {
  const P p = one(2) + mono({1, 1}, t(1));
  EXPECT_EQ(support(p), pts({{0, 0}, {1, 1}}));
  EXPECT_TRUE(support(P(2)).empty());
  EXPECT_EQ(support(pow(z(2, 0) + z(2, 1), 2)), pts({{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Polynomial, Tropicalize) {
  EXPECT_EQ(tropicalize(one(2) + mono({1, 1}, t(3))), mhpp::testing::fn({{{0, 0}, 0}, {{1, 1}, 3}}));
  const P q = (one(3) + mono({1, 1, 0}, t(1))) * (one(3) + mono({1, 0, 1}, t(2)));
  EXPECT_EQ(tropicalize(q).at({2, 1, 1}), 3);
  const P r = mono({2, 0}) + mono({1, 1}, 2);
  EXPECT_EQ(tropicalize(r), mhpp::testing::fn({{{2, 0}, 0}, {{1, 1}, 0}}));
  EXPECT_THROW(tropicalize(P(2)), InputError);
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(partial_derivative(mono({2, 1}), 0), mono({1, 1}, 2));
  EXPECT_EQ((one(2) + z(2, 0)) * (one(2) + z(2, 1)), one(2) + z(2, 0) + z(2, 1) + mono({1, 1}));
  EXPECT_TRUE((z(2, 0) - z(2, 0)).is_zero());
  EXPECT_THROW(z(2, 0) + z(3, 0), InputError);
  EXPECT_EQ(pow(one(1) + z(1, 0), 3).coefficient({2}), PuiseuxNumber(3));
}

TEST(Polynomial, Shift) {
  EXPECT_EQ(substitute_shift(mono({2}), 0), mono({2, 0}) + mono({1, 1}, 2) + mono({0, 2}));
  EXPECT_EQ(substitute_shift(mono({0, 1}), 0), mono({0, 1, 0}));
  EXPECT_EQ(substitute_shift(one(2) + mono({1, 1}), 0), one(3) + mono({1, 1, 0}) + mono({0, 1, 1}));
}

TEST(Polynomial, Diagonalize) {
  EXPECT_EQ(diagonalize(mono({1, 1}), 0, 1), mono({2}));
  EXPECT_EQ(diagonalize(z(2, 0) + z(2, 1), 0, 1), mono({1}, 2));
  EXPECT_EQ(diagonalize((one(2) + z(2, 0)) * (one(2) + z(2, 1)), 0, 1), pow(one(1) + z(1, 0), 2));
}

TEST(Polynomial, ScaleVar) {
  EXPECT_EQ(scale_var(one(1) + z(1, 0), 0, t(1)), one(1) + mono({1}, t(1)));
  EXPECT_EQ(scale_var(one(2) + z(2, 0) + mono({1, 1}), 0, PuiseuxNumber()), one(2));
  EXPECT_THROW(scale_var(z(1, 0), 0, PuiseuxNumber(-1)), InputError);
  const P p = one(2) + mono({2, 1}, t(1)) + mono({1, 0}, 3);
  const auto shifted = tropicalize(scale_var(p, 0, t(Rational(1, 2))));
  for (const auto& [a, v] : tropicalize(p)) EXPECT_EQ(shifted.at(a), v + ratio(a[0], 2));
}

TEST(Polynomial, Polarize) {
  EXPECT_EQ(polarize_poly(mono({2})), mono({1, 1}));
  EXPECT_EQ(polarize_poly(mono({2}) + mono({1}, 2) + one(1)), mono({1, 1}) + mono({1, 0}) + mono({0, 1}) + one(2));
  const P m = one(3) + mono({1, 1, 0}, t(2)) + mono({0, 1, 1}, -3);
  EXPECT_EQ(polarize_poly(m), m);
}

TEST(Polynomial, Homogenize) {
  EXPECT_EQ(homogenize_poly(one(1) + z(1, 0)), z(2, 1) + z(2, 0));
  EXPECT_EQ(homogenize_poly(one(2) + mono({1, 1})), mono({0, 0, 2}) + mono({1, 1, 0}));
  EXPECT_EQ(homogenize_poly(mono({1, 1})), mono({1, 1, 0}));
}

TEST(Polynomial, Slice) {
  const P xyz = z(3, 0) + z(3, 1) + z(3, 2);
  const auto s = slice(pow(xyz, 2), SlicePattern::one_lambda_z, PuiseuxNumber(1));
  EXPECT_EQ(s, UnivariatePoly<PuiseuxNumber>({4, 4, 1}));
  EXPECT_EQ(slice(mono({2, 0, 0}), SlicePattern::x_1_lambda, t(1)), UnivariatePoly<PuiseuxNumber>({0, 0, 1}));
  EXPECT_TRUE(slice(mono({1, 1, 1}), SlicePattern::one_y_zero, PuiseuxNumber()).is_zero());
  EXPECT_THROW(slice(z(2, 0), SlicePattern::x_1_lambda, PuiseuxNumber(1)), InputError);
}

TEST(Polynomial, Evaluate) {
  const std::vector<PuiseuxNumber> tt{t(1), t(1)};
  EXPECT_EQ(evaluate(one(2) + mono({1, 1}), tt), PuiseuxNumber(1) + t(2));
  const std::vector<PuiseuxNumber> zeros{PuiseuxNumber(), PuiseuxNumber()};
  EXPECT_EQ(evaluate(mono({1, 0}) + one(2) * PuiseuxNumber(5), zeros), PuiseuxNumber(5));
  const std::vector<PuiseuxNumber> opp{t(1), -t(1)};
  EXPECT_TRUE(evaluate(z(2, 0) + z(2, 1), opp).is_zero());
}

TEST(Polynomial, TermCap) {
  const std::size_t old = term_cap();
  set_term_cap(10);
  P big = one(4);
  for (std::size_t i = 0; i < 4; ++i) big = big + z(4, i);
  EXPECT_THROW(pow(big, 3), GuardExceeded);
  set_term_cap(old);
  EXPECT_NO_THROW(pow(big, 3));
}

TEST(Berkowitz, Examples) {
  Matrix<PuiseuxNumber> id(3, 3, PuiseuxNumber());
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(berkowitz_det(id, PuiseuxNumber(1)), PuiseuxNumber(1));
  const Matrix<PuiseuxNumber> skew({{PuiseuxNumber(), t(1)}, {-t(1), PuiseuxNumber()}});
  EXPECT_EQ(berkowitz_det(skew, PuiseuxNumber(1)), t(2));
  EXPECT_EQ(berkowitz_det(Matrix<Rational>(), Rational(1)), 1);
  EXPECT_THROW(berkowitz_det(Matrix<Rational>(2, 3, Rational(0)), Rational(1)), InputError);
}

TEST(Berkowitz, MatchesCofactor) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 5;
    Matrix<Rational> a(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = mhpp::testing::random_rational(rng);
    }
    EXPECT_EQ(berkowitz_det(a, Rational(1)), cofactor_det(a, Rational(1)));
  }
  for (int k = 0; k < 30; ++k) {
    const auto a = random_puiseux_matrix(4, 4, static_cast<std::uint64_t>(k));
    EXPECT_EQ(berkowitz_det(a, PuiseuxNumber(1)), cofactor_det(a, PuiseuxNumber(1)));
  }
}

TEST(Berkowitz, PolynomialEntries) {
  // det [[z1, z2], [z2, z1]] = z1^2 - z2^2.
  const Matrix<P> m({{z(2, 0), z(2, 1)}, {z(2, 1), z(2, 0)}});
  EXPECT_EQ(berkowitz_det(m, one(2)), mono({2, 0}) - mono({0, 2}));
}

class TpolyProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{31337};
};

TEST_F(TpolyProperty, MultiplicationLaws) {
  for (int k = 0; k < 100; ++k) {
    const P a = random_poly(rng, 2, false), b = random_poly(rng, 2, false), c = random_poly(rng, 2, false);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST_F(TpolyProperty, PolarizationCompatibility) {
  for (int k = 0; k < 60; ++k) {
    const P p = random_poly(rng, 3, false);
    if (p.is_zero()) continue;
    const P pol = polarize_poly(p);
    EXPECT_TRUE(pol.is_multiaffine());
    EXPECT_EQ(support(pol), polarize_set(support(p)));
    EXPECT_EQ(collapse_slots(pol, SlotLayout::of(support(p))), p);
  }
}

TEST_F(TpolyProperty, HomogenizeThenDehomogenize) {
  for (int k = 0; k < 60; ++k) {
    const P p = random_poly(rng, 2, false);
    if (p.is_zero()) continue;
    const P h = homogenize_poly(p);
    EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(substitute_value(h, 2, PuiseuxNumber(1)), p);
  }
}

TEST_F(TpolyProperty, TropicalizationOfProductsIsMaxPlus) {
  for (int k = 0; k < 60; ++k) {
    const P a = random_poly(rng, 2, true), b = random_poly(rng, 2, true);
    const auto ta = tropicalize(a), tb = tropicalize(b), tab = tropicalize(a * b);
    std::map<LatticePoint, Rational> expect;
    for (const auto& [x, vx] : ta) {
      for (const auto& [y, vy] : tb) {
        auto [it, fresh] = expect.emplace(x + y, vx + vy);
        if (!fresh && it->second < vx + vy) it->second = vx + vy;
      }
    }
    ASSERT_EQ(tab.size(), expect.size());
    for (const auto& [g, v] : expect) EXPECT_EQ(tab.at(g), v);
  }
}

TEST(TpolyClosure, OperationsPreserveMConcavity) {
  const P base = degree_sequence_poly(random_graph(4, 4, 3));
  ASSERT_TRUE(check_M(tropicalize(base)).verdict);
  EXPECT_TRUE(check_M(tropicalize(substitute_shift(base, 0))).verdict);
  EXPECT_TRUE(check_M(tropicalize(diagonalize(base, 0, 1))).verdict);
  EXPECT_TRUE(check_M(tropicalize(scale_var(base, 2, t(Rational(3, 2), 2)))).verdict);
  EXPECT_TRUE(check_M(tropicalize(partial_derivative(base, 1))).verdict);
}
