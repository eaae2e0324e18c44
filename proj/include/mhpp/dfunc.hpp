#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mhpp/lattice.hpp"
#include "mhpp/rational.hpp"

namespace mhpp {

/// Exact-rational function on a finite nonempty support.  Points outside the
/// support carry the value -infinity implicitly.
class DiscreteFunction {
 public:
  using Map = std::map<LatticePoint, Rational>;

  DiscreteFunction(std::size_t dim, Map values);
  /// Dimension taken from the first entry.
  explicit DiscreteFunction(const std::vector<std::pair<LatticePoint, Rational>>& entries);

  static DiscreteFunction constant(const PointSet& support, const Rational& c);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  PointSet support() const;
  bool contains(const LatticePoint& p) const { return values_.count(p) != 0; }
  const Rational* find(const LatticePoint& p) const;
  /// Throws InputError outside the support.
  const Rational& at(const LatticePoint& p) const;
  const Map& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const DiscreteFunction&, const DiscreteFunction&) = default;

 private:
  std::size_t dim_;
  Map values_;
};

/// Exchange axiom (M): every step s from alpha toward beta admits a step t
/// with f(alpha)+f(beta) <= f(alpha+s+t)+f(beta-s-t).
CheckReport check_M(const DiscreteFunction& f);

/// Local form of (M) restricted to pairs at distance 4.  Fails with a
/// precondition witness when the support is not a constant-parity jump system.
CheckReport check_M_loc(const DiscreteFunction& f);

/// M-natural concavity, defined as check_M of the homogenization.
CheckReport check_M_natural(const DiscreteFunction& f);

/// The printed two-branch (M-natural) axiom, evaluated literally.  Weaker than
/// check_M_natural; kept for comparison.
CheckReport check_M_natural_literal(const DiscreteFunction& f);

DiscreteFunction polarize_function(const DiscreteFunction& f);

/// Homogenizes to degree r = max |alpha| over the support.
DiscreteFunction homogenize_function(const DiscreteFunction& f);

/// d_J(alpha) = -min_{beta in J} |alpha - beta| on all of the simplex
/// {alpha in N^m : sum alpha = n}.  J must be a constant-sum jump system there.
DiscreteFunction distance_function(const PointSet& j, std::size_t m, long n);

/// Unit rhombus of the triangle {alpha in N^3 : sum alpha = n}: beta, gamma
/// form the short diagonal, alpha, delta the long one.
struct Rhombus {
  LatticePoint alpha, beta, gamma, delta;
  std::size_t apex = 0;  // coordinate raised from alpha to delta

  /// Common coordinate of beta and gamma.
  int level() const { return beta[apex]; }
  friend bool operator==(const Rhombus&, const Rhombus&) = default;
};

std::vector<Rhombus> enumerate_rhombi(long n);

/// Level n when the support is exactly {alpha in N^3 : sum alpha = n}.
std::optional<long> triangle_level(const PointSet& support);

/// Rhombus inequalities h(beta)+h(gamma) >= h(alpha)+h(delta) (strict: >).
/// Throws InputError unless the support is a full triangle.
CheckReport is_hive(const DiscreteFunction& h, bool strict = false);

/// -sum_i C(alpha_i, 2).  Every rhombus gap of this function is exactly 1.
long base_hive_value(const LatticePoint& alpha);

struct MaxResult {
  Rational value;
  PointSet argmax;
};

MaxResult brute_max(const DiscreteFunction& f);

}  // namespace mhpp
