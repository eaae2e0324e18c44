#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "mhpp/lattice_point.hpp"
#include "mhpp/report.hpp"

namespace mhpp {

/// Unit move +-e_index.
struct Step {
  std::size_t index = 0;
  int sign = 1;

  LatticePoint as_point(std::size_t dim) const { return LatticePoint::unit(dim, index, sign); }
  friend bool operator==(const Step&, const Step&) = default;
};

inline LatticePoint operator+(LatticePoint p, const Step& s) {
  p[s.index] += s.sign;
  return p;
}
inline LatticePoint operator-(LatticePoint p, const Step& s) {
  p[s.index] -= s.sign;
  return p;
}

/// Steps from a toward b, in increasing coordinate order.
std::vector<Step> steps_between(const LatticePoint& a, const LatticePoint& b);

/// All s with |s| = 1 and |a + s - b| = |a - b| - 1.  Throws on dimension mismatch.
std::vector<LatticePoint> steps_toward(const LatticePoint& a, const LatticePoint& b);

/// Finite subset of Z^dim, iterated in lexicographic order.
class PointSet {
 public:
  explicit PointSet(std::size_t dim = 0) : dim_(dim) {}
  PointSet(std::size_t dim, const std::vector<LatticePoint>& points);
  /// Dimension taken from the first point; the list must be nonempty.
  PointSet(const std::vector<LatticePoint>& points);  // NOLINT(google-explicit-constructor)

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& p) const { return points_.count(p) != 0; }
  void insert(const LatticePoint& p);

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  std::vector<LatticePoint> to_vector() const { return {points_.begin(), points_.end()}; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::set<LatticePoint> points_;
};

std::ostream& operator<<(std::ostream& os, const PointSet& s);

// Set-level axioms.  All checks are exhaustive over pairs (alpha, beta) in
// lexicographic order; the witness is the first failure found.

CheckReport is_jump_system(const PointSet& s);
CheckReport check_J2(const PointSet& s);
CheckReport check_J_natural(const PointSet& s);

/// Both throw InputError on an empty set.
bool is_constant_parity(const PointSet& s);
bool is_constant_sum(const PointSet& s);

bool is_binary(const PointSet& s);
bool is_nonnegative(const PointSet& s);

CheckReport is_delta_matroid(const PointSet& s);
CheckReport is_matroid_basis_set(const PointSet& s);

/// Drops coordinate j (0-based).  Requires dim >= 2.
PointSet project(const PointSet& s, std::size_t j);

/// Slot layout of a polarization: variable i owns kappa[i] binary slots,
/// stored contiguously starting at offset(i).
class SlotLayout {
 public:
  explicit SlotLayout(std::vector<int> kappa);
  static SlotLayout of(const PointSet& s);

  const std::vector<int>& kappa() const { return kappa_; }
  std::size_t slots() const { return total_; }
  std::size_t offset(std::size_t var) const { return offsets_[var]; }
  std::size_t variables() const { return kappa_.size(); }
  /// Sums each variable's slot block.
  LatticePoint collapse(const LatticePoint& sigma) const;
  /// Every 0/1 vector whose block sums equal alpha.
  std::vector<LatticePoint> lift(const LatticePoint& alpha) const;

 private:
  std::vector<int> kappa_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// Throws InputError on negative coordinates.
PointSet polarize_set(const PointSet& a);
PointSet polarize_set(const PointSet& a, const SlotLayout& layout);

/// Appends the slack coordinate r - |alpha|.  Throws if r is too small or a
/// point has a negative coordinate.
PointSet homogenize_set(const PointSet& j, long r);

/// The discrete simplex {alpha in N^m : sum alpha = n}, lexicographic order.
std::vector<LatticePoint> simplex_points(std::size_t m, long n);

}  // namespace mhpp
