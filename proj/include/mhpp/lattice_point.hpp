#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace mhpp {

/// Integer vector in Z^n.  Ordered lexicographically.
class LatticePoint {
 public:
  LatticePoint() = default;
  LatticePoint(std::initializer_list<int> coords) : coords_(coords) {}
  explicit LatticePoint(std::vector<int> coords) : coords_(std::move(coords)) {}

  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<int>(dim, 0)); }
  static LatticePoint unit(std::size_t dim, std::size_t index, int sign = 1) {
    LatticePoint p = zero(dim);
    p.coords_[index] = sign;
    return p;
  }

  std::size_t dim() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  LatticePoint& operator+=(const LatticePoint& o);
  LatticePoint& operator-=(const LatticePoint& o);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  LatticePoint operator-() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

/// |p| = sum of absolute values.
long norm1(const LatticePoint& p);

/// Plain coordinate sum (the "degree" of an exponent vector).
long coord_sum(const LatticePoint& p);

long distance1(const LatticePoint& a, const LatticePoint& b);

}  // namespace mhpp
