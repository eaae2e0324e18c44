#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace mhpp {

/// Dense univariate polynomial, lowest degree first.  Trailing zeros are
/// trimmed, so the empty coefficient list is the zero polynomial.
template <class Scalar>
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

}  // namespace mhpp
