#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhpp/lattice_point.hpp"
#include "mhpp/rational.hpp"

namespace mhpp {

/// One exchange candidate t examined while looking for a repair step.
struct Candidate {
  LatticePoint step;
  bool in_support = false;         // every required exchange point exists
  std::optional<Rational> value;   // exchange-side value, when evaluated
};

/// Concrete record of why a check failed.  Every field is meant to be
/// re-checked by hand or by an independent program.
struct Witness {
  std::string rule;
  std::vector<std::pair<std::string, LatticePoint>> points;
  std::vector<std::pair<std::string, std::vector<Rational>>> vectors;
  std::vector<Candidate> candidates;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::string detail;

  const LatticePoint* point(std::string_view name) const {
    for (const auto& [key, p] : points) {
      if (key == name) return &p;
    }
    return nullptr;
  }
};

struct CheckReport {
  bool verdict = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return verdict; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(Witness w) { return {false, std::move(w)}; }
  bool precondition_failed() const {
    return !verdict && witness && witness->rule == "precondition";
  }
};

inline CheckReport precondition_failure(std::string detail) {
  Witness w;
  w.rule = "precondition";
  w.detail = std::move(detail);
  return CheckReport::fail(std::move(w));
}

}  // namespace mhpp
