#include "mhpp/lattice.hpp"

#include <cstdlib>
#include <functional>
#include <string>

#include "mhpp/errors.hpp"
#include "mhpp/parallel.hpp"

namespace mhpp {

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = *this;
  for (int& c : r.coords_) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

long norm1(const LatticePoint& p) {
  long s = 0;
  for (int c : p) s += std::labs(c);
  return s;
}

long coord_sum(const LatticePoint& p) {
  long s = 0;
  for (int c : p) s += c;
  return s;
}

long distance1(const LatticePoint& a, const LatticePoint& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::labs(static_cast<long>(a[i]) - b[i]);
  return s;
}

std::vector<Step> steps_between(const LatticePoint& a, const LatticePoint& b) {
  std::vector<Step> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) out.push_back({i, 1});
    if (a[i] > b[i]) out.push_back({i, -1});
  }
  return out;
}

std::vector<LatticePoint> steps_toward(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) throw InputError("steps_toward: dimension mismatch");
  std::vector<LatticePoint> out;
  for (const Step& s : steps_between(a, b)) out.push_back(s.as_point(a.dim()));
  return out;
}

PointSet::PointSet(std::size_t dim, const std::vector<LatticePoint>& points) : dim_(dim) {
  for (const auto& p : points) insert(p);
}

PointSet::PointSet(const std::vector<LatticePoint>& points)
    : PointSet(points.empty() ? 0 : points.front().dim(), points) {
  if (points.empty()) throw InputError("PointSet: cannot infer dimension of an empty list");
}

void PointSet::insert(const LatticePoint& p) {
  if (p.dim() != dim_) {
    throw InputError("PointSet: point of dimension " + std::to_string(p.dim()) +
                     " in a set of dimension " + std::to_string(dim_));
  }
  points_.insert(p);
}

std::ostream& operator<<(std::ostream& os, const PointSet& s) {
  os << '{';
  bool first = true;
  for (const auto& p : s) {
    if (!first) os << ", ";
    first = false;
    os << p;
  }
  return os << '}';
}

namespace {

Witness pair_witness(std::string rule, const LatticePoint& a, const LatticePoint& b,
                     const Step& s) {
  Witness w;
  w.rule = std::move(rule);
  w.points = {{"alpha", a}, {"beta", b}, {"s", s.as_point(a.dim())}};
  return w;
}

// Runs check(alpha, beta) over all ordered pairs, first failure wins.
template <class Check>
CheckReport over_pairs(const PointSet& s, Check&& check) {
  const auto pts = s.to_vector();
  auto failure = first_failure<Witness>(pts.size(), [&](std::size_t i) -> std::optional<Witness> {
    for (const auto& beta : pts) {
      if (auto w = check(pts[i], beta)) return w;
    }
    return std::nullopt;
  });
  if (failure) return CheckReport::fail(std::move(*failure));
  return CheckReport::pass();
}

// Looks for t with alpha+s+t and beta-s-t in s; records every candidate.
bool two_step_exchange(const PointSet& set, const LatticePoint& next, const LatticePoint& beta,
                       const Step& s, Witness* record) {
  for (const Step& t : steps_between(next, beta)) {
    const bool ok = set.contains(next + t) && set.contains((beta - s) - t);
    if (record) record->candidates.push_back({t.as_point(next.dim()), ok, std::nullopt});
    if (ok) return true;
  }
  return false;
}

}  // namespace

CheckReport is_jump_system(const PointSet& set) {
  return over_pairs(set, [&](const LatticePoint& a, const LatticePoint& b) -> std::optional<Witness> {
    for (const Step& s : steps_between(a, b)) {
      const LatticePoint next = a + s;
      if (set.contains(next)) continue;
      bool repaired = false;
      for (const Step& t : steps_between(next, b)) {
        if (set.contains(next + t)) {
          repaired = true;
          break;
        }
      }
      if (!repaired) {
        Witness w = pair_witness("J1", a, b, s);
        for (const Step& t : steps_between(next, b)) {
          w.candidates.push_back({t.as_point(a.dim()), false, std::nullopt});
        }
        w.detail = "alpha+s is outside the set and no step t from alpha+s toward beta lands inside";
        return w;
      }
    }
    return std::nullopt;
  });
}

CheckReport check_J2(const PointSet& set) {
  return over_pairs(set, [&](const LatticePoint& a, const LatticePoint& b) -> std::optional<Witness> {
    for (const Step& s : steps_between(a, b)) {
      const LatticePoint next = a + s;
      if (two_step_exchange(set, next, b, s, nullptr)) continue;
      Witness w = pair_witness("J2", a, b, s);
      two_step_exchange(set, next, b, s, &w);
      w.detail = "no step t with alpha+s+t and beta-s-t both in the set";
      return w;
    }
    return std::nullopt;
  });
}

CheckReport check_J_natural(const PointSet& set) {
  return over_pairs(set, [&](const LatticePoint& a, const LatticePoint& b) -> std::optional<Witness> {
    for (const Step& s : steps_between(a, b)) {
      const LatticePoint next = a + s;
      if (set.contains(next) && set.contains(b - s)) continue;
      if (two_step_exchange(set, next, b, s, nullptr)) continue;
      Witness w = pair_witness("J-natural", a, b, s);
      two_step_exchange(set, next, b, s, &w);
      w.detail = "neither alpha+s, beta-s both in the set nor a two-step exchange exists";
      return w;
    }
    return std::nullopt;
  });
}

bool is_constant_parity(const PointSet& s) {
  if (s.empty()) throw InputError("constant parity is undefined for the empty set");
  const long parity = norm1(*s.begin()) % 2;
  for (const auto& p : s) {
    if (norm1(p) % 2 != parity) return false;
  }
  return true;
}

bool is_constant_sum(const PointSet& s) {
  if (s.empty()) throw InputError("constant sum is undefined for the empty set");
  const long first = norm1(*s.begin());
  for (const auto& p : s) {
    if (norm1(p) != first) return false;
  }
  return true;
}

bool is_binary(const PointSet& s) {
  for (const auto& p : s) {
    for (int c : p) {
      if (c != 0 && c != 1) return false;
    }
  }
  return true;
}

bool is_nonnegative(const PointSet& s) {
  for (const auto& p : s) {
    for (int c : p) {
      if (c < 0) return false;
    }
  }
  return true;
}

CheckReport is_delta_matroid(const PointSet& s) {
  for (const auto& p : s) {
    for (int c : p) {
      if (c != 0 && c != 1) {
        Witness w;
        w.rule = "binary";
        w.points = {{"alpha", p}};
        w.detail = "point outside the 0/1 cube";
        return CheckReport::fail(std::move(w));
      }
    }
  }
  return is_jump_system(s);
}

CheckReport is_matroid_basis_set(const PointSet& s) {
  if (s.empty()) return precondition_failure("empty set has no bases");
  if (!is_binary(s)) return precondition_failure("set is not contained in {0,1}^n");
  if (!is_constant_sum(s)) return precondition_failure("set does not have constant sum");
  return over_pairs(s, [&](const LatticePoint& a, const LatticePoint& b) -> std::optional<Witness> {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a[i] != 1 || b[i] != 0) continue;
      Witness w;
      w.rule = "basis-exchange";
      w.points = {{"A", a}, {"B", b}, {"i", LatticePoint::unit(a.dim(), i)}};
      bool found = false;
      for (std::size_t j = 0; j < a.dim() && !found; ++j) {
        if (a[j] != 0 || b[j] != 1) continue;
        LatticePoint swapped = a;
        swapped[i] = 0;
        swapped[j] = 1;
        found = s.contains(swapped);
        w.candidates.push_back({LatticePoint::unit(a.dim(), j), found, std::nullopt});
      }
      if (!found) {
        w.detail = "no j with A-e_i+e_j in the set";
        return w;
      }
    }
    return std::nullopt;
  });
}

PointSet project(const PointSet& s, std::size_t j) {
  if (s.dim() < 2 || j >= s.dim()) {
    throw InputError("project: coordinate " + std::to_string(j) + " out of range for dimension " +
                     std::to_string(s.dim()));
  }
  PointSet out(s.dim() - 1);
  for (const auto& p : s) {
    std::vector<int> c = p.coords();
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(j));
    out.insert(LatticePoint(std::move(c)));
  }
  return out;
}

SlotLayout::SlotLayout(std::vector<int> kappa) : kappa_(std::move(kappa)) {
  offsets_.reserve(kappa_.size());
  for (int k : kappa_) {
    if (k < 0) throw InputError("SlotLayout: negative slot count");
    offsets_.push_back(total_);
    total_ += static_cast<std::size_t>(k);
  }
}

SlotLayout SlotLayout::of(const PointSet& s) {
  std::vector<int> kappa(s.dim(), 0);
  for (const auto& p : s) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (p[i] < 0) throw InputError("polarization requires nonnegative coordinates");
      kappa[i] = std::max(kappa[i], p[i]);
    }
  }
  return SlotLayout(std::move(kappa));
}

LatticePoint SlotLayout::collapse(const LatticePoint& sigma) const {
  LatticePoint out = LatticePoint::zero(kappa_.size());
  for (std::size_t i = 0; i < kappa_.size(); ++i) {
    for (int j = 0; j < kappa_[i]; ++j) out[i] += sigma[offsets_[i] + static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<LatticePoint> SlotLayout::lift(const LatticePoint& alpha) const {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < kappa_.size(); ++i) {
    if (alpha[i] < 0 || alpha[i] > kappa_[i]) return out;
  }
  LatticePoint sigma = LatticePoint::zero(total_);
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t var, std::size_t slot,
                                                                int remaining) {
    if (var == kappa_.size()) {
      out.push_back(sigma);
      return;
    }
    const std::size_t end = offsets_[var] + static_cast<std::size_t>(kappa_[var]);
    if (remaining == 0) {
      rec(var + 1, var + 1 < kappa_.size() ? offsets_[var + 1] : 0,
          var + 1 < kappa_.size() ? alpha[var + 1] : 0);
      return;
    }
    for (std::size_t k = slot; k + static_cast<std::size_t>(remaining) <= end; ++k) {
      sigma[k] = 1;
      rec(var, k + 1, remaining - 1);
      sigma[k] = 0;
    }
  };
  if (kappa_.empty()) {
    out.push_back(sigma);
  } else {
    rec(0, offsets_[0], alpha[0]);
  }
  return out;
}

PointSet polarize_set(const PointSet& a) { return polarize_set(a, SlotLayout::of(a)); }

PointSet polarize_set(const PointSet& a, const SlotLayout& layout) {
  if (!is_nonnegative(a)) throw InputError("polarization requires nonnegative coordinates");
  PointSet out(layout.slots());
  for (const auto& p : a) {
    for (const auto& sigma : layout.lift(p)) out.insert(sigma);
  }
  return out;
}

PointSet homogenize_set(const PointSet& j, long r) {
  if (!is_nonnegative(j)) throw InputError("homogenization requires nonnegative coordinates");
  PointSet out(j.dim() + 1);
  for (const auto& p : j) {
    const long slack = r - coord_sum(p);
    if (slack < 0) {
      throw InputError("homogenize: r = " + std::to_string(r) + " is below |alpha| = " +
                       std::to_string(coord_sum(p)));
    }
    std::vector<int> c = p.coords();
    c.push_back(static_cast<int>(slack));
    out.insert(LatticePoint(std::move(c)));
  }
  return out;
}

std::vector<LatticePoint> simplex_points(std::size_t m, long n) {
  std::vector<LatticePoint> out;
  if (n < 0) return out;
  LatticePoint cur = LatticePoint::zero(m);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
    if (i + 1 >= m) {
      if (m == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
      }
      cur[m - 1] = static_cast<int>(remaining);
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      cur[i] = static_cast<int>(v);
      rec(i + 1, remaining - v);
    }
    cur[i] = 0;
  };
  rec(0, n);
  return out;
}

}  // namespace mhpp
