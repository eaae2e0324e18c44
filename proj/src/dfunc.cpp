#include "mhpp/dfunc.hpp"

#include <string>

#include "mhpp/errors.hpp"
#include "mhpp/parallel.hpp"

namespace mhpp {

DiscreteFunction::DiscreteFunction(std::size_t dim, Map values)
    : dim_(dim), values_(std::move(values)) {
  if (values_.empty()) throw InputError("DiscreteFunction: support must be nonempty");
  for (const auto& [p, v] : values_) {
    if (p.dim() != dim_) throw InputError("DiscreteFunction: inconsistent point dimensions");
  }
}

DiscreteFunction::DiscreteFunction(const std::vector<std::pair<LatticePoint, Rational>>& entries)
    : DiscreteFunction(entries.empty() ? 0 : entries.front().first.dim(),
                       Map(entries.begin(), entries.end())) {
  if (values_.size() != entries.size()) throw InputError("DiscreteFunction: duplicate point");
}

DiscreteFunction DiscreteFunction::constant(const PointSet& support, const Rational& c) {
  Map m;
  for (const auto& p : support) m.emplace(p, c);
  return DiscreteFunction(support.dim(), std::move(m));
}

PointSet DiscreteFunction::support() const {
  PointSet s(dim_);
  for (const auto& [p, v] : values_) s.insert(p);
  return s;
}

const Rational* DiscreteFunction::find(const LatticePoint& p) const {
  auto it = values_.find(p);
  return it == values_.end() ? nullptr : &it->second;
}

const Rational& DiscreteFunction::at(const LatticePoint& p) const {
  if (const Rational* v = find(p)) return *v;
  throw InputError("DiscreteFunction: point outside the support");
}

namespace {

template <class Check>
CheckReport over_pairs(const DiscreteFunction& f, Check&& check) {
  std::vector<const DiscreteFunction::Map::value_type*> entries;
  for (const auto& e : f) entries.push_back(&e);
  auto failure = first_failure<Witness>(entries.size(), [&](std::size_t i) -> std::optional<Witness> {
    for (const auto* b : entries) {
      if (auto w = check(*entries[i], *b)) return w;
    }
    return std::nullopt;
  });
  if (failure) return CheckReport::fail(std::move(*failure));
  return CheckReport::pass();
}

// Searches t with both exchange points present and the (M) inequality.
// When `record` is set, every candidate is appended to it.
bool m_exchange(const DiscreteFunction& f, const LatticePoint& next, const LatticePoint& beta,
                const Step& s, const Rational& lhs, Witness* record) {
  for (const Step& t : steps_between(next, beta)) {
    const Rational* up = f.find(next + t);
    const Rational* down = f.find((beta - s) - t);
    Candidate c{t.as_point(next.dim()), up && down, std::nullopt};
    bool ok = false;
    if (up && down) {
      Rational rhs = *up + *down;
      ok = lhs <= rhs;
      c.value = std::move(rhs);
    }
    if (record) record->candidates.push_back(std::move(c));
    if (ok) return true;
  }
  return false;
}

Witness m_witness(std::string rule, const LatticePoint& a, const LatticePoint& b, const Step& s,
                  const Rational& lhs) {
  Witness w;
  w.rule = std::move(rule);
  w.points = {{"alpha", a}, {"beta", b}, {"s", s.as_point(a.dim())}};
  w.lhs = lhs;
  return w;
}

}  // namespace

CheckReport check_M(const DiscreteFunction& f) {
  auto report = over_pairs(f, [&](const auto& ea, const auto& eb) -> std::optional<Witness> {
    const auto& [a, fa] = ea;
    const auto& [b, fb] = eb;
    const Rational lhs = fa + fb;
    for (const Step& s : steps_between(a, b)) {
      const LatticePoint next = a + s;
      if (m_exchange(f, next, b, s, lhs, nullptr)) continue;
      Witness w = m_witness("M", a, b, s, lhs);
      m_exchange(f, next, b, s, lhs, &w);
      w.detail = "no step t satisfies f(alpha)+f(beta) <= f(alpha+s+t)+f(beta-s-t)";
      return w;
    }
    return std::nullopt;
  });
  if (!report.verdict && !is_constant_parity(f.support())) {
    report.witness->detail += " (support is not constant parity)";
  }
  return report;
}

CheckReport check_M_loc(const DiscreteFunction& f) {
  const PointSet support = f.support();
  if (!is_constant_parity(support)) return precondition_failure("support is not constant parity");
  if (auto js = is_jump_system(support); !js) {
    auto r = precondition_failure("support is not a jump system");
    r.witness->points = js.witness->points;
    return r;
  }
  return over_pairs(f, [&](const auto& ea, const auto& eb) -> std::optional<Witness> {
    const auto& [a, fa] = ea;
    const auto& [b, fb] = eb;
    if (distance1(a, b) != 4) return std::nullopt;
    const Rational lhs = fa + fb;
    for (const Step& s : steps_between(a, b)) {
      if (m_exchange(f, a + s, b, s, lhs, nullptr)) return std::nullopt;
    }
    Witness w;
    w.rule = "M-loc";
    w.points = {{"alpha", a}, {"beta", b}};
    w.lhs = lhs;
    for (const Step& s : steps_between(a, b)) m_exchange(f, a + s, b, s, lhs, &w);
    w.detail = "no steps s, t satisfy the exchange inequality for this distance-4 pair";
    return w;
  });
}

CheckReport check_M_natural(const DiscreteFunction& f) {
  return check_M(homogenize_function(f));
}

CheckReport check_M_natural_literal(const DiscreteFunction& f) {
  return over_pairs(f, [&](const auto& ea, const auto& eb) -> std::optional<Witness> {
    const auto& [a, fa] = ea;
    const auto& [b, fb] = eb;
    const Rational lhs = fa + fb;
    for (const Step& s : steps_between(a, b)) {
      const LatticePoint next = a + s;
      const Rational* up = f.find(next);
      const Rational* down = f.find(b - s);
      if (up && down && lhs <= *up + *down) continue;
      if (m_exchange(f, next, b, s, lhs, nullptr)) continue;
      Witness w = m_witness("M-natural-literal", a, b, s, lhs);
      if (up && down) w.rhs = *up + *down;
      m_exchange(f, next, b, s, lhs, &w);
      w.detail = "neither branch (i) nor branch (ii) holds";
      return w;
    }
    return std::nullopt;
  });
}

DiscreteFunction polarize_function(const DiscreteFunction& f) {
  const PointSet support = f.support();
  const SlotLayout layout = SlotLayout::of(support);
  DiscreteFunction::Map out;
  for (const auto& [p, v] : f) {
    for (auto& sigma : layout.lift(p)) out.emplace(std::move(sigma), v);
  }
  return DiscreteFunction(layout.slots(), std::move(out));
}

DiscreteFunction homogenize_function(const DiscreteFunction& f) {
  long r = 0;
  for (const auto& [p, v] : f) r = std::max(r, coord_sum(p));
  DiscreteFunction::Map out;
  for (const auto& [p, v] : f) {
    for (int c : p) {
      if (c < 0) throw InputError("homogenization requires nonnegative coordinates");
    }
    std::vector<int> c = p.coords();
    c.push_back(static_cast<int>(r - coord_sum(p)));
    out.emplace(LatticePoint(std::move(c)), v);
  }
  return DiscreteFunction(f.dim() + 1, std::move(out));
}

DiscreteFunction distance_function(const PointSet& j, std::size_t m, long n) {
  if (j.empty()) throw InputError("distance_function: J is empty");
  if (j.dim() != m) throw InputError("distance_function: J has the wrong dimension");
  for (const auto& p : j) {
    for (int c : p) {
      if (c < 0) throw InputError("distance_function: J is not inside the simplex");
    }
    if (coord_sum(p) != n) throw InputError("distance_function: J is not inside the simplex");
  }
  if (!is_jump_system(j)) throw InputError("distance_function: J is not a jump system");
  DiscreteFunction::Map out;
  for (auto& alpha : simplex_points(m, n)) {
    long best = -1;
    for (const auto& beta : j) {
      const long d = distance1(alpha, beta);
      if (best < 0 || d < best) best = d;
    }
    out.emplace(std::move(alpha), Rational(-best));
  }
  return DiscreteFunction(m, std::move(out));
}

std::vector<Rhombus> enumerate_rhombi(long n) {
  std::vector<Rhombus> out;
  if (n < 2) return out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    for (const auto& p : simplex_points(3, n)) {
      if (p[j] < 1 || p[k] < 1) continue;
      Rhombus r;
      r.apex = i;
      r.alpha = p;
      r.beta = p;
      r.beta[i] += 1;
      r.beta[j] -= 1;
      r.gamma = p;
      r.gamma[i] += 1;
      r.gamma[k] -= 1;
      r.delta = p;
      r.delta[i] += 2;
      r.delta[j] -= 1;
      r.delta[k] -= 1;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::optional<long> triangle_level(const PointSet& support) {
  if (support.dim() != 3 || support.empty()) return std::nullopt;
  const long n = coord_sum(*support.begin());
  if (n < 0) return std::nullopt;
  const auto full = simplex_points(3, n);
  if (full.size() != support.size()) return std::nullopt;
  for (const auto& p : full) {
    if (!support.contains(p)) return std::nullopt;
  }
  return n;
}

CheckReport is_hive(const DiscreteFunction& h, bool strict) {
  const auto n = triangle_level(h.support());
  if (!n) throw InputError("is_hive: support is not a full triangle {alpha in N^3 : sum = n}");
  for (const Rhombus& r : enumerate_rhombi(*n)) {
    Rational lhs = h.at(r.beta) + h.at(r.gamma);
    Rational rhs = h.at(r.alpha) + h.at(r.delta);
    const bool ok = strict ? lhs > rhs : lhs >= rhs;
    if (!ok) {
      Witness w;
      w.rule = strict ? "strict-rhombus" : "rhombus";
      w.points = {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}, {"delta", r.delta}};
      w.lhs = std::move(lhs);
      w.rhs = std::move(rhs);
      w.detail = strict ? "h(beta)+h(gamma) > h(alpha)+h(delta) fails"
                        : "h(beta)+h(gamma) >= h(alpha)+h(delta) fails";
      return CheckReport::fail(std::move(w));
    }
  }
  return CheckReport::pass();
}

long base_hive_value(const LatticePoint& alpha) {
  long v = 0;
  for (int a : alpha) v -= static_cast<long>(a) * (a - 1) / 2;
  return v;
}

MaxResult brute_max(const DiscreteFunction& f) {
  MaxResult r{f.begin()->second, PointSet(f.dim())};
  for (const auto& [p, v] : f) {
    if (v > r.value) r.value = v;
  }
  for (const auto& [p, v] : f) {
    if (v == r.value) r.argmax.insert(p);
  }
  return r;
}

}  // namespace mhpp
