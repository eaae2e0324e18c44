#include "mhpp/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "mhpp/errors.hpp"

namespace mhpp {

void WeightedGraph::validate() const {
  for (const Edge& e : edges) {
    if (e.u >= nvertices || e.v >= nvertices) throw InputError("graph: edge endpoint out of range");
    if (e.u == e.v) throw InputError("graph: loops are not allowed");
    if (e.multiplicity == 0) throw InputError("graph: multiplicity must be positive");
  }
}

namespace {

PuiseuxPolynomial edge_factor(std::size_t n, const Edge& e) {
  LatticePoint alpha = LatticePoint::zero(n);
  alpha = alpha + LatticePoint::unit(n, e.u) + LatticePoint::unit(n, e.v);
  PuiseuxPolynomial f = PuiseuxPolynomial::constant(n, PuiseuxNumber(1));
  f.add_term(alpha, PuiseuxNumber::t_power(e.weight));
  return f;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

LatticePoint indicator(std::size_t n, const std::vector<std::size_t>& s) {
  LatticePoint p = LatticePoint::zero(n);
  for (std::size_t i : s) p = p + LatticePoint::unit(n, i);
  return p;
}

}  // namespace

PuiseuxPolynomial degree_sequence_poly(const WeightedGraph& g) {
  g.validate();
  PuiseuxPolynomial out = PuiseuxPolynomial::constant(g.nvertices, PuiseuxNumber(1));
  for (const Edge& e : g.edges) out *= pow(edge_factor(g.nvertices, e), e.multiplicity);
  return out;
}

PuiseuxPolynomial matching_poly(const WeightedGraph& g) {
  g.validate();
  const std::size_t n = g.nvertices;
  PuiseuxPolynomial out(n);
  std::vector<bool> used(n, false);
  LatticePoint alpha = LatticePoint::zero(n);
  auto rec = [&](auto&& self, std::size_t next, const Rational& weight) -> void {
    out.add_term(alpha, PuiseuxNumber::t_power(weight));
    for (std::size_t k = next; k < g.edges.size(); ++k) {
      const Edge& e = g.edges[k];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      alpha = alpha + LatticePoint::unit(n, e.u) + LatticePoint::unit(n, e.v);
      self(self, k + 1, weight + e.weight);
      alpha = alpha - LatticePoint::unit(n, e.u) - LatticePoint::unit(n, e.v);
      used[e.u] = used[e.v] = false;
    }
  };
  rec(rec, 0, Rational(0));
  return out;
}

Matrix<PuiseuxNumber> to_puiseux(const Matrix<Rational>& a) {
  return a.map([](const Rational& q) { return PuiseuxNumber(q); });
}

bool is_psd(const Matrix<PuiseuxNumber>& a) {
  if (!a.is_square()) return false;
  const std::size_t d = a.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  for (std::size_t r = 1; r <= d; ++r) {
    for (const auto& s : subsets_of_size(d, r)) {
      if (berkowitz_det(a.principal(s), PuiseuxNumber(1)).is_negative()) return false;
    }
  }
  return true;
}

PuiseuxPolynomial psd_det_poly(const std::vector<Matrix<PuiseuxNumber>>& mats) {
  if (mats.empty()) throw InputError("psd_det_poly: no matrices");
  const std::size_t n = mats.size();
  const std::size_t d = mats.front().rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (mats[i].rows() != d || mats[i].cols() != d) {
      throw InputError("psd_det_poly: matrices must be square of one size");
    }
    if (!is_psd(mats[i])) {
      throw InputError("psd_det_poly: matrix " + std::to_string(i + 1) + " is not symmetric PSD");
    }
  }
  const PuiseuxPolynomial zero(n);
  Matrix<PuiseuxPolynomial> forms(d, d, zero);
  for (std::size_t i = 0; i < n; ++i) {
    const PuiseuxPolynomial z = PuiseuxPolynomial::variable(n, i);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (!mats[i](r, c).is_zero()) forms(r, c) += z * mats[i](r, c);
      }
    }
  }
  return berkowitz_det(forms, PuiseuxPolynomial::constant(n, PuiseuxNumber(1)));
}

PuiseuxPolynomial psd_det_poly(const std::vector<Matrix<Rational>>& mats,
                               const std::vector<Rational>& weights) {
  if (!weights.empty() && weights.size() != mats.size()) {
    throw InputError("psd_det_poly: one weight per matrix expected");
  }
  std::vector<Matrix<PuiseuxNumber>> scaled;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Rational w = weights.empty() ? Rational(0) : weights[i];
    scaled.push_back(mats[i].map([&](const Rational& q) { return PuiseuxNumber::t_power(w, q); }));
  }
  return psd_det_poly(scaled);
}

PuiseuxPolynomial basis_generating_poly(const Matrix<PuiseuxNumber>& a) {
  const std::size_t r = a.rows();
  const std::size_t n = a.cols();
  if (r > n) throw InputError("basis_generating_poly: more rows than columns");
  std::vector<std::size_t> all_rows(r);
  for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
  PuiseuxPolynomial out(n);
  for (const auto& s : subsets_of_size(n, r)) {
    const PuiseuxNumber m = berkowitz_det(a.submatrix(all_rows, s), PuiseuxNumber(1));
    if (!m.is_zero()) out.add_term(indicator(n, s), m * m);
  }
  return out;
}

PuiseuxPolynomial basis_generating_poly(const Matrix<Rational>& a) {
  return basis_generating_poly(to_puiseux(a));
}

DiscreteFunction skew_minors_function(const Matrix<PuiseuxNumber>& a) {
  if (!a.is_square()) throw InputError("skew_minors_function: matrix is not square");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (a(i, j) != -a(j, i)) throw InputError("skew_minors_function: matrix is not skew-symmetric");
    }
  }
  std::vector<std::pair<LatticePoint, Rational>> entries;
  for (std::size_t r = 0; r <= n; ++r) {
    for (const auto& s : subsets_of_size(n, r)) {
      const PuiseuxNumber m = berkowitz_det(a.principal(s), PuiseuxNumber(1));
      if (!m.is_zero()) entries.emplace_back(indicator(n, s), m.valuation().value());
    }
  }
  return DiscreteFunction(entries);
}

PointSet fano_bases() {
  // Fano plane, points 1..7, lines i, i+1, i+3 (mod 7).
  static const int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                  {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  PointSet out(7);
  for (const auto& s : subsets_of_size(7, 3)) {
    bool is_line = false;
    for (const auto& l : lines) {
      std::vector<std::size_t> sorted{static_cast<std::size_t>(l[0] - 1),
                                      static_cast<std::size_t>(l[1] - 1),
                                      static_cast<std::size_t>(l[2] - 1)};
      std::sort(sorted.begin(), sorted.end());
      if (sorted == s) is_line = true;
    }
    if (!is_line) out.insert(indicator(7, s));
  }
  return out;
}

DiscreteFunction fano_distance() { return distance_function(fano_bases(), 7, 3); }

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Concave integer sequence g(0..n): partial sums of nonincreasing increments.
std::vector<long> concave_sequence(std::mt19937_64& rng, long n) {
  std::vector<long> inc(static_cast<std::size_t>(n));
  for (auto& x : inc) x = uniform(rng, -4, 4);
  std::sort(inc.begin(), inc.end(), std::greater<>());
  std::vector<long> g{0};
  for (long x : inc) g.push_back(g.back() + x);
  return g;
}

DiscreteFunction build_hive(std::mt19937_64& rng, long n, long k, long e_bound, long denom) {
  std::vector<std::vector<long>> g;
  for (int i = 0; i < 3; ++i) g.push_back(concave_sequence(rng, n));
  const long lin[3] = {uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
  std::vector<std::pair<LatticePoint, Rational>> entries;
  for (const auto& alpha : simplex_points(3, n)) {
    long v = k * base_hive_value(alpha) + uniform(rng, -e_bound, e_bound);
    for (std::size_t i = 0; i < 3; ++i) {
      v += g[i][static_cast<std::size_t>(alpha[i])] + lin[i] * alpha[i];
    }
    entries.emplace_back(alpha, ratio(v, denom));
  }
  return DiscreteFunction(entries);
}

}  // namespace

DiscreteFunction random_hive(long n, std::uint64_t seed) {
  if (n < 0) throw InputError("random_hive: n must be nonnegative");
  std::mt19937_64 rng(seed);
  for (;;) {
    const long k = uniform(rng, 0, 4);
    DiscreteFunction h = build_hive(rng, n, k, k / 4, 1);
    if (is_hive(h)) return h;
  }
}

DiscreteFunction random_strict_hive(long n, std::uint64_t seed) {
  if (n < 0) throw InputError("random_strict_hive: n must be nonnegative");
  std::mt19937_64 rng(seed);
  for (;;) {
    const long k = uniform(rng, 1, 6);
    const long denom = uniform(rng, 1, 3);
    DiscreteFunction h = build_hive(rng, n, k, (k - 1) / 4, denom);
    if (is_hive(h, true)) return h;
  }
}

Matrix<Rational> random_psd(std::size_t d, std::uint64_t seed, std::size_t rank) {
  std::mt19937_64 rng(seed);
  if (rank == 0) rank = d;
  Matrix<Rational> b(rank, d, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < d; ++c) b(r, c) = uniform(rng, -3, 3);
  }
  return gram(b, Rational(0));
}

WeightedGraph random_graph(std::size_t v, std::size_t e, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
  }
  if (e > pairs.size()) throw InputError("random_graph: too many edges for a simple graph");
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  WeightedGraph g;
  g.nvertices = v;
  for (std::size_t k = 0; k < e; ++k) {
    g.edges.push_back({pairs[k].first, pairs[k].second, Rational(uniform(rng, -3, 3)),
                       static_cast<unsigned>(uniform(rng, 1, 2))});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return g;
}

Matrix<PuiseuxNumber> random_puiseux_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<PuiseuxNumber> a(rows, cols, PuiseuxNumber());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const long coeff = uniform(rng, -3, 3);
      a(r, c) = PuiseuxNumber::t_power(Rational(uniform(rng, -2, 2)), Rational(coeff));
    }
  }
  return a;
}

Matrix<PuiseuxNumber> random_skew_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<PuiseuxNumber> a(n, n, PuiseuxNumber());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long coeff = uniform(rng, -3, 3);
      a(i, j) = PuiseuxNumber::t_power(Rational(uniform(rng, -2, 2)), Rational(coeff));
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

}  // namespace mhpp
