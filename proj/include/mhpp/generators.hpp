#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mhpp/dfunc.hpp"
#include "mhpp/lattice.hpp"
#include "mhpp/matrix.hpp"
#include "mhpp/puiseux.hpp"
#include "mhpp/rational.hpp"
#include "mhpp/tpoly.hpp"

namespace mhpp {

/// Vertices are 0-based here (JSON uses 1-based labels).
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight = 0;
  unsigned multiplicity = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct WeightedGraph {
  std::size_t nvertices = 0;
  std::vector<Edge> edges;

  /// Throws InputError on loops, out-of-range endpoints or zero multiplicity.
  void validate() const;
  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

/// prod_e (1 + t^{w(e)} z_u z_v)^{c(e)}.
PuiseuxPolynomial degree_sequence_poly(const WeightedGraph& g);

/// sum over matchings F of t^{w(F)} prod_{uv in F} z_u z_v.  Multiplicities
/// are ignored; each listed edge counts once.
PuiseuxPolynomial matching_poly(const WeightedGraph& g);

Matrix<PuiseuxNumber> to_puiseux(const Matrix<Rational>& a);

/// Symmetric with every principal minor >= 0 in the order of R{t}.
bool is_psd(const Matrix<PuiseuxNumber>& a);

/// det(z_1 A_1 + ... + z_n A_n).
PuiseuxPolynomial psd_det_poly(const std::vector<Matrix<PuiseuxNumber>>& mats);
/// Same with A_i(t) = t^{w_i} A_i; empty weights means all zero.
PuiseuxPolynomial psd_det_poly(const std::vector<Matrix<Rational>>& mats,
                               const std::vector<Rational>& weights = {});

/// sum_{|S| = r} det(A[:, S])^2 z^S.
PuiseuxPolynomial basis_generating_poly(const Matrix<PuiseuxNumber>& a);
PuiseuxPolynomial basis_generating_poly(const Matrix<Rational>& a);

/// S -> nu(det A[S]) over subsets with nonzero principal minor.
DiscreteFunction skew_minors_function(const Matrix<PuiseuxNumber>& a);

/// Bases of the Fano plane on 7 points.
PointSet fano_bases();
DiscreteFunction fano_distance();

// Seeded instance factories.  Same arguments, same output.

/// Integer hive on the triangle of level n.
DiscreteFunction random_hive(long n, std::uint64_t seed);
/// Strict hive, possibly with small denominators.
DiscreteFunction random_strict_hive(long n, std::uint64_t seed);
/// B^T B for a random integer rank x d matrix B (rank defaults to d).
Matrix<Rational> random_psd(std::size_t d, std::uint64_t seed, std::size_t rank = 0);
/// e distinct edges on v vertices, integer weights in [-3, 3], multiplicity 1 or 2.
WeightedGraph random_graph(std::size_t v, std::size_t e, std::uint64_t seed);
/// Entries c t^k with c in [-3, 3] and k in [-2, 2].
Matrix<PuiseuxNumber> random_puiseux_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);
Matrix<PuiseuxNumber> random_skew_matrix(std::size_t n, std::uint64_t seed);

}  // namespace mhpp
