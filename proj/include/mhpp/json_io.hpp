#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mhpp/dfunc.hpp"
#include "mhpp/generators.hpp"
#include "mhpp/lattice.hpp"
#include "mhpp/matrix.hpp"
#include "mhpp/puiseux.hpp"
#include "mhpp/stability.hpp"
#include "mhpp/tpoly.hpp"

namespace mhpp::json_io {

using Json = nlohmann::ordered_json;

// Readers throw InputError on malformed input.  Writers are canonical, so
// write(read(write(x))) == write(x).

Json rational_to_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

Json point_to_json(const LatticePoint& p);
LatticePoint point_from_json(const Json& j);

Json point_set_to_json(const PointSet& s);
/// {"dim", "points"}; also accepts a function document and takes its support.
PointSet point_set_from_json(const Json& j);

Json function_to_json(const DiscreteFunction& f);
DiscreteFunction function_from_json(const Json& j);

/// [{"exp","c"}, ...] with decreasing exponents.
Json puiseux_to_json(const PuiseuxNumber& x);
/// Term array, or a bare rational.
PuiseuxNumber puiseux_from_json(const Json& j);

Json polynomial_to_json(const PuiseuxPolynomial& p);
/// {"nvars", "terms"}; a wrapper {"polynomial": ...} is unwrapped.
PuiseuxPolynomial polynomial_from_json(const Json& j);

/// Vertices are written 1-based.
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

Json matrix_to_json(const Matrix<Rational>& a);
Json matrix_to_json(const Matrix<PuiseuxNumber>& a);
Matrix<Rational> rational_matrix_from_json(const Json& j);
Matrix<PuiseuxNumber> puiseux_matrix_from_json(const Json& j);

/// {"coeffs": [...]} lowest degree first, or a bare array.
Json univariate_to_json(const UnivariatePoly<Rational>& p);
Json univariate_to_json(const UnivariatePoly<PuiseuxNumber>& p);
UnivariatePoly<Rational> rational_univariate_from_json(const Json& j);
UnivariatePoly<PuiseuxNumber> puiseux_univariate_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);
/// {"verdict": bool, "witness": ...}; the witness only when requested and present.
Json report_to_json(const CheckReport& r, bool with_witness = true);

Json certificate_to_json(const StabilityCertificate& c);
StabilityCertificate certificate_from_json(const Json& j);

/// Parses text, mapping syntax errors to InputError.
Json parse(const std::string& text);

/// JSON Schemas of the document types, keyed by name.
Json schemas();

}  // namespace mhpp::json_io
