#include <gtest/gtest.h>

#include "mhpp/errors.hpp"
#include "mhpp/generators.hpp"
#include "mhpp/json_io.hpp"
#include "mhpp/stability.hpp"
#include "test_util.hpp"

using namespace mhpp;
namespace jio = mhpp::json_io;

namespace {

template <class T, class W, class R>
void expect_round_trip(const T& x, W write, R read) {
  const auto j = write(x);
  const auto back = read(jio::parse(j.dump()));
  EXPECT_EQ(back, x);
  EXPECT_EQ(write(back).dump(), j.dump());
}

}  // namespace

TEST(Json, Rational) {
  EXPECT_EQ(jio::rational_to_json(ratio(-2, 6)), "-1/3");
  EXPECT_EQ(jio::rational_from_json(jio::Json("4/8")), ratio(1, 2));
  EXPECT_EQ(jio::rational_from_json(jio::Json(7)), 7);
  EXPECT_THROW(jio::rational_from_json(jio::Json(0.5)), InputError);
  EXPECT_THROW(jio::parse("{"), InputError);
}

TEST(Json, PointSetRoundTrip) {
  expect_round_trip(fano_bases(), jio::point_set_to_json, jio::point_set_from_json);
  const auto j = jio::parse(R"({"dim": 2, "points": [[0,0],[1,1]]})");
  EXPECT_EQ(jio::point_set_from_json(j), mhpp::testing::pts({{0, 0}, {1, 1}}));
  EXPECT_THROW(jio::point_set_from_json(jio::parse(R"({"dim": 2, "points": [[0]]})")), InputError);
  // A function document is read as its support.
  const auto f = jio::function_to_json(fano_distance());
  EXPECT_EQ(jio::point_set_from_json(f).size(), 84u);
}

TEST(Json, FunctionRoundTrip) {
  expect_round_trip(random_strict_hive(3, 5), jio::function_to_json, jio::function_from_json);
  EXPECT_THROW(jio::function_from_json(jio::parse(R"({"points": []})")), InputError);
  EXPECT_THROW(jio::function_from_json(jio::parse(R"({"points": [{"alpha":[0],"value":"1/0"}]})")), InputError);
}

TEST(Json, PuiseuxRoundTrip) {
  const PuiseuxNumber x = PuiseuxNumber::t_power(ratio(3, 2), 5) + PuiseuxNumber::t_power(-1, ratio(-1, 3));
  expect_round_trip(x, jio::puiseux_to_json, jio::puiseux_from_json);
  EXPECT_EQ(jio::puiseux_to_json(x).dump(), R"([{"exp":"3/2","c":"5"},{"exp":"-1","c":"-1/3"}])");
  expect_round_trip(PuiseuxNumber(), jio::puiseux_to_json, jio::puiseux_from_json);
}

TEST(Json, PolynomialRoundTrip) {
  const auto p = degree_sequence_poly(random_graph(4, 4, 2));
  expect_round_trip(p, jio::polynomial_to_json, jio::polynomial_from_json);
  const auto wrapped = jio::Json{{"polynomial", jio::polynomial_to_json(p)}};
  EXPECT_EQ(jio::polynomial_from_json(wrapped), p);
  EXPECT_THROW(jio::polynomial_from_json(jio::parse(R"({"nvars": 1, "terms": [{"alpha":[-1],"coeff":"1"}]})")),
               InputError);
}

TEST(Json, GraphRoundTrip) {
  expect_round_trip(random_graph(5, 7, 3), jio::graph_to_json, jio::graph_from_json);
  const auto g = jio::graph_from_json(jio::parse(R"({"n": 2, "edges": [{"u":1,"v":2,"w":"1/2","c":2}]})"));
  EXPECT_EQ(g.edges[0].u, 0u);
  EXPECT_EQ(g.edges[0].multiplicity, 2u);
  EXPECT_THROW(jio::graph_from_json(jio::parse(R"({"n": 2, "edges": [{"u":1,"v":1}]})")), InputError);
  EXPECT_THROW(jio::graph_from_json(jio::parse(R"({"n": 2, "edges": [{"u":0,"v":1}]})")), InputError);
}

TEST(Json, MatrixRoundTrip) {
  expect_round_trip(random_psd(3, 1), [](const auto& m) { return jio::matrix_to_json(m); },
                    jio::rational_matrix_from_json);
  expect_round_trip(random_puiseux_matrix(2, 3, 1), [](const auto& m) { return jio::matrix_to_json(m); },
                    jio::puiseux_matrix_from_json);
  EXPECT_THROW(jio::rational_matrix_from_json(jio::parse(R"([["1","2"],["3"]])")), InputError);
}

TEST(Json, UnivariateRoundTrip) {
  const RationalPoly p({Rational(1), ratio(-2, 3), Rational(0), Rational(4)});
  expect_round_trip(p, [](const auto& q) { return jio::univariate_to_json(q); }, jio::rational_univariate_from_json);
  EXPECT_EQ(jio::rational_univariate_from_json(jio::parse(R"(["1","2","1"])")).degree(), 2);
}

TEST(Json, WitnessRoundTrip) {
  const auto r = check_M(mhpp::testing::fn1({0, 2, 4}, {0, -1, 0}));
  const auto j = jio::report_to_json(r);
  EXPECT_EQ(j.at("verdict"), false);
  const Witness w = jio::witness_from_json(j.at("witness"));
  EXPECT_EQ(w.points, r.witness->points);
  EXPECT_EQ(w.lhs, r.witness->lhs);
  EXPECT_EQ(w.candidates.size(), r.witness->candidates.size());
  EXPECT_EQ(jio::witness_to_json(w).dump(), j.at("witness").dump());
  EXPECT_FALSE(jio::report_to_json(r, false).contains("witness"));
}

TEST(Json, CertificateRoundTrip) {
  const auto h = random_strict_hive(2, 1);
  const auto c = strict_hive_to_puiseux_hpp(h).certificate;
  const auto j = jio::certificate_to_json(c);
  const auto back = jio::certificate_from_json(jio::parse(j.dump()));
  EXPECT_EQ(jio::certificate_to_json(back).dump(), j.dump());
  EXPECT_TRUE(recheck(back));
  const UnivariatePoly<PuiseuxNumber> p({PuiseuxNumber(1), PuiseuxNumber::t_power(1), PuiseuxNumber(1)});
  const auto hc = jio::certificate_to_json(hutchinson_check(p));
  EXPECT_TRUE(hc.at("detail")[0].at("lhs").is_array());
  EXPECT_TRUE(recheck(jio::certificate_from_json(hc)));
}

TEST(Json, SchemasCoverDocuments) {
  const auto s = jio::schemas();
  for (const char* k : {"point_set", "function", "puiseux", "polynomial", "graph", "matrix", "univariate",
                        "report", "certificate"}) {
    EXPECT_TRUE(s.contains(k)) << k;
  }
  EXPECT_TRUE(s.at("point_set").at("required").is_array());
}
