#include <doctest.h>

#include <cmath>
#include <limits>

#include "qstar/json_io.hpp"
#include "qstar/polynomial.hpp"
#include "qstar/verify.hpp"

using namespace qstar;

namespace {

ErrorKind kind_of(std::string_view text, Space space) {
  try {
    parse_polynomial(text, space);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("spaces and generators") {
  CHECK(parse_space("plane") == Space::Plane);
  CHECK(parse_space("euclid") == Space::Euclid);
  CHECK(parse_space("minkowski") == Space::Minkowski);
  CHECK_THROWS_AS(parse_space("torus"), Error);
  CHECK(to_string(Space::Minkowski) == "minkowski");
  CHECK(generators(Space::Plane) == std::vector<std::string>{"x", "y"});
  CHECK(generators(Space::Euclid).size() == 4);
}

TEST_CASE("commutative parsing") {
  const Polynomial p = parse_polynomial("(x + 2*y^2) * y - 3", Space::Plane);
  CHECK(p.terms.size() == 3);
  CHECK(p.terms.at({1, 1}) == 1.0);
  CHECK(p.terms.at({0, 3}) == 2.0);
  CHECK(p.terms.at({0, 0}) == -3.0);

  const Polynomial sq = parse_polynomial("(x - y)^2", Space::Plane);
  CHECK(sq.terms.at({2, 0}) == 1.0);
  CHECK(sq.terms.at({1, 1}) == -2.0);
  CHECK(sq.terms.at({0, 2}) == 1.0);

  CHECK(parse_polynomial("x - x", Space::Plane).terms.empty());
  CHECK(parse_polynomial(" x1 *  y2 ", Space::Euclid).terms.at({1, 0, 0, 1}) == 1.0);
  CHECK(parse_polynomial("x^0", Space::Plane).terms.at({0, 0}) == 1.0);
}

TEST_CASE("malformed input") {
  CHECK(kind_of("z", Space::Plane) == ErrorKind::ParseError);
  CHECK(kind_of("x +", Space::Plane) == ErrorKind::ParseError);
  CHECK(kind_of("(x", Space::Plane) == ErrorKind::ParseError);
  CHECK(kind_of("x)", Space::Plane) == ErrorKind::ParseError);
  CHECK(kind_of("x^-1", Space::Plane) == ErrorKind::ParseError);
  CHECK(kind_of("", Space::Plane) == ErrorKind::ParseError);
  CHECK(kind_of("x1", Space::Plane) == ErrorKind::UnsupportedGenerator);
  CHECK(kind_of("x", Space::Minkowski) == ErrorKind::UnsupportedGenerator);
}

TEST_CASE("star expressions split at top level only") {
  const auto f = parse_star_expression("(x*y) * y^2 * (1 + x)", Space::Plane);
  REQUIRE(f.size() == 3);
  CHECK(f[0].terms.at({1, 1}) == 1.0);
  CHECK(f[1].terms.at({0, 2}) == 1.0);
  CHECK(f[2].terms.size() == 2);
  CHECK(parse_star_expression("x", Space::Plane).size() == 1);
  CHECK_THROWS_AS(parse_star_expression("x * ", Space::Plane), Error);
}

TEST_CASE("polynomials become plane elements in the commutative basis") {
  const Polynomial p = parse_polynomial("3*x^2*y - y + 5", Space::Plane);
  const PlaneElement e = to_plane_element(p, 4);
  CHECK(e.order() == 4);
  const PlanePolynomial back = to_polynomial(e, false);
  CHECK(back.size() == 3);
  CHECK(std::abs(back.at({2, 1})[0] - 3.0) < 1e-14);
  CHECK(std::abs(back.at({0, 1})[0] + 1.0) < 1e-14);
  CHECK(std::abs(back.at({0, 0})[0] - 5.0) < 1e-14);
  for (int k = 1; k <= 4; ++k) CHECK(back.at({2, 1})[k] == 0.0);

  // x*y = sqrt(2) T^1_0 classically
  const PlaneElement xy = to_plane_element(parse_polynomial("x*y", Space::Plane), 2);
  CHECK(std::abs(xy.coefficient(HalfInt(1), HalfInt(0))[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("polynomials become four-space elements") {
  const Polynomial p = parse_polynomial("x1*y2 + 2*y1", Space::Euclid);
  const FourElement e = to_four_element(p, 3);
  const auto c = coordinate_functions(3);
  const FourElement expected = mu4_classical(c[0], c[3]) + c[1] + c[1];
  CHECK(max_abs_diff(e, expected) < 1e-15);
}

TEST_CASE("rendering") {
  CHECK(render(PlaneElement(0)) == "0");
  CHECK(render(to_plane_element(parse_polynomial("x*y - 3*x", Space::Plane), 0)) == "x*y - 3*x");
  CHECK(render(to_plane_element(parse_polynomial("1", Space::Plane), 0)) == "1");
  CHECK(render(to_plane_element(parse_polynomial("-y^2", Space::Plane), 0)) == "-y^2");
  CHECK(render(to_four_element(parse_polynomial("x1*x2", Space::Euclid), 0)) == "x1*x2");
  for (const char* text : {"x^3 - 2*x*y^2 + 7", "y - x", "4*x^2*y^2"}) {
    const Polynomial p = parse_polynomial(text, Space::Plane);
    const Polynomial q = parse_polynomial(render(to_plane_element(p, 0)), Space::Plane);
    REQUIRE(p.terms.size() == q.terms.size());
    for (const auto& [k, v] : p.terms) CHECK(std::abs(q.terms.at(k) - v) < 1e-12);
  }
}

TEST_CASE("json round trips") {
  const HSeries s(3, {1.0, -0.5, 0.25, 0.125});
  const Json js = to_json(s);
  CHECK(js["order"] == 3);
  const HSeries s2 = hseries_from_json(js);
  CHECK(s2.order() == 3);
  for (int k = 0; k <= 3; ++k) CHECK(s2[k] == s[k]);
  CHECK_THROWS_AS(hseries_from_json(Json::parse(R"({"order": 2, "coeffs": [1, 2]})")), Error);

  const PlaneElement a = star(PlaneElement::x(), PlaneElement::y(), EtaFunction::one());
  CHECK(max_abs_diff(plane_from_json(Json::parse(to_json(a).dump())), a) == 0.0);

  const auto c = coordinate_functions(2);
  const FourElement f = star4(c[2], c[0], Variant::Minkowski);
  CHECK(max_abs_diff(four_from_json(Json::parse(to_json(f).dump())), f) == 0.0);

  const SeriesMatrix m = twist_rep(half(1), HalfInt(1)).forward.matrix;
  CHECK(max_abs_diff(matrix_from_json(Json::parse(to_json(m).dump())), m) == 0.0);

  const Json tw = to_json(twist_rep(half(1), half(1), EtaFunction::one(), 2));
  CHECK(tw.contains("forward"));
  CHECK(tw.contains("inverse"));
}

TEST_CASE("verify reports round trip, including infinite residuals") {
  VerifyReport r;
  r.suite = "plane";
  r.cases.push_back({"a", Json{{"j", 1}}, 1e-12, 1e-9, true});
  r.cases.push_back({"b", Json::object(), std::numeric_limits<double>::infinity(), 1e-9, false});
  r.total = 2;
  r.passed = 1;
  r.max_residual = std::numeric_limits<double>::infinity();
  const Json j = Json::parse(to_json(r).dump());
  CHECK(j["cases"][1]["residual"].is_null());
  const VerifyReport back = report_from_json(j);
  CHECK(back.suite == "plane");
  REQUIRE(back.cases.size() == 2);
  CHECK(back.cases[0].residual == 1e-12);
  CHECK(std::isinf(back.cases[1].residual));
  CHECK(!back.ok());
  CHECK(back.cases[0].parameters["j"] == 1);
}
