#pragma once

// Commutative polynomials typed on the command line, e.g. "(x + 2*y^2) * y".
//
// Grammar: integer coefficients, + - * ^, parentheses, whitespace ignored.
// A '*' outside parentheses is the star product; everything inside
// parentheses, and every '^', multiplies commutatively.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/qplane.hpp"
#include "qstar/spacetime4d.hpp"

namespace qstar {

enum class Space { Plane, Euclid, Minkowski };

/// Parses "plane", "euclid" or "minkowski".
Space parse_space(std::string_view text);
std::string to_string(Space s);

/// Generator names of a space: {x, y} or {x1, y1, x2, y2}.
const std::vector<std::string>& generators(Space s);

/// Exponent vector (one entry per generator) -> coefficient.
struct Polynomial {
  Space space = Space::Plane;
  std::map<std::vector<int>, double> terms;

  Polynomial& operator+=(const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
};

/// Throws ParseError on malformed input or unknown identifiers, and
/// UnsupportedGenerator for a generator of a different space.
Polynomial parse_polynomial(std::string_view text, Space space);

/// Splits at top-level '*' and parses each factor.
std::vector<Polynomial> parse_star_expression(std::string_view text, Space space);

PlaneElement to_plane_element(const Polynomial& p, int order);
FourElement to_four_element(const Polynomial& p, int order);

/// Monomial expansion of an order-0 slice, e.g. "x*y - 0.5*y^2"; "0" when empty.
std::string render(const PlaneElement& slice);
std::string render(const FourElement& slice);

}  // namespace qstar
