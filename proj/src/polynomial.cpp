#include "qstar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace qstar {

Space parse_space(std::string_view text) {
  if (text == "plane") return Space::Plane;
  if (text == "euclid") return Space::Euclid;
  if (text == "minkowski") return Space::Minkowski;
  throw Error(ErrorKind::InvalidArgument, "unknown space '" + std::string(text) + "'");
}

std::string to_string(Space s) {
  switch (s) {
    case Space::Plane: return "plane";
    case Space::Euclid: return "euclid";
    case Space::Minkowski: return "minkowski";
  }
  return "plane";
}

const std::vector<std::string>& generators(Space s) {
  static const std::vector<std::string> plane{"x", "y"};
  static const std::vector<std::string> four{"x1", "y1", "x2", "y2"};
  return s == Space::Plane ? plane : four;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms) {
    double& slot = terms[e];
    slot += c;
    if (slot == 0.0) terms.erase(e);
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out{a.space, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Polynomial t{a.space, {{e, ca * cb}}};
      out += t;
    }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Space space) : text_(text), space_(space) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view text_;
  Space space_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in \"" +
                                           std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial constant(double c) const {
    return {space_, {{std::vector<int>(generators(space_).size(), 0), c}}};
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p += constant(-1.0) * term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (accept('*')) p = p * unary();
    return p;
  }

  Polynomial unary() {
    if (accept('-')) return constant(-1.0) * unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Polynomial out = constant(1.0);
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(std::stod(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial variable(const std::string& name) {
    const auto& gens = generators(space_);
    const auto it = std::find(gens.begin(), gens.end(), name);
    if (it != gens.end()) {
      Polynomial p = constant(1.0);
      std::vector<int> e(gens.size(), 0);
      e[static_cast<std::size_t>(it - gens.begin())] = 1;
      p.terms = {{e, 1.0}};
      return p;
    }
    for (Space other : {Space::Plane, Space::Euclid}) {
      const auto& g = generators(other);
      if (std::find(g.begin(), g.end(), name) != g.end())
        throw Error(ErrorKind::UnsupportedGenerator,
                    "generator '" + name + "' is not available in space " + to_string(space_));
    }
    fail("unknown identifier '" + name + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Space space) { return Parser(text, space).parse(); }

std::vector<Polynomial> parse_star_expression(std::string_view text, Space space) {
  std::vector<Polynomial> factors;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '*';
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw Error(ErrorKind::ParseError, "unbalanced ')'");
    if (c == '*' && depth == 0) {
      factors.push_back(parse_polynomial(text.substr(start, i - start), space));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced '('");
  return factors;
}

namespace {

// Coefficient of x^a y^b in units of the classical T^j_m.
std::pair<HalfInt, HalfInt> weight_of(int a, int b) {
  return {HalfInt::from_twice(a + b), HalfInt::from_twice(b - a)};
}

HSeries from_monomial(int a, int b, int order) {
  const auto [j, m] = weight_of(a, b);
  return invert(t_basis_classical(j, m, order).coeff);
}

std::string format_coefficient(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", c);
  return buf;
}

std::string render_terms(const std::map<std::vector<int>, double>& terms,
                         const std::vector<std::string>& names) {
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (std::abs(c) < 1e-14) continue;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string mag = format_coefficient(std::abs(c));
    std::string piece;
    if (mono.empty()) piece = mag;
    else if (mag == "1") piece = mono;
    else piece = mag + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + piece;
    else out += (c < 0 ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

PlaneElement to_plane_element(const Polynomial& p, int order) {
  if (p.space != Space::Plane) throw Error(ErrorKind::InvalidArgument, "not a plane polynomial");
  PlaneElement out(order);
  for (const auto& [e, c] : p.terms) {
    const auto [j, m] = weight_of(e[0], e[1]);
    out.add(j, m, c * from_monomial(e[0], e[1], order));
  }
  return out;
}

FourElement to_four_element(const Polynomial& p, int order) {
  if (p.space == Space::Plane) throw Error(ErrorKind::InvalidArgument, "not a four-space polynomial");
  FourElement out(order);
  for (const auto& [e, c] : p.terms) {
    const auto [j, m] = weight_of(e[0], e[1]);
    const auto [jp, mp] = weight_of(e[2], e[3]);
    out.add(j, m, jp, mp, c * from_monomial(e[0], e[1], order) * from_monomial(e[2], e[3], order));
  }
  return out;
}

std::string render(const PlaneElement& slice) {
  std::map<std::vector<int>, double> terms;
  for (const auto& [ab, c] : to_polynomial(slice, false)) terms[{ab.first, ab.second}] += c[0];
  return render_terms(terms, generators(Space::Plane));
}

std::string render(const FourElement& slice) {
  std::map<std::vector<int>, double> terms;
  for (const auto& [key, c] : slice.terms()) {
    const auto t1 = t_basis_classical(HalfInt::from_twice(key[0]), HalfInt::from_twice(key[1]), 0);
    const auto t2 = t_basis_classical(HalfInt::from_twice(key[2]), HalfInt::from_twice(key[3]), 0);
    terms[{t1.a, t1.b, t2.a, t2.b}] += c[0] * t1.coeff[0] * t2.coeff[0];
  }
  return render_terms(terms, generators(Space::Euclid));
}

}  // namespace qstar
