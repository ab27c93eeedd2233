#include "qstar/json_io.hpp"

#include <algorithm>

namespace qstar {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::InvalidArgument, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const HSeries& s) {
  return {{"order", s.order()}, {"coeffs", std::vector<double>(s.coeffs().begin(), s.coeffs().end())}};
}

HSeries hseries_from_json(const Json& j) {
  const int order = field(j, "order").get<int>();
  auto coeffs = field(j, "coeffs").get<std::vector<double>>();
  if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
    throw Error(ErrorKind::InvalidArgument, "coeffs length must be order + 1");
  return HSeries(order, std::move(coeffs));
}

Json to_json(const PlaneElement& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms())
    terms.push_back({{"j2", key.first}, {"m2", key.second}, {"coeff", to_json(c)}});
  return {{"order", a.order()}, {"terms", terms}};
}

PlaneElement plane_from_json(const Json& j) {
  PlaneElement out(field(j, "order").get<int>());
  for (const auto& t : field(j, "terms"))
    out.add(HalfInt::from_twice(field(t, "j2").get<int>()),
            HalfInt::from_twice(field(t, "m2").get<int>()), hseries_from_json(field(t, "coeff")));
  return out;
}

Json to_json(const FourElement& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms())
    terms.push_back({{"j2", key[0]}, {"m2", key[1]}, {"jp2", key[2]}, {"mp2", key[3]},
                     {"coeff", to_json(c)}});
  return {{"order", a.order()}, {"terms", terms}};
}

FourElement four_from_json(const Json& j) {
  FourElement out(field(j, "order").get<int>());
  for (const auto& t : field(j, "terms")) {
    auto h = [&](const char* k) { return HalfInt::from_twice(field(t, k).get<int>()); };
    out.add(h("j2"), h("m2"), h("jp2"), h("mp2"), hseries_from_json(field(t, "coeff")));
  }
  return out;
}

Json to_json(const SeriesMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SeriesMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidArgument, "matrix must be a non-empty array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  int order = -1;
  for (const auto& row : j)
    for (const auto& e : row) {
      const int k = field(e, "order").get<int>();
      order = order < 0 ? k : std::min(order, k);
    }
  SeriesMatrix out(rows, cols, std::max(order, 0));
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) out.set_entry(r, c, hseries_from_json(j[r][c]));
  }
  return out;
}

Json to_json(const TwistRep& tw) {
  return {{"j1", tw.j1.str()},
          {"j2", tw.j2.str()},
          {"eta", tw.eta.name()},
          {"order", tw.forward.matrix.order()},
          {"inversion_residual", tw.inversion_residual},
          {"forward", to_json(tw.forward.matrix)},
          {"inverse", to_json(tw.inverse.matrix)}};
}

Json to_json(const CouplingMatrix& c) {
  Json cols = Json::array();
  for (const auto& [j, m] : c.columns) cols.push_back({{"j", j.str()}, {"m", m.str()}});
  return {{"j1", c.j1.str()}, {"j2", c.j2.str()}, {"columns", cols}, {"matrix", to_json(c.matrix)}};
}

}  // namespace qstar
