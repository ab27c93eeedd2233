#pragma once

// JSON encodings shared by the command-line front end and its report files.

#include <json.hpp>

#include "qstar/cgc.hpp"
#include "qstar/hseries.hpp"
#include "qstar/qplane.hpp"
#include "qstar/series_matrix.hpp"
#include "qstar/spacetime4d.hpp"
#include "qstar/twist.hpp"

namespace qstar {

using Json = nlohmann::ordered_json;

/// {"order": K, "coeffs": [c0, ..., cK]}
Json to_json(const HSeries& s);
HSeries hseries_from_json(const Json& j);

/// {"order": K, "terms": [{"j2": 2j, "m2": 2m, "coeff": HSeries}]}
Json to_json(const PlaneElement& a);
PlaneElement plane_from_json(const Json& j);

/// Same with keys j2, m2, jp2, mp2 for the two plane factors.
Json to_json(const FourElement& a);
FourElement four_from_json(const Json& j);

/// Row-major array of rows of HSeries.
Json to_json(const SeriesMatrix& m);
SeriesMatrix matrix_from_json(const Json& j);

Json to_json(const TwistRep& tw);
Json to_json(const CouplingMatrix& c);

}  // namespace qstar
