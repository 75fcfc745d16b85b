#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "gvbps/bi_series.hpp"
#include "gvbps/bps_transform.hpp"
#include "gvbps/curve_local.hpp"
#include "gvbps/k3_kkv.hpp"
#include "gvbps/laurent_poly.hpp"
#include "gvbps/trunc_series.hpp"

// JSON and CSV surfaces. Big integers are written as decimal strings;
// BpsVector entries and NodalCurve chi values are written as JSON numbers
// when they fit in 64 bits. Readers accept either form everywhere.
// All readers throw Error{ParseError} on malformed input.
namespace gvbps::io {

using json = nlohmann::json;

json parse(std::istream& in);
json parse(const std::string& text);
/// Two-space indent, sorted keys, trailing newline.
std::string dump(const json& j);

json to_json(const TruncSeries& s);
TruncSeries series_from_json(const json& j);

/// Series fields plus "g".
json to_json(const PairsSeries& z);
/// "g" is optional; absent means the inferred genus.
PairsSeries pairs_from_json(const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

/// {"order_q": int, "coeffs": [LaurentPoly JSON]}
json to_json(const BiSeries& b);
BiSeries bi_series_from_json(const json& j);

json to_json(const BpsVector& v);
BpsVector bps_from_json(const json& j);

json to_json(const GgtcReport& r);

/// chi keys are sorted node indices joined by commas; "" is the empty set.
json to_json(const NodalCurve& c);
NodalCurve nodal_from_json(const json& j);

json to_json(const SingularityGerm& germ);
SingularityGerm germ_from_json(const json& j);

json to_json(const KkvTable& t);
KkvTable kkv_from_json(const json& j);
/// Header "g,h,r_gh", rows sorted by (h, g), one row written at a time.
void write_kkv_csv(std::ostream& out, const KkvTable& t);

/// {"h_max": int, "y_order": int, "q_coeffs": [LaurentPoly JSON in y]}
json to_json(const K3PairsSeries& ky);
K3PairsSeries ky_from_json(const json& j);
/// Header "h,n,e".
void write_ky_csv(std::ostream& out, const K3PairsSeries& ky);

json to_json(const SignedCheckReport& r);

/// Two-column table "<index_name>,<value_name>" over the series window.
void write_series_csv(std::ostream& out, const TruncSeries& s, const std::string& index_name,
                      const std::string& value_name);

}  // namespace gvbps::io
