#include <gtest/gtest.h>

#include <sstream>

#include "gvbps/error.hpp"
#include "gvbps/io.hpp"
#include "oracles.hpp"

using namespace gvbps;
using io::json;

namespace {

Errc parse_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Io, SeriesSchema) {
  const TruncSeries s(-1, 2, {3, 0, -4});
  const json j = io::to_json(s);
  EXPECT_EQ(j, json::parse(R"({"min_exp":-1,"order":2,"coeffs":["3","0","-4","0"]})"));
  EXPECT_EQ(io::series_from_json(j), s);
}

TEST(Io, SeriesRoundTripIsBitExact) {
  oracle::Rng rng(1414);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = rng.series(-5, 5, 20, 1000);
    const std::string text = io::dump(io::to_json(s));
    const auto back = io::series_from_json(io::parse(text));
    EXPECT_EQ(back, s);
    EXPECT_EQ(io::dump(io::to_json(back)), text);
  }
}

TEST(Io, HugeCoefficientsSurvive) {
  const auto y = yau_zaslow(200);
  const auto back = io::series_from_json(io::parse(io::dump(io::to_json(y))));
  EXPECT_EQ(back, y);
  EXPECT_GT(to_decimal(back.coeff(200)).size(), 20u);
}

TEST(Io, PairsSeriesCarriesGenus) {
  const PairsSeries z{TruncSeries(0, 3, {1, 2}), 4};
  const auto j = io::to_json(z);
  EXPECT_EQ(j.at("g"), 4);
  const auto back = io::pairs_from_json(j);
  EXPECT_EQ(back.g, 4);
  EXPECT_EQ(back.series, z.series);

  json no_g = j;
  no_g.erase("g");
  EXPECT_EQ(io::pairs_from_json(no_g).g, 1);
}

TEST(Io, LaurentPolySchema) {
  const LaurentPoly p{{-1, 2}, {0, 20}, {1, 2}};
  const json j = io::to_json(p);
  EXPECT_EQ(j, json::parse(R"({"terms":{"-1":"2","0":"20","1":"2"}})"));
  EXPECT_EQ(io::poly_from_json(j), p);
}

TEST(Io, BiSeriesRoundTrip) {
  const auto b = kkv_product(5);
  EXPECT_EQ(io::bi_series_from_json(io::to_json(b)), b);
}

TEST(Io, BpsVectorSchema) {
  const BpsVector v(2, {1, -2, 1});
  EXPECT_EQ(io::to_json(v), json::parse(R"({"g":2,"n":[1,-2,1]})"));
  EXPECT_EQ(io::bps_from_json(io::to_json(v)), v);
  EXPECT_EQ(io::bps_from_json(json::parse(R"({"g":1,"n":["5","-7"]})")), BpsVector(1, {5, -7}));
}

TEST(Io, BpsVectorBeyondSixtyFourBits) {
  const BigInt big("123456789012345678901234567890");
  const BpsVector v(1, {big, -big});
  const auto j = io::to_json(v);
  EXPECT_TRUE(j.at("n")[0].is_string());
  EXPECT_EQ(io::bps_from_json(j), v);
}

TEST(Io, GgtcReportSchema) {
  const auto r = validate_ggtc({TruncSeries(0, 4, {1, 1}), 1});
  const auto j = io::to_json(r);
  EXPECT_EQ(j.at("pass"), false);
  EXPECT_EQ(j.at("checked_order"), 4);
  EXPECT_EQ(j.at("N"), "1");
  EXPECT_EQ(j.at("identity_g0").at("first_failure"), 2);
  EXPECT_TRUE(j.at("identity_0").at("first_failure").is_null());
  EXPECT_TRUE(j.contains("identity_gg"));
}

TEST(Io, NodalCurveSchema) {
  const NodalCurve c(3, 2, {1, 2, 3, 4});
  const auto j = io::to_json(c);
  EXPECT_EQ(j, json::parse(R"({"g":3,"r":2,"chi":{"":1,"0":2,"1":3,"0,1":4}})"));
  const auto back = io::nodal_from_json(j);
  EXPECT_EQ(back.chi_values(), c.chi_values());
  EXPECT_EQ(back.g(), 3);
}

TEST(Io, NodalCurveRejectsBadSubsets) {
  EXPECT_EQ(parse_code([] { (void)io::nodal_from_json(json::parse(R"({"g":2,"r":1,"chi":{"":1}})")); }),
            Errc::ParseError);
  EXPECT_EQ(parse_code([] {
              (void)io::nodal_from_json(json::parse(R"({"g":2,"r":2,"chi":{"":1,"0":1,"1":1,"1,0":1}})"));
            }),
            Errc::ParseError);
  EXPECT_EQ(parse_code([] {
              (void)io::nodal_from_json(json::parse(R"({"g":2,"r":1,"chi":{"":1,"0":1,"3":1}})"));
            }),
            Errc::ParseError);
}

TEST(Io, GermRoundTrip) {
  const auto germ = SingularityGerm::node(6);
  const auto back = io::germ_from_json(io::to_json(germ));
  EXPECT_EQ(back.delta, 1);
  EXPECT_EQ(back.mu, 0);
  EXPECT_EQ(back.q_euler, germ.q_euler);
}

TEST(Io, KkvTableJsonAndCsv) {
  const auto t = kkv_decompose(kkv_product(2));
  const auto j = io::to_json(t);
  EXPECT_EQ(j.at("h_max"), 2);
  EXPECT_EQ(j.at("rows").size(), 6u);
  EXPECT_EQ(j.at("rows")[2], json::parse(R"({"g":1,"h":1,"r":"-2"})"));
  const auto back = io::kkv_from_json(j);
  for (int h = 0; h <= 2; ++h) {
    for (int g = 0; g <= h; ++g) EXPECT_EQ(back.r(g, h), t.r(g, h));
  }

  std::ostringstream csv;
  io::write_kkv_csv(csv, t);
  EXPECT_EQ(csv.str(), "g,h,r_gh\n0,0,1\n0,1,24\n1,1,-2\n0,2,324\n1,2,-54\n2,2,3\n");
}

TEST(Io, KyRoundTripAndCsv) {
  const auto ky = ky_series(1, 2);
  const auto back = io::ky_from_json(io::to_json(ky));
  EXPECT_EQ(back.data, ky.data);
  EXPECT_EQ(back.y_order, 2);
  std::ostringstream csv;
  io::write_ky_csv(csv, ky);
  EXPECT_EQ(csv.str(), "h,n,e\n0,1,1\n0,2,2\n1,0,2\n1,1,24\n1,2,48\n");
}

TEST(Io, SeriesCsv) {
  std::ostringstream csv;
  io::write_series_csv(csv, yau_zaslow(3), "h", "r_0h");
  EXPECT_EQ(csv.str(), "h,r_0h\n0,1\n1,24\n2,324\n3,3200\n");
}

TEST(Io, SignedReportSchema) {
  const auto j = io::to_json(signed_conversion_check(1, 3));
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_TRUE(j.at("first_mismatch").is_null());
}

TEST(Io, DumpSortsKeys) {
  const std::string text = io::dump(io::to_json(BpsVector(0, {1})));
  EXPECT_LT(text.find("\"g\""), text.find("\"n\""));
  EXPECT_EQ(text.back(), '\n');
}

TEST(Io, MalformedInputIsParseError) {
  EXPECT_EQ(parse_code([] { (void)io::parse("{not json"); }), Errc::ParseError);
  EXPECT_EQ(parse_code([] { (void)io::series_from_json(json::parse(R"({"min_exp":0})")); }),
            Errc::ParseError);
  EXPECT_EQ(parse_code([] {
              (void)io::series_from_json(json::parse(R"({"min_exp":0,"order":1,"coeffs":["1x"]})"));
            }),
            Errc::ParseError);
  EXPECT_EQ(parse_code([] {
              (void)io::series_from_json(json::parse(R"({"min_exp":0,"order":0,"coeffs":["1","2"]})"));
            }),
            Errc::ParseError);
  EXPECT_EQ(parse_code([] { (void)io::poly_from_json(json::parse(R"({"terms":{"a":"1"}})")); }),
            Errc::ParseError);
  EXPECT_EQ(parse_code([] { (void)io::bps_from_json(json::parse(R"({"g":"2","n":[]})")); }),
            Errc::ParseError);
}
