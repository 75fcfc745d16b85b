#include "gvbps/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gvbps/error.hpp"

namespace gvbps::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(std::string(what) + " is out of range");
  }
  return static_cast<int>(x);
}

int int_field(const json& j, const char* key) { return as_int(field(j, key), key); }

BigInt as_big(const json& v, const char* what) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<unsigned long long>()));
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  fail(std::string(what) + " must be a decimal string or an integer");
}

json big_string(const BigInt& x) { return to_decimal(x); }

json big_native(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return to_decimal(x);
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string(key) + " must be an array");
  return v;
}

std::string subset_key(std::uint32_t mask) {
  std::string key;
  for (int i = 0; mask >> i; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(i);
  }
  return key;
}

std::uint32_t subset_from_key(const std::string& key, int r) {
  std::uint32_t mask = 0;
  if (key.empty()) return mask;
  int prev = -1;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos ||
        part.size() > 3) {
      fail("bad node subset key \"" + key + "\"");
    }
    const int idx = std::stoi(part);
    if (idx <= prev) fail("node subset key \"" + key + "\" is not strictly increasing");
    if (idx >= r) fail("node index " + part + " out of range for r = " + std::to_string(r));
    mask |= std::uint32_t{1} << idx;
    prev = idx;
  }
  if (key.back() == ',') fail("bad node subset key \"" + key + "\"");
  return mask;
}

// Library errors from constructors keep their own code; JSON type errors
// become ParseError.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

}  // namespace

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

json parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const TruncSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(big_string(c));
  return {{"min_exp", s.min_exp()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncSeries series_from_json(const json& j) {
  return guarded([&] {
    const int min_exp = int_field(j, "min_exp");
    const int order = int_field(j, "order");
    std::vector<BigInt> coeffs;
    for (const auto& c : array_field(j, "coeffs")) coeffs.push_back(as_big(c, "coefficient"));
    if (order < min_exp - 1) fail("order must be at least min_exp - 1");
    if (coeffs.size() > static_cast<std::size_t>(order - min_exp + 1)) {
      fail("more coefficients than the window [min_exp, order] holds");
    }
    return TruncSeries(min_exp, order, std::move(coeffs));
  });
}

json to_json(const PairsSeries& z) {
  json j = to_json(z.series);
  j["g"] = z.g;
  return j;
}

PairsSeries pairs_from_json(const json& j) {
  TruncSeries s = series_from_json(j);
  if (j.contains("g")) return {std::move(s), int_field(j, "g")};
  return PairsSeries::with_inferred_genus(std::move(s));
}

json to_json(const LaurentPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = big_string(c);
  return {{"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
  return guarded([&] {
    const json& terms = field(j, "terms");
    if (!terms.is_object()) fail("terms must be an object");
    LaurentPoly p;
    for (const auto& [key, value] : terms.items()) {
      int e = 0;
      try {
        std::size_t used = 0;
        e = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("bad exponent key \"" + key + "\"");
      }
      p.add_term(e, as_big(value, "coefficient"));
    }
    return p;
  });
}

json to_json(const BiSeries& b) {
  json coeffs = json::array();
  for (const auto& c : b.coeffs()) coeffs.push_back(to_json(c));
  return {{"order_q", b.order_q()}, {"coeffs", std::move(coeffs)}};
}

BiSeries bi_series_from_json(const json& j) {
  return guarded([&] {
    const int order_q = int_field(j, "order_q");
    const json& arr = array_field(j, "coeffs");
    if (order_q < 0 || arr.size() != static_cast<std::size_t>(order_q) + 1) {
      fail("coeffs must hold order_q + 1 polynomials");
    }
    std::vector<LaurentPoly> coeffs;
    for (const auto& c : arr) coeffs.push_back(poly_from_json(c));
    return BiSeries(std::move(coeffs));
  });
}

json to_json(const BpsVector& v) {
  json n = json::array();
  for (const auto& x : v.n()) n.push_back(big_native(x));
  return {{"g", v.g()}, {"n", std::move(n)}};
}

BpsVector bps_from_json(const json& j) {
  return guarded([&] {
    const int g = int_field(j, "g");
    std::vector<BigInt> n;
    for (const auto& x : array_field(j, "n")) n.push_back(as_big(x, "n entry"));
    return BpsVector(g, std::move(n));
  });
}

json to_json(const GgtcReport& r) {
  auto check = [](const IdentityCheck& c) {
    json j{{"pass", c.pass}, {"lo", c.lo}, {"hi", c.hi}};
    j["first_failure"] = c.first_failure ? json(*c.first_failure) : json(nullptr);
    return j;
  };
  return {{"pass", r.pass},
          {"N", big_string(r.n_genus0)},
          {"identity_g0", check(r.identity_g0)},
          {"identity_gg", check(r.identity_gg)},
          {"identity_0", check(r.identity_0)},
          {"checked_order", r.checked_order}};
}

json to_json(const NodalCurve& c) {
  json chi = json::object();
  for (std::uint32_t mask = 0; mask < c.chi_values().size(); ++mask) {
    chi[subset_key(mask)] = big_native(c.chi(mask));
  }
  return {{"g", c.g()}, {"r", c.r()}, {"chi", std::move(chi)}};
}

NodalCurve nodal_from_json(const json& j) {
  return guarded([&] {
    const int g = int_field(j, "g");
    const int r = int_field(j, "r");
    if (r < 0 || r > NodalCurve::kMaxNodes) fail("r out of range");
    const json& chi = field(j, "chi");
    if (!chi.is_object()) fail("chi must be an object");
    const std::size_t count = std::size_t{1} << r;
    std::vector<BigInt> values(count);
    std::vector<bool> seen(count, false);
    for (const auto& [key, value] : chi.items()) {
      const auto mask = subset_from_key(key, r);
      seen[mask] = true;
      values[mask] = as_big(value, "chi value");
    }
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (!seen[mask]) fail("chi is missing node subset \"" + subset_key(mask) + "\"");
    }
    return NodalCurve(g, r, std::move(values));
  });
}

json to_json(const SingularityGerm& germ) {
  return {{"delta", germ.delta}, {"mu", germ.mu}, {"q_euler", to_json(germ.q_euler)}};
}

SingularityGerm germ_from_json(const json& j) {
  return guarded([&] {
    const int delta = int_field(j, "delta");
    const json& mu = field(j, "mu");
    if (!mu.is_number_integer()) fail("mu must be an integer");
    SingularityGerm germ{delta, mu.get<long long>(), series_from_json(field(j, "q_euler"))};
    germ.validate();
    return germ;
  });
}

json to_json(const KkvTable& t) {
  json rows = json::array();
  for (int h = 0; h <= t.h_max(); ++h) {
    for (int g = 0; g <= h; ++g) {
      rows.push_back({{"g", g}, {"h", h}, {"r", big_string(t.r(g, h))}});
    }
  }
  return {{"h_max", t.h_max()}, {"rows", std::move(rows)}};
}

KkvTable kkv_from_json(const json& j) {
  return guarded([&] {
    KkvTable t(int_field(j, "h_max"));
    for (const auto& row : array_field(j, "rows")) {
      t.set(int_field(row, "g"), int_field(row, "h"), as_big(field(row, "r"), "r"));
    }
    return t;
  });
}

void write_kkv_csv(std::ostream& out, const KkvTable& t) {
  out << "g,h,r_gh\n";
  for (int h = 0; h <= t.h_max(); ++h) {
    for (int g = 0; g <= h; ++g) out << g << ',' << h << ',' << to_decimal(t.r(g, h)) << '\n';
  }
}

json to_json(const K3PairsSeries& ky) {
  json coeffs = json::array();
  for (const auto& c : ky.data.coeffs()) coeffs.push_back(to_json(c));
  return {{"h_max", ky.data.order_q()}, {"y_order", ky.y_order}, {"q_coeffs", std::move(coeffs)}};
}

K3PairsSeries ky_from_json(const json& j) {
  return guarded([&] {
    const int h_max = int_field(j, "h_max");
    const int y_order = int_field(j, "y_order");
    const json& arr = array_field(j, "q_coeffs");
    if (h_max < 0 || arr.size() != static_cast<std::size_t>(h_max) + 1) {
      fail("q_coeffs must hold h_max + 1 polynomials");
    }
    std::vector<LaurentPoly> coeffs;
    for (const auto& c : arr) coeffs.push_back(poly_from_json(c));
    return K3PairsSeries{BiSeries(std::move(coeffs)), y_order};
  });
}

void write_ky_csv(std::ostream& out, const K3PairsSeries& ky) {
  out << "h,n,e\n";
  for (int h = 0; h <= ky.data.order_q(); ++h) {
    for (const auto& [n, e] : ky.data.coeff(h).terms()) {
      out << h << ',' << n << ',' << to_decimal(e) << '\n';
    }
  }
}

json to_json(const SignedCheckReport& r) {
  json j{{"pass", r.pass}, {"h_max", r.h_max}, {"y_order", r.y_order}};
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    j["first_mismatch"] = {{"h", m.h},
                           {"n", m.n},
                           {"expected", big_string(m.expected)},
                           {"actual", big_string(m.actual)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

void write_series_csv(std::ostream& out, const TruncSeries& s, const std::string& index_name,
                      const std::string& value_name) {
  out << index_name << ',' << value_name << '\n';
  for (int e = s.min_exp(); e <= s.order(); ++e) out << e << ',' << to_decimal(s.at(e)) << '\n';
}

}  // namespace gvbps::io
