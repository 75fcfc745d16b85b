#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "gvbps/bps_transform.hpp"
#include "gvbps/curve_local.hpp"
#include "gvbps/error.hpp"
#include "gvbps/io.hpp"
#include "gvbps/k3_kkv.hpp"
#include "gvbps/products.hpp"

namespace gvbps::cli {

namespace {

using io::json;

struct Params {
  int order = 0;
  int g = 0;
  int r = 0;
  int h_max = 0;
  int y_order = 20;
  int k = 0;
  long long exponent = -24;
  long long euler = 0;
  long long ec0 = 0;
  std::string chi = "1";
  std::string n_list;
  std::string germ = "node";
  std::string op = "mul";
  std::string sign = "minus";
  std::string factors;
  std::string format = "json";
  std::string in_path = "-";
  std::string rhs_path;
  std::string out_path = "-";
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Params p;
  CLI::App* cmd = nullptr;

  bool given(const std::string& flag) const { return cmd->count(flag) > 0; }
  bool csv() const { return p.format == "csv"; }
  std::ostream& err() { return err_; }

  json read_json(const std::string& path) {
    if (path.empty() || path == "-") return io::parse(in_);
    std::ifstream file(path);
    if (!file) throw Error(Errc::ParseError, "cannot open input file " + path);
    return io::parse(file);
  }
  json read_input() { return read_json(p.in_path); }

  void emit(const std::function<void(std::ostream&)>& write) {
    if (p.out_path.empty() || p.out_path == "-") {
      write(out_);
      out_.flush();
      return;
    }
    std::ofstream file(p.out_path);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open output file " + p.out_path);
    write(file);
  }
  void emit_json(const json& j) {
    emit([&](std::ostream& os) { os << io::dump(j); });
  }

  void require_json_only(const char* verb) const {
    if (csv()) throw Error(Errc::ParseError, std::string(verb) + " has no CSV form");
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotBpsForm:
    case Errc::NotKkvForm:
      return kValidationFailure;
    case Errc::ParseError:
      return kParseFailure;
    default:
      return kPreconditionFailure;
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }),
               part.end());
    parts.push_back(part);
  }
  return parts;
}

std::vector<BigInt> parse_big_list(const std::string& text) {
  std::vector<BigInt> values;
  for (const auto& part : split_list(text)) values.push_back(parse_decimal(part));
  return values;
}

std::vector<ProductFactor> parse_factors(const std::string& text) {
  std::vector<ProductFactor> factors;
  for (const auto& part : split_list(text)) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos) {
      throw Error(Errc::ParseError, "factor \"" + part + "\" must look like a:e");
    }
    try {
      factors.push_back({std::stoi(part.substr(0, colon)), std::stoi(part.substr(colon + 1))});
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "factor \"" + part + "\" must look like a:e");
    }
  }
  return factors;
}

Sign parse_sign(const std::string& s) { return s == "plus" ? Sign::Plus : Sign::Minus; }

void write_bps_csv(std::ostream& os, const BpsVector& v) {
  os << "r,n_r\n";
  for (int r = 0; r <= v.g(); ++r) os << r << ',' << to_decimal(v[r]) << '\n';
}

void emit_bps(Session& s, const BpsVector& v) {
  if (s.csv()) {
    s.emit([&](std::ostream& os) { write_bps_csv(os, v); });
  } else {
    s.emit_json(io::to_json(v));
  }
}

void emit_series(Session& s, const TruncSeries& series, const char* index, const char* value) {
  if (s.csv()) {
    s.emit([&](std::ostream& os) { io::write_series_csv(os, series, index, value); });
  } else {
    s.emit_json(io::to_json(series));
  }
}

void emit_pairs(Session& s, const PairsSeries& z) {
  if (s.csv()) {
    s.emit([&](std::ostream& os) { io::write_series_csv(os, z.series, "n", "P_n"); });
  } else {
    s.emit_json(io::to_json(z));
  }
}

BpsVector bps_from_flags(Session& s) {
  if (s.given("--n")) return BpsVector(s.p.g, parse_big_list(s.p.n_list));
  return io::bps_from_json(s.read_input());
}

PairsSeries pairs_input(Session& s) {
  PairsSeries z = io::pairs_from_json(s.read_input());
  if (s.given("--g")) z.g = s.p.g;
  return z;
}

SingularityGerm germ_input(Session& s) {
  if (s.given("--in")) return io::germ_from_json(s.read_input());
  const int order = s.given("--germ-order") ? s.p.k : 16;
  if (s.p.germ == "smooth") return SingularityGerm::smooth(order);
  return SingularityGerm::node(order);
}

// --- verbs ---------------------------------------------------------------

int bps_recompose(Session& s) {
  emit_pairs(s, bps_recompose(bps_from_flags(s), s.p.order));
  return kOk;
}

int bps_decompose(Session& s) {
  emit_bps(s, bps_decompose(pairs_input(s)));
  return kOk;
}

int bps_validate(Session& s) {
  s.require_json_only("bps validate");
  const GgtcReport report = validate_ggtc(pairs_input(s));
  s.emit_json(io::to_json(report));
  if (report.pass) return kOk;
  auto note = [&](const char* name, const char* law, const IdentityCheck& c) {
    if (c.pass) return;
    s.err() << "gvbps: identity " << name << " (" << law << ") fails at exponent n = "
            << *c.first_failure << " with N = " << to_decimal(report.n_genus0) << '\n';
  };
  note("identity_0", "P_n = 0 for n <= -g", report.identity_0);
  note("identity_gg", "P_n - P_{-n} = (-1)^{n-1} n N for 0 < n < g", report.identity_gg);
  note("identity_g0", "P_n = (-1)^{n-1} n N for n >= g", report.identity_g0);
  return kValidationFailure;
}

int hilb_decompose(Session& s) {
  emit_bps(s, hilbert_decompose(io::series_from_json(s.read_input()), s.p.g));
  return kOk;
}

int hilb_recompose(Session& s) {
  emit_series(s, hilbert_recompose(bps_from_flags(s), s.p.order), "n", "e_n");
  return kOk;
}

int curve_nonsingular(Session& s) {
  const auto c = nonsingular_contribution(s.p.g, parse_decimal(s.p.chi), s.p.order);
  if (s.csv()) {
    s.emit([&](std::ostream& os) { write_bps_csv(os, c.bps); });
  } else {
    s.emit_json({{"bps", io::to_json(c.bps)}, {"series", io::to_json(c.series)}});
  }
  return kOk;
}

int curve_nodal(Session& s) {
  const NodalCurve c = s.given("--in") ? io::nodal_from_json(s.read_input())
                                       : NodalCurve::uniform(s.p.g, s.p.r, parse_decimal(s.p.chi));
  if (s.given("--order")) {
    emit_pairs(s, nodal_pairs_series(c, s.p.order));
  } else {
    emit_bps(s, nodal_contribution(c));
  }
  return kOk;
}

int curve_qseries(Session& s) {
  emit_bps(s, q_series_decompose(germ_input(s)));
  return kOk;
}

int curve_stratify(Session& s) {
  emit_pairs(s, stratify_pairs_series(germ_input(s), s.p.ec0, s.p.g, s.p.order));
  return kOk;
}

int curve_hilbert(Session& s) {
  emit_series(s, hilbert_series_from_germ(germ_input(s), s.p.ec0, s.p.order), "n", "e_n");
  return kOk;
}

int curve_sym_euler(Session& s) {
  const BigInt v = sym_euler(s.p.euler, s.p.k);
  if (s.csv()) {
    s.emit([&](std::ostream& os) { os << "e,k,value\n" << s.p.euler << ',' << s.p.k << ',' << to_decimal(v) << '\n'; });
  } else {
    s.emit_json({{"e", s.p.euler}, {"k", s.p.k}, {"value", to_decimal(v)}});
  }
  return kOk;
}

int curve_milnor(Session& s) {
  const long long mu = milnor_from_geometry(s.p.g, s.p.ec0);
  if (s.csv()) {
    s.emit([&](std::ostream& os) { os << "g,e_c0,mu\n" << s.p.g << ',' << s.p.ec0 << ',' << mu << '\n'; });
  } else {
    s.emit_json({{"g", s.p.g}, {"e_c0", s.p.ec0}, {"mu", mu}});
  }
  return kOk;
}

int k3_ky(Session& s) {
  const auto ky = ky_series(s.p.h_max, s.p.y_order);
  if (s.csv()) {
    s.emit([&](std::ostream& os) { io::write_ky_csv(os, ky); });
  } else {
    s.emit_json(io::to_json(ky));
  }
  return kOk;
}

int k3_product(Session& s) {
  s.require_json_only("k3 product");
  s.emit_json(io::to_json(kkv_product(s.p.h_max)));
  return kOk;
}

int k3_kkv(Session& s) {
  const BiSeries b = s.given("--in") ? io::bi_series_from_json(s.read_input()) : kkv_product(s.p.h_max);
  const KkvTable table = kkv_decompose(b);
  if (s.csv()) {
    s.emit([&](std::ostream& os) { io::write_kkv_csv(os, table); });
  } else {
    s.emit_json(io::to_json(table));
  }
  return kOk;
}

int k3_yz(Session& s) {
  emit_series(s, yau_zaslow(s.p.h_max), "h", "r_0h");
  return kOk;
}

int k3_signed_check(Session& s) {
  s.require_json_only("k3 signed-check");
  const auto report = s.given("--in") ? signed_conversion_check(io::ky_from_json(s.read_input()))
                                      : signed_conversion_check(s.p.h_max, s.p.y_order);
  s.emit_json(io::to_json(report));
  if (report.pass) return kOk;
  const auto& m = *report.first_mismatch;
  s.err() << "gvbps: signed conversion fails at q^" << m.h << " y^" << m.n << ": expected "
          << to_decimal(m.expected) << ", got " << to_decimal(m.actual) << '\n';
  return kValidationFailure;
}

int series_eta(Session& s) {
  if (s.p.exponent < -1000000 || s.p.exponent > 1000000) {
    throw Error(Errc::InvalidArgument, "exponent out of range");
  }
  emit_series(s, eta_power(static_cast<int>(s.p.exponent), s.p.order), "n", "c_n");
  return kOk;
}

int series_arith_verb(Session& s) {
  const TruncSeries a = io::series_from_json(s.read_input());
  const TruncSeries b = io::series_from_json(s.read_json(s.p.rhs_path));
  emit_series(s, series_arith(a, b, s.p.op == "add" ? ArithOp::Add : ArithOp::Mul), "n", "c_n");
  return kOk;
}

int series_inverse_verb(Session& s) {
  emit_series(s, series_inverse(io::series_from_json(s.read_input()), s.p.order), "n", "c_n");
  return kOk;
}

int series_binom(Session& s) {
  if (s.p.exponent < -1000000 || s.p.exponent > 1000000) {
    throw Error(Errc::InvalidArgument, "exponent out of range");
  }
  emit_series(s, binom_pow(static_cast<int>(s.p.exponent), parse_sign(s.p.sign), s.p.order), "n", "c_n");
  return kOk;
}

int series_negate(Session& s) {
  emit_series(s, q_negate(io::series_from_json(s.read_input())), "n", "c_n");
  return kOk;
}

int series_product(Session& s) {
  s.require_json_only("series product");
  const auto factors = parse_factors(s.p.factors);
  s.emit_json(io::to_json(parse_sign(s.p.sign) == Sign::Plus ? product_family_plus(factors, s.p.order)
                                                            : product_family(factors, s.p.order)));
  return kOk;
}

int series_lp(Session& s) {
  s.require_json_only("series lp");
  const LaurentPoly a = io::poly_from_json(s.read_input());
  const LaurentPoly b = io::poly_from_json(s.read_json(s.p.rhs_path));
  s.emit_json(io::to_json(lp_arith(a, b, s.p.op == "add" ? ArithOp::Add : ArithOp::Mul)));
  return kOk;
}

int series_involution(Session& s) {
  s.require_json_only("series involution");
  s.emit_json({{"symmetric", involution_check(io::poly_from_json(s.read_input()))}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Session s(in, out, err);
  Params& p = s.p;

  CLI::App app{"Exact BPS, stable-pairs and K3 generating-function calculus", "gvbps"};
  app.require_subcommand(1);
  std::map<CLI::App*, std::function<int(Session&)>> verbs;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", p.out_path, "Output path, - for standard output");
  };
  auto verb = [&](CLI::App* group, const char* name, const char* help, int (*fn)(Session&)) {
    CLI::App* c = group->add_subcommand(name, help);
    common(c);
    verbs[c] = fn;
    return c;
  };
  auto in_opt = [&](CLI::App* c, const char* help) { return c->add_option("--in", p.in_path, help); };

  // bps
  CLI::App* bps = app.add_subcommand("bps", "BPS basis transform")->require_subcommand(1);
  {
    auto* c = verb(bps, "recompose", "BPS vector to pairs series", bps_recompose);
    c->add_option("--g", p.g, "Genus bound");
    c->add_option("--n", p.n_list, "Comma-separated n_0..n_g");
    in_opt(c, "BPS vector JSON (used when --n is absent)");
    c->add_option("--order", p.order, "Truncation order")->required();

    c = verb(bps, "decompose", "Pairs series to BPS vector", bps_decompose);
    in_opt(c, "Pairs series JSON");
    c->add_option("--g", p.g, "Genus bound (overrides the file)");

    c = verb(bps, "validate", "Check the pairs identities", bps_validate);
    in_opt(c, "Pairs series JSON");
    c->add_option("--g", p.g, "Genus bound (overrides the file)");
  }

  // hilb
  CLI::App* hilb = app.add_subcommand("hilb", "Hilbert-scheme series basis")->require_subcommand(1);
  {
    auto* c = verb(hilb, "decompose", "Hilbert series to BPS vector", hilb_decompose);
    in_opt(c, "Series JSON");
    c->add_option("--g", p.g, "Arithmetic genus")->required();

    c = verb(hilb, "recompose", "BPS vector to Hilbert series", hilb_recompose);
    c->add_option("--g", p.g, "Genus bound");
    c->add_option("--n", p.n_list, "Comma-separated n_0..n_g");
    in_opt(c, "BPS vector JSON (used when --n is absent)");
    c->add_option("--order", p.order, "Truncation order")->required();
  }

  // curve
  CLI::App* curve = app.add_subcommand("curve", "Local curve contributions")->require_subcommand(1);
  {
    auto germ_opts = [&](CLI::App* c) {
      in_opt(c, "Singularity germ JSON");
      c->add_option("--germ", p.germ, "Built-in germ")->check(CLI::IsMember({"node", "smooth"}));
      c->add_option("--germ-order", p.k, "Q-series order for a built-in germ (default 16)");
    };

    auto* c = verb(curve, "nonsingular", "Smooth curve contribution", curve_nonsingular);
    c->add_option("--g", p.g, "Genus")->required();
    c->add_option("--chi", p.chi, "Behrend value");
    c->add_option("--order", p.order, "Series order")->required();

    c = verb(curve, "nodal", "Nodal curve contribution (series with --order)", curve_nodal);
    in_opt(c, "Nodal curve JSON");
    c->add_option("--g", p.g, "Arithmetic genus");
    c->add_option("--r", p.r, "Number of nodes");
    c->add_option("--chi", p.chi, "Value on every node subset");
    c->add_option("--order", p.order, "Emit the pairs series through this order");

    c = verb(curve, "qseries", "Germ Q-series decomposition", curve_qseries);
    germ_opts(c);

    c = verb(curve, "stratify", "Pairs series of a curve with one singular germ", curve_stratify);
    germ_opts(c);
    c->add_option("--ec0", p.ec0, "Euler characteristic of the smooth locus")->required();
    c->add_option("--g", p.g, "Arithmetic genus")->required();
    c->add_option("--order", p.order, "Series order")->required();

    c = verb(curve, "hilbert", "Hilbert series of a curve with one singular germ", curve_hilbert);
    germ_opts(c);
    c->add_option("--ec0", p.ec0, "Euler characteristic of the smooth locus")->required();
    c->add_option("--order", p.order, "Series order")->required();

    c = verb(curve, "sym-euler", "Euler characteristic of a symmetric product", curve_sym_euler);
    c->add_option("--euler", p.euler, "Euler characteristic of the space")->required();
    c->add_option("--k", p.k, "Symmetric power")->required();

    c = verb(curve, "milnor", "Milnor term from genus and smooth locus", curve_milnor);
    c->add_option("--g", p.g, "Arithmetic genus")->required();
    c->add_option("--ec0", p.ec0, "Euler characteristic of the smooth locus")->required();
  }

  // k3
  CLI::App* k3 = app.add_subcommand("k3", "K3 product formulas")->require_subcommand(1);
  {
    auto* c = verb(k3, "ky", "Pairs Euler characteristics e(P_n(S,h))", k3_ky);
    c->add_option("--hmax", p.h_max, "Largest h")->required();
    c->add_option("--yorder", p.y_order, "Largest n (default 20)");

    c = verb(k3, "product", "Two-variable KKV product", k3_product);
    c->add_option("--hmax", p.h_max, "Largest h")->required();

    c = verb(k3, "kkv", "r_{g,h} table", k3_kkv);
    c->add_option("--hmax", p.h_max, "Largest h");
    in_opt(c, "Two-variable series JSON to decompose instead of the product");

    c = verb(k3, "yz", "Genus-0 series r_{0,h}", k3_yz);
    c->add_option("--hmax", p.h_max, "Largest h")->required();

    c = verb(k3, "signed-check", "Signed conversion of the pairs series", k3_signed_check);
    c->add_option("--hmax", p.h_max, "Largest h");
    c->add_option("--yorder", p.y_order, "Largest n (default 20)");
    in_opt(c, "Pairs series JSON to check instead of a fresh expansion");
  }

  // series
  CLI::App* series = app.add_subcommand("series", "Series engine")->require_subcommand(1);
  {
    auto* c = verb(series, "eta", "prod (1-q^n)^e", series_eta);
    c->add_option("--exponent", p.exponent, "Exponent e (default -24)");
    c->add_option("--order", p.order, "Truncation order")->required();

    c = verb(series, "arith", "Add or multiply two series", series_arith_verb);
    in_opt(c, "Left series JSON");
    c->add_option("--rhs", p.rhs_path, "Right series JSON")->required();
    c->add_option("--op", p.op)->check(CLI::IsMember({"add", "mul"}));

    c = verb(series, "inverse", "Multiplicative inverse", series_inverse_verb);
    in_opt(c, "Series JSON");
    c->add_option("--order", p.order, "Truncation order")->required();

    c = verb(series, "binom", "(1 +- q)^e", series_binom);
    c->add_option("--exponent", p.exponent, "Exponent e")->required();
    c->add_option("--sign", p.sign)->check(CLI::IsMember({"plus", "minus"}));
    c->add_option("--order", p.order, "Truncation order")->required();

    c = verb(series, "negate", "q -> -q", series_negate);
    in_opt(c, "Series JSON");

    c = verb(series, "product", "prod_n prod (1 -+ z^a q^n)^e", series_product);
    c->add_option("--factors", p.factors, "Comma-separated a:e pairs");
    c->add_option("--sign", p.sign)->check(CLI::IsMember({"plus", "minus"}));
    c->add_option("--order", p.order, "q-order")->required();

    c = verb(series, "lp", "Laurent polynomial arithmetic", series_lp);
    in_opt(c, "Left polynomial JSON");
    c->add_option("--rhs", p.rhs_path, "Right polynomial JSON")->required();
    c->add_option("--op", p.op)->check(CLI::IsMember({"add", "mul"}));

    c = verb(series, "involution", "z <-> 1/z symmetry test", series_involution);
    in_opt(c, "Polynomial JSON");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  for (CLI::App* group : app.get_subcommands()) {
    for (CLI::App* leaf : group->get_subcommands()) s.cmd = leaf;
  }

  try {
    return verbs.at(s.cmd)(s);
  } catch (const Error& e) {
    err << "gvbps: " << e.what();
    if (e.exponent()) err << " [exponent " << *e.exponent() << "]";
    err << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace gvbps::cli
