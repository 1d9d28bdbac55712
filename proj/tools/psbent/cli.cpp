#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "psbent/boolfun.hpp"
#include "psbent/construct.hpp"
#include "psbent/errors.hpp"
#include "psbent/field.hpp"
#include "psbent/hex.hpp"
#include "psbent/polynomials.hpp"
#include "psbent/quasifield.hpp"
#include "psbent/spread.hpp"

#ifndef PSBENT_VERSION
#define PSBENT_VERSION "unknown"
#endif

namespace psbent::cli {

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Globals {
  std::string modulus;
  bool timings = false;
};

struct FamilyArgs {
  std::string family;
  unsigned m = 0;
  unsigned k = 1;
  std::string beta = "1";
  CLI::Option* k_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
};

// Collects wall-clock timings; they only reach the report with --timings so
// that default output stays byte-identical across runs.
class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}

  template <class F>
  auto time(const std::string& name, F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record(name, start);
    } else {
      auto result = fn();
      record(name, start);
      return result;
    }
  }

  void attach(json& report) const {
    if (enabled_) report["timings_ms"] = laps_;
  }

 private:
  void record(const std::string& name, std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    laps_[name] = std::chrono::duration<double, std::milli>(elapsed).count();
  }

  bool enabled_;
  json laps_ = json::object();
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "field | dm | knuth | kantor")->required();
  cmd->add_option("--m", a.m, "extension degree m")->required();
  a.k_opt = cmd->add_option("--k", a.k, "Dempwolff-Mueller parameter k (odd, coprime to m; default 1)");
  a.beta_opt = cmd->add_option("--beta", a.beta, "Knuth parameter beta (hex, nonzero; default 1)");
}

Field make_field(const Globals& g, unsigned m) {
  if (g.modulus.empty()) return Field(m);
  return Field(m, static_cast<Elem>(parse_hex(g.modulus, "--modulus")));
}

Quasifield make_quasifield(const Globals& g, const FamilyArgs& a, Validation validation) {
  const auto family = parse_family(a.family);
  if (!family) throw InvalidParameter("--family: unknown family '" + a.family + "'");
  const bool has_k = a.k_opt->count() > 0;
  const bool has_beta = a.beta_opt->count() > 0;
  if (*family != Family::DempwolffMuller && has_k) throw InvalidParameter("--k: only valid with --family dm");
  if (*family != Family::Knuth && has_beta) throw InvalidParameter("--beta: only valid with --family knuth");

  Field field = make_field(g, a.m);
  QuasifieldParams params;
  params.k = a.k;
  if (*family == Family::Knuth) {
    const std::uint64_t beta = parse_hex(a.beta, "--beta");
    if (beta >= field.size()) throw InvalidParameter("--beta: " + a.beta + " is not an element of the field");
    params.beta = static_cast<Elem>(beta);
  }
  return Quasifield::make(*family, std::move(field), params, validation);
}

json family_parameters(const Quasifield& q) {
  json p;
  p["family"] = std::string(family_name(q.family()));
  p["m"] = q.field().degree();
  p["modulus"] = to_hex(q.field().modulus());
  if (q.family() == Family::DempwolffMuller) p["k"] = q.params().k;
  if (q.family() == Family::Knuth) p["beta"] = to_hex(q.params().beta);
  return p;
}

std::string header_params(const Quasifield& q) {
  switch (q.family()) {
    case Family::DempwolffMuller:
      return "k=" + std::to_string(q.params().k);
    case Family::Knuth:
      return "beta=" + to_hex(q.params().beta);
    default:
      return "none";
  }
}

Elem parse_element(const Field& field, const std::string& text, std::string_view flag) {
  const std::uint64_t v = parse_hex(text, flag);
  if (v >= field.size()) throw InvalidParameter(std::string(flag) + ": " + text + " is not an element of the field");
  return static_cast<Elem>(v);
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

json hex_list(const std::vector<Elem>& values) {
  json list = json::array();
  for (Elem v : values) list.push_back(to_hex(v));
  return list;
}

json summary_json(std::span<const std::int32_t> spectrum) {
  json s = json::object();
  for (const auto& [value, count] : spectrum_summary(spectrum)) s[std::to_string(value)] = count;
  return s;
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

TruthTableFile load_truth_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("--tt: cannot open '" + path + "'");
  return read_truth_table(in);
}

json header_json(const std::map<std::string, std::string>& header) {
  json h = json::object();
  for (const auto& [key, value] : header) h[key] = value;
  return h;
}

// ---------------------------------------------------------------------------

int run_qf_verify(const Globals& g, const FamilyArgs& a, std::ostream& out) {
  Stopwatch clock(g.timings);
  const Quasifield q = make_quasifield(g, a, Validation::Skip);
  json report;
  report["command"] = "qf verify";
  report["parameters"] = family_parameters(q);

  const std::size_t mismatches = clock.time("division_sweep", [&] { return count_division_mismatches(q); });
  const std::uint64_t pairs = std::uint64_t{q.field().size()} * q.field().size();
  report["division"] = {{"pairs", pairs}, {"mismatches", mismatches}};
  bool pass = mismatches == 0;

  if (q.field().degree() <= kMaxAxiomDegree) {
    const AxiomReport ax = clock.time("axioms", [&] { return verify_axioms(q); });
    report["axioms"] = {
        {"additive_group", ax.additive_group},
        {"left_bijective", ax.left_bijective},
        {"right_bijective", ax.right_bijective},
        {"left_distributive", ax.left_distributive},
        {"zero_left", ax.zero_left},
        {"right_distributive", ax.right_distributive},
        {"zero_right", ax.zero_right},
        {"prequasifield", ax.is_prequasifield()},
        {"presemifield", ax.is_presemifield()},
        {"failures", ax.failures},
    };
    pass = pass && ax.is_prequasifield();
  } else {
    report["axioms"] = "skipped: exhaustive check limited to m <= " + std::to_string(kMaxAxiomDegree);
  }
  report["pass"] = pass;
  clock.attach(report);
  emit(out, report);
  return pass ? kOk : kFailed;
}

int run_qf_divide(const Globals& g, const FamilyArgs& a, const std::string& xs, const std::string& ys,
                  const std::string& method, std::ostream& out) {
  const Quasifield q = make_quasifield(g, a, Validation::Skip);
  const Elem x = parse_element(q.field(), xs, "--x");
  const Elem y = parse_element(q.field(), ys, "--y");
  const Elem result = method == "oracle" ? q.divide_oracle(y, x) : q.divide(y, x);
  json report;
  report["command"] = "qf divide";
  report["parameters"] = family_parameters(q);
  report["parameters"]["x"] = to_hex(x);
  report["parameters"]["y"] = to_hex(y);
  report["parameters"]["method"] = method;
  report["result"] = to_hex(result);
  report["check"] = to_hex(q.mul(result, x));
  emit(out, report);
  return kOk;
}

int run_spread_verify(const Globals& g, const FamilyArgs& a, const std::string& dump, std::ostream& out) {
  Stopwatch clock(g.timings);
  const Quasifield q = make_quasifield(g, a, Validation::Auto);
  const Spread spread = clock.time("build", [&] { return build_spread(q); });
  const SpreadReport r = clock.time("verify", [&] { return verify_spread(spread); });
  if (!dump.empty()) {
    std::ofstream file(dump);
    if (!file) throw InvalidParameter("--dump: cannot write '" + dump + "'");
    write_spread_dump(file, spread);
  }
  json report;
  report["command"] = "spread verify";
  report["parameters"] = family_parameters(q);
  report["components"] = spread.size();
  report["checks"] = {
      {"component_count", r.component_count_ok}, {"sizes", r.sizes_ok},
      {"closure", r.closure_ok},                 {"trivial_intersections", r.trivial_intersections},
      {"covers_space", r.covers_space},          {"counting_identity", r.counting_identity},
  };
  report["failures"] = r.failures;
  report["pass"] = r.passed();
  clock.attach(report);
  emit(out, report);
  return r.passed() ? kOk : kFailed;
}

int run_dickson_inverse(const Globals& g, unsigned m, std::uint64_t k, std::ostream& out) {
  const Field field = make_field(g, m);
  const std::uint64_t kp = dickson_inverse_exponent(k, m);
  const ExtField ext(field);
  std::size_t failures = 0;
  for (Elem x = 0; x < field.size(); ++x) failures += dickson_eval(ext, kp, dickson_eval(ext, k, x)) != x;
  json report;
  report["command"] = "poly dickson-inv";
  report["parameters"] = {{"m", m}, {"k", k}, {"modulus", to_hex(field.modulus())}};
  report["k_inverse"] = kp;
  report["group_order"] = (std::uint64_t{1} << (2 * m)) - 1;
  report["composition_failures"] = failures;
  report["pass"] = failures == 0;
  emit(out, report);
  return failures == 0 ? kOk : kFailed;
}

int run_invert_linearized(const Globals& g, unsigned m, const std::string& coeff_text, std::ostream& out) {
  const Field field = make_field(g, m);
  std::vector<Elem> coeffs;
  for (const std::string& part : split_commas(coeff_text)) coeffs.push_back(parse_element(field, part, "--coeffs"));
  const LinearizedMap map(field, coeffs);

  json report;
  report["command"] = "poly invert-linearized";
  report["parameters"] = {{"m", m}, {"coeffs", hex_list(coeffs)}, {"modulus", to_hex(field.modulus())}};
  report["rank"] = map.matrix().rank();
  if (!map.is_bijective()) {
    report["bijective"] = false;
    report["pass"] = false;
    emit(out, report);
    return kFailed;
  }
  const LinearizedMap inverse = invert_linearized(map);
  std::size_t failures = 0;
  for (Elem z = 0; z < field.size(); ++z) failures += inverse(map(z)) != z || map(inverse(z)) != z;
  report["bijective"] = true;
  report["inverse"] = hex_list(inverse.coefficients());
  report["composition_failures"] = failures;
  report["pass"] = failures == 0;
  emit(out, report);
  return failures == 0 ? kOk : kFailed;
}

Selector parse_selector(const std::string& text, unsigned m) {
  constexpr std::string_view kSupport = "support:";
  constexpr std::string_view kRandom = "random:";
  const std::string_view view(text);
  if (view.starts_with(kSupport)) {
    std::vector<Elem> slopes;
    for (const std::string& part : split_commas(view.substr(kSupport.size()))) {
      const std::uint64_t v = parse_hex(part, "--g");
      if (v > 0xffffffffULL) throw InvalidParameter("--g: slope " + part + " is out of range");
      slopes.push_back(static_cast<Elem>(v));
    }
    return Selector::from_support(m, slopes);
  }
  if (view.starts_with(kRandom)) {
    const std::string_view digits = view.substr(kRandom.size());
    std::uint64_t seed = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
      throw InvalidParameter("--g: random seed must be a decimal 64-bit integer, got '" + std::string(digits) + "'");
    }
    return Selector::random(m, seed);
  }
  throw InvalidParameter("--g: expected support:HEX,HEX,... or random:SEED, got '" + text + "'");
}

int run_bent_build(const Globals& g, const FamilyArgs& a, const std::string& g_text, const std::string& path,
                   bool plus, bool no_certify, std::ostream& out, std::ostream& err) {
  Stopwatch clock(g.timings);
  const Quasifield q = clock.time("quasifield", [&] { return make_quasifield(g, a, Validation::Auto); });
  const Selector selector = parse_selector(g_text, q.field().degree());
  const bool certify = !no_certify;

  json report;
  report["command"] = "bent build";
  report["parameters"] = family_parameters(q);
  report["parameters"]["g"] = g_text;
  report["parameters"]["plus"] = plus;
  report["parameters"]["certify"] = certify;
  report["parameters"]["out"] = path;
  report["selector_support"] = hex_list(selector.support());

  TruthTable f(0);
  try {
    f = clock.time("construct", [&] { return ps_minus(q, selector, certify); });
  } catch (const BentCertificationFailed& e) {
    err << "error: " << e.what() << '\n';
    report["bent"] = false;
    report["pass"] = false;
    clock.attach(report);
    emit(out, report);
    return kFailed;
  }
  if (plus) f = ps_plus(f);

  {
    std::ofstream file(path);
    if (!file) throw InvalidParameter("--out: cannot write '" + path + "'");
    const std::string header = "m=" + std::to_string(q.field().degree()) + " family=" +
                               std::string(family_name(q.family())) + " params=" + header_params(q) +
                               " modulus=" + to_hex(q.field().modulus()) + " class=" + (plus ? "ps+" : "ps-");
    write_truth_table(file, f, header);
  }

  report["n"] = f.variables();
  report["weight"] = weight(f);
  report["degree"] = clock.time("degree", [&] { return degree(f); });
  bool pass = true;
  if (certify) {
    const auto spectrum = clock.time("spectrum", [&] { return walsh_spectrum(f); });
    const bool bent = is_bent_spectrum(spectrum, f.variables());
    report["bent"] = bent;
    report["spectrum_summary"] = summary_json(spectrum);
    pass = bent;
  } else {
    report["bent"] = nullptr;
  }
  report["pass"] = pass;
  clock.attach(report);
  emit(out, report);
  return pass ? kOk : kFailed;
}

int run_bent_verify(const Globals& g, const std::string& path, std::ostream& out) {
  Stopwatch clock(g.timings);
  const TruthTableFile file = load_truth_table(path);
  const TruthTable& f = file.table;
  if (f.variables() % 2 != 0) {
    throw InvalidParameter("--tt: bentness needs an even number of variables, table has " +
                           std::to_string(f.variables()));
  }
  const auto spectrum = clock.time("spectrum", [&] { return walsh_spectrum(f); });
  const bool bent = is_bent_spectrum(spectrum, f.variables());
  json report;
  report["command"] = "bent verify";
  report["parameters"] = {{"tt", path}};
  report["header"] = header_json(file.header);
  report["n"] = f.variables();
  report["weight"] = weight(f);
  report["balanced"] = is_balanced(f);
  report["degree"] = clock.time("degree", [&] { return degree(f); });
  report["bent"] = bent;
  report["spectrum_summary"] = summary_json(spectrum);
  report["pass"] = bent;
  clock.attach(report);
  emit(out, report);
  return bent ? kOk : kFailed;
}

int run_bent_anf(const std::string& path, std::ostream& out) {
  const TruthTableFile file = load_truth_table(path);
  const TruthTable coeffs = anf(file.table);
  json report;
  report["command"] = "bent anf";
  report["parameters"] = {{"tt", path}};
  report["n"] = file.table.variables();
  report["degree"] = degree(file.table);
  report["monomials"] = weight(coeffs);
  report["anf"] = to_hex_body(coeffs);
  emit(out, report);
  return kOk;
}

int run_bent_spectrum(const std::string& path, bool summary, std::ostream& out) {
  const TruthTableFile file = load_truth_table(path);
  const auto spectrum = walsh_spectrum(file.table);
  std::uint64_t energy = 0;
  for (std::int32_t v : spectrum) energy += static_cast<std::uint64_t>(std::int64_t{v} * v);
  json report;
  report["command"] = "bent spectrum";
  report["parameters"] = {{"tt", path}, {"summary", summary}};
  report["n"] = file.table.variables();
  report["parseval"] = energy == (std::uint64_t{1} << (2 * file.table.variables()));
  if (summary) {
    report["spectrum_summary"] = summary_json(spectrum);
  } else {
    report["spectrum"] = spectrum;
  }
  emit(out, report);
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial-spread bent functions from pre-quasifield spreads", "psbent"};
  app.set_version_flag("--version", std::string("psbent ") + PSBENT_VERSION);
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--modulus", globals.modulus, "irreducible modulus of GF(2^m) as hex (default: smallest)");
  app.add_flag("--timings", globals.timings, "add wall-clock timings to reports");

  // qf
  auto* qf = app.add_subcommand("qf", "pre-quasifield families")->require_subcommand(1)->fallthrough();
  FamilyArgs qf_verify_args;
  auto* qf_verify = qf->add_subcommand("verify", "check the division formula and the axioms")->fallthrough();
  add_family_options(qf_verify, qf_verify_args);

  FamilyArgs qf_divide_args;
  std::string div_x, div_y, div_method = "formula";
  auto* qf_divide = qf->add_subcommand("divide", "left division <>y/x")->fallthrough();
  add_family_options(qf_divide, qf_divide_args);
  qf_divide->add_option("--x", div_x, "x (hex)")->required();
  qf_divide->add_option("--y", div_y, "y (hex)")->required();
  qf_divide->add_option("--method", div_method, "formula | oracle")->check(CLI::IsMember({"formula", "oracle"}));

  // spread
  auto* spread = app.add_subcommand("spread", "spreads")->require_subcommand(1)->fallthrough();
  FamilyArgs spread_args;
  std::string dump_path;
  auto* spread_verify = spread->add_subcommand("verify", "build and verify the spread")->fallthrough();
  add_family_options(spread_verify, spread_args);
  spread_verify->add_option("--dump", dump_path, "write components to FILE");

  // poly
  auto* poly = app.add_subcommand("poly", "polynomial inverses")->require_subcommand(1)->fallthrough();
  unsigned dickson_m = 0;
  std::uint64_t dickson_k = 0;
  auto* dickson = poly->add_subcommand("dickson-inv", "inverse Dickson exponent")->fallthrough();
  dickson->add_option("--m", dickson_m, "extension degree m")->required();
  dickson->add_option("--k", dickson_k, "Dickson index k")->required();
  unsigned lin_m = 0;
  std::string lin_coeffs;
  auto* linear = poly->add_subcommand("invert-linearized", "invert a linearized polynomial")->fallthrough();
  linear->add_option("--m", lin_m, "extension degree m")->required();
  linear->add_option("--coeffs", lin_coeffs, "c_0,...,c_{m-1} as hex")->required();

  // bent
  auto* bent = app.add_subcommand("bent", "bent functions")->require_subcommand(1)->fallthrough();
  FamilyArgs build_args;
  std::string build_g, build_out;
  bool build_plus = false, build_no_certify = false;
  auto* build = bent->add_subcommand("build", "construct a PS- (or PS+) bent function")->fallthrough();
  add_family_options(build, build_args);
  build->add_option("--g", build_g, "support:HEX,HEX,... | random:SEED")->required();
  build->add_option("--out", build_out, "truth table output file")->required();
  build->add_flag("--plus", build_plus, "write the complement (PS+)");
  build->add_flag("--no-certify", build_no_certify, "skip the Walsh spectrum certification");

  std::string verify_tt, anf_tt, spectrum_tt;
  bool spectrum_summary_flag = false;
  auto* bverify = bent->add_subcommand("verify", "certify a truth table as bent")->fallthrough();
  bverify->add_option("--tt", verify_tt, "truth table file")->required();
  auto* banf = bent->add_subcommand("anf", "algebraic normal form")->fallthrough();
  banf->add_option("--tt", anf_tt, "truth table file")->required();
  auto* bspec = bent->add_subcommand("spectrum", "Walsh spectrum")->fallthrough();
  bspec->add_option("--tt", spectrum_tt, "truth table file")->required();
  bspec->add_flag("--summary", spectrum_summary_flag, "print value multiplicities only");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("psbent");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help("", CLI::AppFormatMode::Normal);
    return kInvalid;
  }

  try {
    if (qf_verify->parsed()) return run_qf_verify(globals, qf_verify_args, out);
    if (qf_divide->parsed()) return run_qf_divide(globals, qf_divide_args, div_x, div_y, div_method, out);
    if (spread_verify->parsed()) return run_spread_verify(globals, spread_args, dump_path, out);
    if (dickson->parsed()) return run_dickson_inverse(globals, dickson_m, dickson_k, out);
    if (linear->parsed()) return run_invert_linearized(globals, lin_m, lin_coeffs, out);
    if (build->parsed()) {
      return run_bent_build(globals, build_args, build_g, build_out, build_plus, build_no_certify, out, err);
    }
    if (bverify->parsed()) return run_bent_verify(globals, verify_tt, out);
    if (banf->parsed()) return run_bent_anf(anf_tt, out);
    if (bspec->parsed()) return run_bent_spectrum(spectrum_tt, spectrum_summary_flag, out);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  err << app.help();
  return kInvalid;
}

}  // namespace psbent::cli
