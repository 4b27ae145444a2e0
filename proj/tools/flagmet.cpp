// flagmet: solve, sweep, tabulate and certify invariant Einstein metrics on
// SO(2n)/U(p)xU(n-p).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flagmet/einstein.hpp"
#include "flagmet/error.hpp"
#include "flagmet/parallel.hpp"
#include "flagmet/reports.hpp"

namespace {

using flagmet::Error;
using flagmet::ErrorKind;
using flagmet::FlagParams;
using flagmet::Interval;
using flagmet::Rational;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "flag-einstein/1";
constexpr unsigned kOutputBits = 64;

enum Exit { kOk = 0, kUsage = 2, kFailed = 3 };

// Serialization helpers ---------------------------------------------------------

std::string frac(const Rational& v) { return flagmet::to_fraction_string(v); }

std::string approx(const Rational& v) { return flagmet::round_half_even(v, 4); }
std::string approx(const Interval& v) { return approx(v.midpoint()); }

// Upper bound on a nonnegative quantity with a short denominator.
std::string bound_up(const Rational& v) {
  Interval c = Interval(Rational(0), v).coarsened(kOutputBits);
  return frac(c.hi());
}

json interval_json(const Interval& v) {
  if (v.is_exact()) return frac(v.lo());
  Interval c = v.coarsened(kOutputBits);
  return json::array({frac(c.lo()), frac(c.hi())});
}

json interval_json(const flagmet::RationalInterval& v) { return interval_json(Interval(v.lo, v.hi)); }

// Two CSV fields per interval; exact values repeat.
std::pair<std::string, std::string> interval_fields(const Interval& v) {
  if (v.is_exact()) return {frac(v.lo()), frac(v.lo())};
  Interval c = v.coarsened(kOutputBits);
  return {frac(c.lo()), frac(c.hi())};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\r\n";
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

Rational parse_width(const std::string& text) {
  Rational w = flagmet::parse_rational(text);
  if (w <= 0) throw Error(ErrorKind::InvalidParams, "--width must be positive");
  return w;
}

// solve ---------------------------------------------------------------------------

json metric_json(const flagmet::Metric& g) {
  json m = json::array();
  for (const auto& c : g.x()) m.push_back(interval_json(c));
  return m;
}

json metric_approx(const flagmet::Metric& g) {
  json m = json::array();
  for (const auto& c : g.x()) m.push_back(approx(c));
  return m;
}

json solution_set_json(const flagmet::SolutionSet& s) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "solve";
  j["params"] = {{"n", s.params.n()}, {"p", s.params.p()}};
  j["width"] = frac(s.width);
  json kahler = json::array();
  for (const auto& k : s.kahler) {
    kahler.push_back({{"label", k.label},
                      {"metric", metric_json(k.metric)},
                      {"approx", metric_approx(k.metric)},
                      {"einsteinConstant", frac(k.einstein_constant)},
                      {"einsteinConstantApprox", approx(k.einstein_constant)},
                      {"scaleInvariant", interval_json(k.scale_invariant)},
                      {"scaleInvariantApprox", approx(k.scale_invariant)}});
  }
  j["kahler"] = kahler;
  json non_kahler = json::array();
  for (std::size_t i = 0; i < s.non_kahler.size(); ++i) {
    const auto& k = s.non_kahler[i];
    non_kahler.push_back({{"index", i + 1},
                          {"metric", metric_json(k.metric)},
                          {"approx", metric_approx(k.metric)},
                          {"einsteinConstant", interval_json(k.einstein_constant)},
                          {"einsteinConstantApprox", approx(k.einstein_constant)},
                          {"scaleInvariant", interval_json(k.scale_invariant)},
                          {"scaleInvariantApprox", approx(k.scale_invariant)},
                          {"ricciSpread", bound_up(k.spread)}});
  }
  j["nonKahler"] = non_kahler;
  j["counts"] = {{"kahler", s.kahler.size()},
                 {"nonKahler", s.non_kahler.size()},
                 {"expectedNonKahler", flagmet::expected_non_kahler_count(s.params)},
                 {"exceptional", flagmet::is_exceptional(s.params)}};
  j["residualBound"] = bound_up(s.residual_bound);
  json branches = json::array();
  for (const auto& b : s.case_b.linear_branches) {
    json sols = json::array();
    for (const auto& so : b.solutions) {
      json m = json::array();
      for (const auto& c : so.metric) m.push_back(frac(c));
      sols.push_back({{"metric", m}, {"matches", so.matches}});
    }
    branches.push_back({{"fixed", b.fixed_var}, {"value", frac(b.value)}, {"solutions", sols}});
  }
  json swaps = json::array();
  for (const auto& [a, b] : s.swap_pairs) swaps.push_back(json::array({a + 1, b + 1}));
  j["certificates"] = {{"caseB",
                        {{"resultantSignQ", s.case_b.resultant_sign_Q},
                         {"resultantSignR", s.case_b.resultant_sign_R},
                         {"quarticT", flagmet::to_string(s.case_b.quartic_T)},
                         {"quarticS", flagmet::to_string(s.case_b.quartic_S)},
                         {"positiveRootsT", s.case_b.positive_root_count_T},
                         {"positiveRootsS", s.case_b.positive_root_count_S},
                         {"sIsDualOfT", s.case_b.s_is_dual_of_t},
                         {"branches", branches}}},
                       {"polynomialSystem", s.syst5_ok},
                       {"duality", s.duality_ok},
                       {"swapPairs", swaps}};
  return j;
}

void solution_set_csv(const flagmet::SolutionSet& s, std::ostream& out) {
  csv_row(out, {"n", "p", "kind", "label", "x1_lo", "x1_hi", "x2_lo", "x2_hi", "x3_lo", "x3_hi", "x4_lo", "x4_hi",
                "x1_approx", "x2_approx", "x3_approx", "x4_approx", "einstein_lo", "einstein_hi", "einstein_approx",
                "h_lo", "h_hi", "h_approx"});
  auto emit = [&](const std::string& kind, const std::string& label, const flagmet::Metric& g, const Interval& e,
                  const Interval& h) {
    std::vector<std::string> f = {std::to_string(s.params.n()), std::to_string(s.params.p()), kind, label};
    for (const auto& c : g.x()) {
      auto [lo, hi] = interval_fields(c);
      f.push_back(lo);
      f.push_back(hi);
    }
    for (const auto& c : g.x()) f.push_back(approx(c));
    auto [elo, ehi] = interval_fields(e);
    f.insert(f.end(), {elo, ehi, approx(e)});
    auto [hlo, hhi] = interval_fields(h);
    f.insert(f.end(), {hlo, hhi, approx(h)});
    csv_row(out, f);
  };
  for (const auto& k : s.kahler) emit("kahler", k.label, k.metric, Interval(k.einstein_constant), k.scale_invariant);
  for (std::size_t i = 0; i < s.non_kahler.size(); ++i) {
    const auto& k = s.non_kahler[i];
    emit("nonKahler", std::to_string(i + 1), k.metric, k.einstein_constant, k.scale_invariant);
  }
}

int cmd_solve(long n, long p, const std::string& width, const std::string& tolerance, const std::string& format) {
  FlagParams fp(n, p);
  const Rational tol = flagmet::parse_rational(tolerance);
  if (tol <= 0) throw Error(ErrorKind::InvalidParams, "--tolerance must be positive");
  flagmet::SolutionSet s = flagmet::classify(fp, parse_width(width));
  if (format == "csv") {
    solution_set_csv(s, std::cout);
  } else {
    print_json(solution_set_json(s));
  }
  bool ok = static_cast<int>(s.non_kahler.size()) == flagmet::expected_non_kahler_count(fp) && s.syst5_ok &&
            s.duality_ok && s.residual_bound < tol;
  if (!ok) std::cerr << "flagmet: certificate checks failed for (" << n << ", " << p << ")\n";
  return ok ? kOk : kFailed;
}

// sweep / verify -------------------------------------------------------------------

json sweep_rows_json(const std::vector<flagmet::SweepRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    FlagParams fp(r.n, r.p);
    out.push_back({{"n", r.n},
                   {"p", r.p},
                   {"kahler", r.kahler},
                   {"nonKahler", r.non_kahler},
                   {"expectedNonKahler", flagmet::expected_non_kahler_count(fp)},
                   {"exceptional", r.exceptional},
                   {"matches", r.matches},
                   {"error", r.error}});
  }
  return out;
}

int report_mismatches(const flagmet::MainTheoremReport& rep) {
  for (const auto& row : rep.rows) {
    if (row.matches) continue;
    std::cerr << "flagmet: mismatch at (" << row.n << ", " << row.p << "): " << row.non_kahler
              << " non-Kahler metrics, expected " << flagmet::expected_non_kahler_count(FlagParams(row.n, row.p))
              << (row.error.empty() ? "" : " (" + row.error + ")") << "\n";
  }
  return rep.passed() ? kOk : kFailed;
}

int cmd_sweep(long n_min, long n_max, int jobs, const std::string& width, const std::string& format,
              const std::string& command) {
  auto rep = flagmet::verify_main_theorem(n_max, jobs, false, n_min, parse_width(width));
  int flagged = 0;
  for (const auto& r : rep.rows) flagged += r.non_kahler == 4 ? 1 : 0;
  if (format == "csv") {
    csv_row(std::cout, {"n", "p", "kahler", "non_kahler", "expected_non_kahler", "exceptional", "matches", "error"});
    for (const auto& r : rep.rows) {
      csv_row(std::cout, {std::to_string(r.n), std::to_string(r.p), std::to_string(r.kahler),
                          std::to_string(r.non_kahler),
                          std::to_string(flagmet::expected_non_kahler_count(FlagParams(r.n, r.p))),
                          yes(r.exceptional), yes(r.matches), r.error});
    }
  } else {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["nMin"] = n_min;
    j["nMax"] = n_max;
    j["width"] = frac(parse_width(width));
    j["rows"] = sweep_rows_json(rep.rows);
    j["fourSolutionPairs"] = flagged;
    j["passed"] = rep.passed();
    print_json(j);
  }
  std::cerr << "flagmet: " << rep.rows.size() << " pairs, " << flagged << " with four non-Kahler metrics, "
            << (rep.passed() ? "all counts as expected" : "MISMATCH") << "\n";
  return report_mismatches(rep);
}

// table ------------------------------------------------------------------------------

int cmd_table(int which, const std::string& width, const std::string& format) {
  if (which != 1 && which != 2) throw Error(ErrorKind::InvalidParams, "table must be 1 or 2");
  auto entries = flagmet::table_entries(parse_width(width));
  if (format == "json") {
    json rows = json::array();
    for (const auto& e : entries) {
      rows.push_back({{"n", e.params.n()},
                      {"p", e.params.p()},
                      {"label", e.label},
                      {"x2", interval_json(e.x2)},
                      {"x4", interval_json(e.x4)},
                      {"x2Approx", approx(e.x2.midpoint())},
                      {"x4Approx", approx(e.x4.midpoint())},
                      {"scaleInvariant", interval_json(e.scale_invariant)},
                      {"scaleInvariantApprox", approx(e.scale_invariant)}});
    }
    json j;
    j["schema"] = kSchema;
    j["command"] = "table";
    j["table"] = which;
    j["rows"] = rows;
    print_json(j);
    return kOk;
  }
  if (format == "csv") {
    csv_row(std::cout, {"n", "p", "label", "x2_lo", "x2_hi", "x4_lo", "x4_hi", "x2_approx", "x4_approx", "h_lo",
                        "h_hi", "h_approx"});
    for (const auto& e : entries) {
      auto [x2lo, x2hi] = interval_fields(Interval(e.x2.lo, e.x2.hi));
      auto [x4lo, x4hi] = interval_fields(Interval(e.x4.lo, e.x4.hi));
      auto [hlo, hhi] = interval_fields(e.scale_invariant);
      csv_row(std::cout, {std::to_string(e.params.n()), std::to_string(e.params.p()), e.label, x2lo, x2hi, x4lo,
                          x4hi, approx(e.x2.midpoint()), approx(e.x4.midpoint()), hlo, hhi,
                          approx(e.scale_invariant)});
    }
    return kOk;
  }
  // Plain text, one line per pair.
  if (which == 1) {
    std::cout << "Non-Kahler Einstein metrics (x1, x2, x3, x4)\n";
  } else {
    std::cout << "Scale invariants H of the non-Kahler Einstein metrics\n";
  }
  for (std::size_t i = 0; i < entries.size(); i += 4) {
    const auto& fp = entries[i].params;
    std::ostringstream line;
    line << "(" << fp.n() << "," << fp.p() << ")";
    for (std::size_t k = i; k < i + 4 && k < entries.size(); ++k) {
      const auto& e = entries[k];
      if (which == 1) {
        line << "  " << e.label << " = (1, " << approx(e.x2.midpoint()) << ", 1, " << approx(e.x4.midpoint()) << ")";
      } else {
        line << "  H(" << e.label << ") = " << approx(e.scale_invariant);
      }
    }
    std::cout << line.str() << "\n";
  }
  return kOk;
}

// certify ------------------------------------------------------------------------------

json printed_json(const flagmet::PrintedPolynomial& p) {
  return {{"name", p.name},
          {"printed", flagmet::to_string(p.printed)},
          {"reproduced", flagmet::to_string(p.reproduced)},
          {"matches", p.matches()}};
}

int certify_M(json& j) {
  auto rep = flagmet::check_M();
  json subs = json::array();
  for (const auto& [var, expr] : rep.certificate.positivity.shifts) subs.push_back(json::array({var, expr}));
  json terminal = json::array();
  for (const auto& c : rep.certificate.positivity.terminal_coefficients) terminal.push_back(c.get_str());
  json coeffs = json::array();
  for (const auto& p : rep.y_coefficients) coeffs.push_back(printed_json(p));
  json shifted = json::array();
  for (const auto& p : rep.shifted) shifted.push_back(printed_json(p));
  j["substitutions"] = subs;
  j["verdict"] = rep.certificate.positivity.verdict;
  j["terminalCoefficients"] = terminal;
  j["coefficients"] = coeffs;
  j["shiftedCoefficients"] = shifted;
  j["atThirteen"] = json::array({printed_json(rep.m2), printed_json(rep.m3_half)});
  j["passed"] = rep.passed();
  for (const auto& p : rep.y_coefficients) std::cerr << "flagmet: " << p.name << " = " << flagmet::to_string(p.reproduced) << "\n";
  return rep.passed() ? kOk : kFailed;
}

int certify_case_B(json& j, long n_max) {
  json rows = json::array();
  bool ok = true;
  for (const auto& fp : flagmet::pairs_in_range(4, n_max)) {
    auto s = flagmet::check_case_B(fp);
    ok = ok && s.passed();
    rows.push_back({{"n", fp.n()},
                    {"p", fp.p()},
                    {"resultantSignQ", s.resultant_sign_Q},
                    {"resultantSignR", s.resultant_sign_R},
                    {"positiveRootsT", s.positive_roots_T},
                    {"positiveRootsS", s.positive_roots_S},
                    {"sIsDualOfT", s.s_is_dual_of_t},
                    {"branchSolutions", s.branch_solutions},
                    {"error", s.error}});
    if (!s.passed()) std::cerr << "flagmet: case B failed for (" << fp.n() << ", " << fp.p() << "): " << s.error << "\n";
  }
  j["nMax"] = n_max;
  j["pairs"] = rows;
  j["passed"] = ok;
  return ok ? kOk : kFailed;
}

int certify_dual_identity(json& j, long n_max) {
  auto rep = flagmet::check_dual_identity(n_max);
  json failures = json::array();
  for (const auto& fp : rep.failures) failures.push_back(json::array({fp.n(), fp.p()}));
  j["nMax"] = n_max;
  j["pairsChecked"] = rep.pairs_checked;
  j["failures"] = failures;
  j["passed"] = rep.passed();
  return rep.passed() ? kOk : kFailed;
}

int certify_half_rank(json& j, long n_max) {
  const long p_max = n_max / 2;
  json rows = json::array();
  bool ok = true;
  for (long p = 2; p <= p_max; ++p) {
    auto rep = flagmet::check_half_rank(p, flagmet::default_width());
    ok = ok && rep.passed;
    json forms = json::array();
    for (const auto& f : rep.forms) {
      forms.push_back({{"family", f.value.family},
                       {"a", frac(f.value.a)},
                       {"b", frac(f.value.b)},
                       {"radicand", frac(f.value.r)},
                       {"approx", approx(f.value.enclosure())},
                       {"exactRoot", f.exact_root},
                       {"distance", bound_up(f.distance)},
                       {"matched", f.matched}});
    }
    rows.push_back({{"p", p},
                    {"positiveRoots", rep.positive_roots},
                    {"familyBExpected", rep.family_b_expected},
                    {"familyBPresent", rep.family_b_present},
                    {"forms", forms},
                    {"passed", rep.passed}});
  }
  j["pMax"] = p_max;
  j["tolerance"] = frac(flagmet::default_width());
  j["rows"] = rows;
  j["passed"] = ok;
  return ok ? kOk : kFailed;
}

int cmd_certify(const std::string& target, long n_max) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "certify";
  j["target"] = target;
  int code = kFailed;
  if (target == "M") {
    code = certify_M(j);
  } else if (target == "caseB") {
    code = certify_case_B(j, n_max);
  } else if (target == "eq7") {
    code = certify_dual_identity(j, n_max);
  } else {
    code = certify_half_rank(j, n_max);
  }
  print_json(j);
  std::cerr << "flagmet: certify " << target << ": " << (code == kOk ? "pass" : "FAIL") << "\n";
  return code;
}

// plotdata -------------------------------------------------------------------------------

int cmd_plotdata(const std::string& poly, long n, long p, const std::string& from, const std::string& to,
                 long samples, int jobs) {
  FlagParams fp(n, p);
  flagmet::IntPolynomial f = poly == "H"   ? flagmet::build_H(fp)
                             : poly == "G" ? flagmet::build_G(fp)
                             : poly == "T" ? flagmet::build_T(fp)
                                           : flagmet::build_S(fp);
  auto data = flagmet::sample_parallel(f, flagmet::parse_rational(from), flagmet::parse_rational(to), samples, jobs);
  csv_row(std::cout, {"x", "value"});
  for (const auto& [x, y] : data)
    csv_row(std::cout, {flagmet::significant_digits(x, 20), flagmet::significant_digits(y, 20)});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verifier for invariant Einstein metrics on SO(2n)/U(p)xU(n-p)"};
  app.require_subcommand(1);

  long n = 0, p = 0, n_min = 4, n_max = 20, samples = 2;
  int jobs = 0, which = 1;
  std::string width = "1/10000000000";
  std::string tolerance = "1/100000000";
  std::string format = "json";
  std::string target, poly, from, to;
  const std::vector<std::string> formats = {"json", "csv"};

  auto* solve = app.add_subcommand("solve", "Classify all Einstein metrics for one (n, p)");
  solve->add_option("--n", n, "n >= 4")->required();
  solve->add_option("--p", p, "2 <= p <= n-2")->required();
  solve->add_option("--width", width, "Root refinement width (rational)");
  solve->add_option("--tolerance", tolerance, "Largest accepted Ricci residual bound (rational)");
  solve->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* sweep = app.add_subcommand("sweep", "Count non-Kahler metrics for every pair in a range of n");
  sweep->add_option("--n-min", n_min, "Smallest n")->check(CLI::Range(4L, 100000L));
  sweep->add_option("--n-max", n_max, "Largest n")->required();
  sweep->add_option("--jobs", jobs, "Worker threads (0 = all)");
  sweep->add_option("--width", width, "Root refinement width (rational)");
  sweep->add_option("--format", format)->check(CLI::IsMember(formats));

  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Reproduce the metric table (1) or the scale-invariant table (2)");
  table->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember(std::vector<int>{1, 2}));
  table->add_option("--width", width, "Root refinement width (rational)");
  table->add_option("--format", table_format)->check(CLI::IsMember(std::vector<std::string>{"text", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Check the non-Kahler counts for all pairs up to --n-max");
  verify->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(4L, 100000L));
  verify->add_option("--jobs", jobs, "Worker threads (0 = all)");
  verify->add_option("--width", width, "Root refinement width (rational)");
  verify->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* certify = app.add_subcommand("certify", "Run one certificate: M, caseB, eq7 or eq400");
  certify->add_option("--target", target)->required()->check(
      CLI::IsMember(std::vector<std::string>{"M", "caseB", "eq7", "eq400"}));
  certify->add_option("--n-max", n_max, "Largest n for caseB / eq7; eq400 uses p <= n-max/2")
      ->check(CLI::Range(4L, 100000L));

  auto* plot = app.add_subcommand("plotdata", "Sample H, G, T or S on a grid as CSV");
  plot->add_option("--poly", poly)->required()->check(CLI::IsMember(std::vector<std::string>{"H", "G", "T", "S"}));
  plot->add_option("--n", n)->required();
  plot->add_option("--p", p)->required();
  plot->add_option("--from", from)->required();
  plot->add_option("--to", to)->required();
  plot->add_option("--samples", samples)->required();
  plot->add_option("--jobs", jobs, "Worker threads (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(n, p, width, tolerance, format);
    if (*sweep) {
      if (n_max < n_min) throw Error(ErrorKind::InvalidParams, "--n-max must be >= --n-min");
      return cmd_sweep(n_min, n_max, jobs, width, format, "sweep");
    }
    if (*table) return cmd_table(which, width, table_format);
    if (*verify) return cmd_sweep(4, n_max, jobs, width, format, "verify");
    if (*certify) return cmd_certify(target, n_max);
    if (*plot) return cmd_plotdata(poly, n, p, from, to, samples, jobs);
  } catch (const Error& e) {
    std::cerr << "flagmet: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidParams ? kUsage : kFailed;
  }
  return kUsage;
}
