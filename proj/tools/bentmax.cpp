// bentmax: exhaustive verification runs over small binary fields with
// machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage or
// configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "bentmax/bentcomp.hpp"
#include "bentmax/boolfun.hpp"
#include "bentmax/charsums.hpp"
#include "bentmax/field.hpp"
#include "bentmax/kloosterman.hpp"
#include "bentmax/parallel.hpp"
#include "bentmax/weights.hpp"

using json = nlohmann::ordered_json;
using namespace bentmax;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kSchema = 1;

struct RunConfig {
  int n = 0;
  std::string modulus_hex;
  int threads = 0;  // 0: BENTMAX_THREADS env, then hardware
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool coset_reduce = false;
  bool expect_counterexample = false;
  bool allow_large = false;
};

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%" PRIx64, v);
  return buf;
}

std::uint32_t parse_hex(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos, 16);
  if (pos != s.size()) throw std::invalid_argument("bad hex value: " + s);
  return static_cast<std::uint32_t>(v);
}

Field make_field(const RunConfig& cfg) {
  if (cfg.modulus_hex.empty()) return Field(cfg.n);
  return Field(cfg.n, parse_hex(cfg.modulus_hex));
}

int resolve_threads(const RunConfig& cfg) {
  return cfg.threads > 0 ? cfg.threads : default_thread_count();
}

json report_header(const std::string& command, const Field& field, const RunConfig& cfg) {
  json j;
  j["version"] = kVersion;
  j["schema"] = kSchema;
  j["command"] = command;
  j["n"] = field.degree();
  j["modulus_hex"] = hex(field.modulus());
  j["generator_hex"] = hex(field.generator());
  j["seed"] = cfg.seed;
  return j;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ';';
      s += csv_cell(e);
    }
    return s;
  }
  return v.dump();
}

std::string to_csv(const json& report) {
  std::string out;
  if (!report.contains("rows") || report["rows"].empty()) return out;
  const auto& rows = report["rows"];
  bool first = true;
  for (const auto& [key, value] : rows[0].items()) {
    (void)value;
    if (!first) out += ',';
    out += key;
    first = false;
  }
  out += '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      if (!first) out += ',';
      out += csv_cell(value);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void emit(const json& report, const RunConfig& cfg) {
  const std::string text = cfg.format == "csv" ? to_csv(report) : report.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
  out << text;
}

// ---------------------------------------------------------------------------

bool cmd_field_info(const RunConfig& cfg) {
  const Field field = make_field(cfg);
  json report = report_header("field-info", field, cfg);
  const auto cosets = cyclotomic_cosets(field.degree());
  json rows = json::array();
  for (const auto& c : cosets) {
    json row;
    row["leader"] = c.leader;
    row["size"] = c.members.size();
    rows.push_back(std::move(row));
  }
  report["rows"] = std::move(rows);
  report["summary"] = {{"coset_count", cosets.size()},
                       {"generator_order", field.order()},
                       {"x_is_generator", field.generator() == 2}};
  report["pass"] = true;
  emit(report, cfg);
  return true;
}

bool cmd_bent_check(const RunConfig& cfg, const std::string& alpha_hex, std::int64_t d) {
  if (cfg.n % 2 != 0) throw std::invalid_argument("bent-check: n must be even");
  const Field field = make_field(cfg);
  const Elem alpha = parse_hex(alpha_hex);
  if (alpha >= field.size()) throw std::invalid_argument("alpha outside the field");
  const BoolFun f = monomial(field, alpha, d);
  const WalshSpectrum w = walsh(field, f);
  const bool bent = w.is_bent();

  std::int64_t wmin = w.values[0], wmax = w.values[0];
  for (std::int64_t v : w.values) {
    wmin = std::min(wmin, v);
    wmax = std::max(wmax, v);
  }

  json report = report_header("bent-check", field, cfg);
  json row;
  row["n"] = field.degree();
  row["modulus_hex"] = hex(field.modulus());
  row["alpha_hex"] = hex(alpha);
  row["d"] = d;
  row["is_bent"] = bent;
  row["truth_table_hex"] = to_hex(f);
  row["spectrum_min"] = wmin;
  row["spectrum_max"] = wmax;
  if (bent) row["dual_hex"] = to_hex(dual(field, f));
  report["rows"] = json::array({row});
  report["pass"] = bent;
  emit(report, cfg);
  return bent;
}

bool cmd_exponent_profile(const RunConfig& cfg, std::int64_t d) {
  const Field field = make_field(cfg);
  const ExponentProfile p = exponent_profile(d, field.degree());
  json report = report_header("exponent-profile", field, cfg);
  json row;
  row["n"] = p.n;
  row["d"] = p.d;
  row["min_v"] = p.min_v;
  row["j_set"] = p.j_set;
  row["all_jd_zero"] = p.all_jd_zero;
  row["divisible_2k1"] = p.divisible_2k1;
  row["s_value"] = p.s_value;
  row["s_coprime"] = p.s_coprime;
  report["rows"] = json::array({row});
  report["pass"] = true;
  emit(report, cfg);
  return true;
}

json report_row(const BentComponentReport& r) {
  json row;
  row["n"] = r.n;
  row["modulus_hex"] = hex(r.modulus);
  if (r.kind == VectorialFun::Kind::power)
    row["d"] = r.param;
  else
    row["binomial_i"] = r.param;
  row["s_f_size"] = r.s_f.size();
  row["bent_count"] = r.bent_count;
  row["is_maximal"] = r.is_maximal;
  row["is_linear"] = r.is_linear;
  row["is_subfield_k"] = r.is_subfield_k;
  return row;
}

bool cmd_scan_open_problem(const RunConfig& cfg) {
  const Field field = make_field(cfg);
  const int threads = resolve_threads(cfg);
  const auto maximal = open_problem_scan(field, threads, cfg.coset_reduce);

  const int k = field.degree() / 2;
  const std::uint32_t ord = field.order();
  std::vector<std::uint32_t> expected;
  {
    const std::uint32_t base = (std::uint32_t{1} << k) + 1;
    std::uint32_t v = base;
    do {
      expected.push_back(v);
      v = static_cast<std::uint32_t>((std::uint64_t{v} * 2) % ord);
    } while (v != base);
    std::sort(expected.begin(), expected.end());
  }

  bool divisible = true;
  json rows = json::array();
  for (std::uint32_t d : maximal) {
    if (d % ((std::uint32_t{1} << k) + 1) != 0) divisible = false;
    rows.push_back(report_row(bent_components(field, power_map(field, d), threads)));
  }
  const bool pass = maximal == expected && divisible;

  json report = report_header("scan-open-problem", field, cfg);
  report["params"] = {{"coset_reduce", cfg.coset_reduce}};
  report["rows"] = std::move(rows);
  report["summary"] = {{"maximal_set", maximal},
                       {"expected_coset", expected},
                       {"divisibility_2k1", divisible}};
  report["pass"] = pass;
  emit(report, cfg);
  return pass;
}

bool cmd_kloosterman_scan(const RunConfig& cfg, int k) {
  if (k > 14 && !cfg.allow_large)
    throw std::invalid_argument("kloosterman-scan: k > 14 needs --allow-large");
  const Field fk = cfg.modulus_hex.empty() ? Field(k) : Field(k, parse_hex(cfg.modulus_hex));
  const auto rows_in = kloosterman_rows(fk);

  std::vector<Elem> zero_set, violations;
  for (const auto& r : rows_in) {
    if (r.sum != -1) continue;
    zero_set.push_back(r.alpha);
    if (r.trace_bit) violations.push_back(r.alpha);
  }

  json report = report_header("kloosterman-scan", fk, cfg);
  report["params"] = {{"k", k}, {"expect_counterexample", cfg.expect_counterexample}};
  json rows = json::array();
  for (const auto& r : rows_in) {
    json row;
    row["k"] = r.k;
    row["alpha_hex"] = hex(r.alpha);
    row["sum"] = r.sum;
    row["trace_bit"] = r.trace_bit;
    rows.push_back(std::move(row));
  }
  report["rows"] = std::move(rows);
  json zh = json::array(), vh = json::array();
  for (Elem a : zero_set) zh.push_back(hex(a));
  for (Elem a : violations) vh.push_back(hex(a));
  report["summary"] = {{"zero_set", zh}, {"violations", vh}};
  const bool pass =
      cfg.expect_counterexample ? !violations.empty() : violations.empty();
  report["pass"] = pass;
  emit(report, cfg);
  return pass;
}

bool cmd_families_verify(const RunConfig& cfg) {
  const Field field = make_field(cfg);
  json report = report_header("families-verify", field, cfg);
  json rows = json::array();
  json counts;
  bool pass = true;
  for (Family fam : {Family::gold, Family::dillon, Family::kasami, Family::leander,
                     Family::cck}) {
    const auto members = family_enumerate(field, fam);
    std::size_t bent_members = 0;
    for (const auto& m : members) {
      const bool bent = is_bent(field, monomial(field, m.alpha, m.d));
      if (bent) ++bent_members;
      else pass = false;
      json row;
      row["family"] = family_name(fam);
      row["d"] = m.d;
      row["alpha_hex"] = hex(m.alpha);
      row["is_bent"] = bent;
      rows.push_back(std::move(row));
    }
    counts[family_name(fam)] = {{"members", members.size()}, {"bent", bent_members}};
  }
  report["rows"] = std::move(rows);
  report["summary"] = std::move(counts);
  report["pass"] = pass;
  emit(report, cfg);
  return pass;
}

bool cmd_gauss_verify(const RunConfig& cfg) {
  const Field field = make_field(cfg);
  const GaussTable table = gauss_table(field);
  json rows = json::array();
  bool pass = true;

  for (const auto& c : verify_gauss_invariants(field, table)) {
    json row;
    row["check"] = c.name;
    row["max_err"] = c.max_err;
    row["tolerance"] = c.tol;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
    pass = pass && c.pass;
  }

  {
    double max_err = 0.0;
    for (Elem x = 1; x < field.size(); ++x) {
      const double got = trace_from_gauss(field, table, x);
      const double want = field.trace(x) ? -1.0 : 1.0;
      max_err = std::max(max_err, std::abs(got - want));
    }
    json row;
    row["check"] = "trace-expansion";
    row["max_err"] = max_err;
    row["tolerance"] = 1e-6;
    row["pass"] = max_err <= 1e-6;
    rows.push_back(std::move(row));
    pass = pass && max_err <= 1e-6;
  }

  {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::uint32_t> pick_log(0, field.order() - 1);
    std::uniform_int_distribution<std::uint32_t> pick_d(1, field.order() - 1);
    double max_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const Elem alpha = field.exp(pick_log(rng));
      const std::int64_t d = pick_d(rng);
      const Elem lambda = field.exp(pick_log(rng));
      const WalshSpectrum w = walsh(field, monomial(field, alpha, d));
      const double got = walsh_via_gauss(field, table, alpha, d, lambda);
      max_err = std::max(max_err, std::abs(got - static_cast<double>(w.values[lambda])));
    }
    json row;
    row["check"] = "walsh-expansion";
    row["max_err"] = max_err;
    row["tolerance"] = 1e-4;
    row["pass"] = max_err <= 1e-4;
    rows.push_back(std::move(row));
    pass = pass && max_err <= 1e-4;
  }

  json report = report_header("gauss-verify", field, cfg);
  report["rows"] = std::move(rows);
  report["pass"] = pass;
  emit(report, cfg);
  return pass;
}

bool cmd_carry_check(const RunConfig& cfg, std::uint64_t trials) {
  const int n = cfg.n;
  if (n < 1 || n > Field::max_degree)
    throw std::invalid_argument("carry-check: n out of range [1, 24]");
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, ord - 1);

  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t f = pick(rng), g = pick(rng);
    const CarryTrace ct = add_with_carry(f, g, n);
    const auto probe = probe_carry_seeds(f, g, n);
    int in_range = 0;
    for (int seed = 0; seed < 2; ++seed)
      if (probe.consistent[seed] && probe.h[seed] < ord) ++in_range;
    const bool ok = ct.recurrence_holds() && in_range == 1 &&
                    ct.weight_lhs() == ct.weight_rhs() &&
                    ct.weight_rhs() >= wt_mod(static_cast<std::int64_t>(f + g), n);
    if (!ok) ++failures;
  }

  const Field header_field(n);
  json report = report_header("carry-check", header_field, cfg);
  report["params"] = {{"n", n}, {"trials", trials}};
  report["summary"] = {{"failures", failures}};
  report["pass"] = failures == 0;
  emit(report, cfg);
  return failures == 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--threads", cfg.threads, "worker count (default: BENTMAX_THREADS or hardware)");
  cmd->add_option("--output", cfg.output, "write the report to this path instead of stdout");
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks (recorded in the report)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive bent-function and character-sum verification over F_{2^n}"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto* field_info = app.add_subcommand("field-info", "modulus, generator and cyclotomic cosets");
  field_info->add_option("--n", cfg.n, "field degree")->required();
  field_info->add_option("--modulus", cfg.modulus_hex, "modulus as hex, e.g. 0x13");
  add_common(field_info, cfg);

  std::string alpha_hex = "0x1";
  std::int64_t d = 1;
  auto* bent_check = app.add_subcommand("bent-check", "Walsh-check one monomial Tr(alpha x^d)");
  bent_check->add_option("--n", cfg.n, "field degree")->required();
  bent_check->add_option("--modulus", cfg.modulus_hex, "modulus as hex");
  bent_check->add_option("--alpha", alpha_hex, "coefficient alpha as hex")->required();
  bent_check->add_option("--d", d, "exponent d")->required();
  add_common(bent_check, cfg);

  auto* expo = app.add_subcommand("exponent-profile", "minimum modular weight profile of d");
  expo->add_option("--n", cfg.n, "field degree (even)")->required();
  expo->add_option("--modulus", cfg.modulus_hex, "modulus as hex");
  expo->add_option("--d", d, "exponent d")->required();
  add_common(expo, cfg);

  auto* scan = app.add_subcommand("scan-open-problem",
                                  "find all monomials with the maximal bent-component count");
  scan->add_option("--n", cfg.n, "field degree (even, <= 14)")->required();
  scan->add_option("--modulus", cfg.modulus_hex, "modulus as hex");
  scan->add_flag("--coset-reduce", cfg.coset_reduce,
                 "sweep one exponent per cyclotomic coset");
  add_common(scan, cfg);

  int kk = 0;
  auto* kscan = app.add_subcommand("kloosterman-scan",
                                   "scan the sum = -1 trace condition over F_{2^k}");
  kscan->add_option("--k", kk, "field degree k (<= 14, or <= 20 with --allow-large)")->required();
  kscan->add_option("--modulus", cfg.modulus_hex, "modulus as hex");
  kscan->add_flag("--expect-counterexample", cfg.expect_counterexample,
                  "exit 0 only if violations exist (the k = 2 case)");
  kscan->add_flag("--allow-large", cfg.allow_large, "allow 14 < k <= 20");
  add_common(kscan, cfg);

  auto* fam = app.add_subcommand("families-verify",
                                 "enumerate the five monomial bent families and Walsh-check each");
  fam->add_option("--n", cfg.n, "field degree (even)")->required();
  fam->add_option("--modulus", cfg.modulus_hex, "modulus as hex");
  add_common(fam, cfg);

  auto* gauss = app.add_subcommand("gauss-verify",
                                   "numeric Gauss-sum identities and transform expansions");
  gauss->add_option("--n", cfg.n, "field degree (<= 14)")->required();
  gauss->add_option("--modulus", cfg.modulus_hex, "modulus as hex");
  add_common(gauss, cfg);

  std::uint64_t trials = 100000;
  auto* carry = app.add_subcommand("carry-check",
                                   "randomized add-with-carry recurrence and weight identity");
  carry->add_option("--n", cfg.n, "bit width n (1..24)")->required();
  carry->add_option("--trials", trials, "number of random (f, g) pairs");
  add_common(carry, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    bool pass = false;
    if (field_info->parsed()) pass = cmd_field_info(cfg);
    else if (bent_check->parsed()) pass = cmd_bent_check(cfg, alpha_hex, d);
    else if (expo->parsed()) pass = cmd_exponent_profile(cfg, d);
    else if (scan->parsed()) pass = cmd_scan_open_problem(cfg);
    else if (kscan->parsed()) pass = cmd_kloosterman_scan(cfg, kk);
    else if (fam->parsed()) pass = cmd_families_verify(cfg);
    else if (gauss->parsed()) pass = cmd_gauss_verify(cfg);
    else if (carry->parsed()) pass = cmd_carry_check(cfg, trials);
    return pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
