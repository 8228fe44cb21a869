// Command-line front end. Subcommands wrap the library one-to-one:
//   check      run one detector (or all six) on a literal sequence
//   enumerate  exhaustive totals over all n^n inputs
//   sample     seeded Monte Carlo summary
//   sweep      sample across a set of n with derived per-n seeds
//   fit        least squares a*sqrt(n)*log2(n)+b over exact+sampled means
//   formula    evaluate the closed forms by name
//   table      re-derive a reference table and diff it cell by cell
//   ledger     print the discrepancy ledger
//
// Exit codes: 0 success (for check: repetition-free), 1 repetition found or
// table diff failed, 2 usage/validation error, 3 internal failure.
//
// Output: --format json carries full-precision numbers and all metadata
// needed to reproduce a run; csv uses %.17g so values round-trip; markdown
// renders doubles at 6 decimals for eyeballing against the reference tables.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "repcheck/analytics.hpp"
#include "repcheck/detectors.hpp"
#include "repcheck/exact_oracle.hpp"
#include "repcheck/montecarlo.hpp"
#include "repcheck/reports.hpp"
#include "repcheck/rng.hpp"

using nlohmann::ordered_json;
using namespace repcheck;

namespace {

constexpr const char* kToolVersion = "1.0.0";

// ---- small formatting helpers ------------------------------------------

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_array(const ordered_json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string cell_csv(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt17(v.get<double>());
  if (v.is_array()) return csv_escape(join_array(v, ";"));
  return v.dump();
}

std::string cell_markdown(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt6(v.get<double>());
  if (v.is_array()) return join_array(v, ";");
  return v.dump();
}

// One uniform report shape for all subcommands: flat rows plus run metadata.
struct Report {
  std::string command;
  ordered_json meta = ordered_json::object();
  ordered_json rows = ordered_json::array();
};

void print_json(const Report& r) {
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["command"] = r.command;
  doc["meta"] = r.meta;
  doc["rows"] = r.rows;
  std::cout << doc.dump(2) << "\n";
}

void print_csv(const Report& r) {
  if (r.rows.empty()) return;
  std::string header;
  for (const auto& [key, value] : r.rows.front().items()) {
    (void)value;
    if (!header.empty()) header += ',';
    header += csv_escape(key);
  }
  std::cout << header << "\n";
  for (const auto& row : r.rows) {
    std::string line;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      if (!line.empty()) line += ',';
      line += cell_csv(value);
    }
    std::cout << line << "\n";
  }
}

void print_markdown(const Report& r) {
  for (const auto& [key, value] : r.meta.items()) {
    std::cout << key << ": " << cell_markdown(value) << "\n";
  }
  if (!r.meta.empty()) std::cout << "\n";
  if (r.rows.empty()) return;

  std::vector<std::string> headers;
  for (const auto& [key, value] : r.rows.front().items()) {
    (void)value;
    headers.push_back(key);
  }
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());
  std::vector<std::vector<std::string>> grid;
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    std::size_t i = 0;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      line.push_back(cell_markdown(value));
      widths[i] = std::max(widths[i], line.back().size());
      ++i;
    }
    grid.push_back(std::move(line));
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::cout << "|";
  for (std::size_t i = 0; i < headers.size(); ++i)
    std::cout << " " << pad(headers[i], widths[i]) << " |";
  std::cout << "\n|";
  for (std::size_t i = 0; i < headers.size(); ++i)
    std::cout << " " << std::string(widths[i], '-') << " |";
  std::cout << "\n";
  for (const auto& line : grid) {
    std::cout << "|";
    for (std::size_t i = 0; i < line.size(); ++i)
      std::cout << " " << pad(line[i], widths[i]) << " |";
    std::cout << "\n";
  }
}

void print_report(const Report& r, const std::string& format) {
  if (format == "json") {
    print_json(r);
  } else if (format == "csv") {
    print_csv(r);
  } else {
    print_markdown(r);
  }
}

// ---- argument parsing helpers ------------------------------------------

std::vector<std::int32_t> parse_sequence(const std::string& text) {
  std::vector<std::int32_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(static_cast<std::int32_t>(v));
    } catch (const std::exception&) {
      throw InvalidInputError("cannot parse sequence element '" + token +
                              "' in --seq " + text);
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return values;
}

// "5" -> {5}; "1..20" -> {1,...,20}; "2,4,8" -> {2,4,8}.
std::vector<std::int64_t> parse_n_list(const std::string& text) {
  auto parse_int = [&](const std::string& token) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
      throw InvalidInputError("cannot parse n value '" + token + "' in --n " + text);
    }
  };
  std::vector<std::int64_t> ns;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    const std::size_t dots = token.find("..");
    if (dots != std::string::npos) {
      const std::int64_t lo = parse_int(token.substr(0, dots));
      const std::int64_t hi = parse_int(token.substr(dots + 2));
      if (lo > hi) {
        throw InvalidInputError("empty range " + token + " in --n " + text);
      }
      for (std::int64_t n = lo; n <= hi; ++n) ns.push_back(n);
    } else {
      ns.push_back(parse_int(token));
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (ns.empty()) throw InvalidInputError("--n parsed to an empty list");
  return ns;
}

Algorithm parse_algorithm(const std::string& name) {
  const auto a = algorithm_from_string(name);
  if (!a) {
    throw InvalidInputError("unknown algorithm '" + name +
                            "'; expected linear, backward, forward, tree, garbage "
                            "or bucket");
  }
  return *a;
}

GarbagePolicy make_policy(const std::string& fill, std::int64_t constant,
                          std::uint64_t fill_seed) {
  GarbagePolicy p;
  if (fill == "zeroed") {
    p.fill = GarbageFill::Zeroed;
  } else if (fill == "constant") {
    p.fill = GarbageFill::Constant;
  } else {
    p.fill = GarbageFill::SeededRandom;
  }
  p.constant = constant;
  p.seed = fill_seed;
  return p;
}

const char* mode_name(ComparisonMode m) {
  switch (m) {
    case ComparisonMode::Exact6dp: return "exact6dp";
    case ComparisonMode::Statistical: return "statistical";
    case ComparisonMode::Diagnostic: return "diagnostic";
  }
  return "?";
}

const char* status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Pass: return "pass";
    case CellStatus::Fail: return "fail";
    case CellStatus::Skipped: return "skipped";
    case CellStatus::Info: return "info";
  }
  return "?";
}

ordered_json sample_row(const SampleSummary& s) {
  ordered_json row;
  row["n"] = s.n;
  row["algorithm"] = to_string(s.algorithm);
  row["sample_count"] = s.sample_count;
  row["seed"] = s.seed;
  row["good_count"] = s.good_count;
  row["mean_comparisons"] = s.mean_comparisons;
  row["mean_assignments"] = s.mean_assignments;
  row["comparison_variance"] = s.comparison_variance;
  row["std_error"] = s.std_error;
  row["generator_version"] = s.generator_version;
  row["workers"] = s.workers;
  return row;
}

// ---- subcommand bodies ---------------------------------------------------

int cmd_check(const std::string& alg, const std::string& seq_text,
              const GarbagePolicy& policy, const std::string& format) {
  const Sequence seq(parse_sequence(seq_text));
  std::vector<Algorithm> algs;
  if (alg == "all") {
    algs.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
  } else {
    algs.push_back(parse_algorithm(alg));
  }

  Report report;
  report.command = "check";
  report.meta["n"] = seq.n();
  bool repetition = false;
  for (Algorithm a : algs) {
    BucketTrace trace;
    const RunMetrics m = (a == Algorithm::Bucket) ? run_bucket(seq, &trace)
                                                  : run_algorithm(a, seq, policy);
    repetition = repetition || !m.good;
    ordered_json row;
    row["algorithm"] = to_string(a);
    row["good"] = m.good;
    row["comparisons"] = m.comparisons;
    row["assignments"] = m.assignments;
    if (m.first_repeat_position) {
      row["first_repeat_position"] = *m.first_repeat_position;
    } else {
      row["first_repeat_position"] = nullptr;
    }
    if (algs.size() == 1 && a == Algorithm::Bucket) {
      row["row_count"] = trace.row_count;
      row["occupancy"] = trace.occupancy;
      row["last_row_comparisons"] = trace.last_row_comparisons;
    }
    report.rows.push_back(std::move(row));
  }
  print_report(report, format);
  return repetition ? 1 : 0;
}

int cmd_enumerate(std::int64_t n, const std::string& alg, int workers,
                  std::optional<int> cap, const GarbagePolicy& policy,
                  const std::string& format) {
  const Algorithm a = parse_algorithm(alg);
  const ExactSummary s = enumerate_all(n, a, policy, workers, cap);

  Report report;
  report.command = "enumerate";
  report.meta["workers"] = workers;
  report.meta["cap"] = cap ? *cap : default_enumeration_cap();
  ordered_json row;
  row["n"] = s.n;
  row["algorithm"] = to_string(s.algorithm);
  row["total_inputs"] = s.total_inputs;
  row["good_count"] = s.good_count;
  row["comparison_sum"] = s.comparison_sum;
  row["assignment_sum"] = s.assignment_sum;
  row["expected_comparisons"] = s.expected_comparisons();
  row["expected_assignments"] = s.expected_assignments();
  // Exact decimal renderings straight from the integer sums, immune to
  // double rounding.
  row["expected_comparisons_exact"] = exact_decimal(s.comparison_sum, s.total_inputs);
  row["expected_assignments_exact"] = exact_decimal(s.assignment_sum, s.total_inputs);
  report.rows.push_back(std::move(row));
  print_report(report, format);
  return 0;
}

int cmd_sample(std::int64_t n, const std::string& alg, std::uint64_t samples,
               std::uint64_t seed, int workers, const GarbagePolicy& policy,
               const std::string& format) {
  const SampleSummary s = sample(n, parse_algorithm(alg), samples, seed, policy, workers);
  Report report;
  report.command = "sample";
  report.rows.push_back(sample_row(s));
  print_report(report, format);
  return 0;
}

int cmd_sweep(const std::string& n_list, const std::string& alg, std::uint64_t samples,
              std::uint64_t seed, int workers, const GarbagePolicy& policy,
              const std::string& format) {
  const auto ns = parse_n_list(n_list);
  const auto summaries = sweep(ns, parse_algorithm(alg), samples, seed, policy, workers);
  Report report;
  report.command = "sweep";
  report.meta["base_seed"] = seed;
  report.meta["generator_version"] = kGeneratorVersion;
  for (const auto& s : summaries) report.rows.push_back(sample_row(s));
  print_report(report, format);
  return 0;
}

int cmd_fit(const std::string& n_list, const std::string& alg, std::uint64_t samples,
            std::uint64_t seed, int workers, int max_n_exact,
            const std::string& format) {
  const Algorithm a = parse_algorithm(alg);
  const auto ns = parse_n_list(n_list);

  std::vector<FitPoint> points;
  ordered_json point_rows = ordered_json::array();
  for (const std::int64_t n : ns) {
    double mean = 0.0;
    const char* source = nullptr;
    if (n <= std::min(max_n_exact, kEnumerationHardMax)) {
      mean = enumerate_all(n, a, {}, workers, max_n_exact).expected_comparisons();
      source = "exact";
    } else {
      mean = sample(n, a, samples, sweep_seed(seed, n), {}, workers).mean_comparisons;
      source = "sampled";
    }
    points.push_back({n, mean});
    ordered_json p;
    p["n"] = n;
    p["mean_comparisons"] = mean;
    p["source"] = source;
    point_rows.push_back(std::move(p));
  }
  const FitResult fit = fit_sqrtnlogn(points);

  Report report;
  report.command = "fit";
  report.meta["algorithm"] = to_string(a);
  report.meta["model"] = "mean = a*sqrt(n)*log2(n) + b";
  report.meta["samples"] = samples;
  report.meta["base_seed"] = seed;
  report.meta["max_n_exact"] = max_n_exact;
  report.meta["workers"] = workers;
  report.meta["generator_version"] = kGeneratorVersion;
  report.meta["points"] = point_rows;
  ordered_json row;
  row["a"] = fit.a;
  row["b"] = fit.b;
  row["residual_rms"] = fit.residual_rms;
  row["point_count"] = points.size();
  report.rows.push_back(std::move(row));
  print_report(report, format);
  return 0;
}

int cmd_formula(const std::string& name, const std::string& n_list,
                const std::string& format) {
  const auto ns = parse_n_list(n_list);
  std::vector<std::string> names;
  if (name == "all") {
    names = formula_names();
  } else {
    names.push_back(name);
  }
  Report report;
  report.command = "formula";
  for (const auto& f : names) {
    for (const std::int64_t n : ns) {
      ordered_json row;
      row["formula"] = f;
      row["n"] = n;
      row["value"] = evaluate_formula(f, n);  // throws on unknown names
      report.rows.push_back(std::move(row));
    }
  }
  print_report(report, format);
  return 0;
}

int cmd_table(int table_number, const ReproductionBudget& budget,
              const std::string& format) {
  const TableDiff diff = reproduce(table_number, budget);
  const GoldenTable& golden = golden_table(table_number);

  Report report;
  report.command = "table";
  report.meta["table"] = golden.id;
  report.meta["title"] = golden.title;
  report.meta["pass"] = diff.pass;
  report.meta["max_n_exact"] = budget.max_n_exact;
  report.meta["sample_count"] = budget.sample_count;
  report.meta["seed"] = budget.seed;
  report.meta["workers"] = budget.workers;
  for (const auto& c : diff.cells) {
    ordered_json row;
    row["n"] = c.row_n;
    row["column"] = c.column;
    row["mode"] = mode_name(c.mode);
    row["status"] = status_name(c.status);
    row["expected"] = c.expected;
    if (c.status == CellStatus::Skipped) {
      row["actual"] = nullptr;
    } else {
      row["actual"] = c.actual;
    }
    row["note"] = c.note;
    report.rows.push_back(std::move(row));
  }
  print_report(report, format);
  return diff.pass ? 0 : 1;
}

int cmd_ledger(const std::string& format) {
  Report report;
  report.command = "ledger";
  for (const auto& e : discrepancy_ledger()) {
    ordered_json row;
    row["id"] = e.id;
    row["location"] = e.location;
    row["issue"] = e.issue;
    row["resolution"] = e.resolution;
    report.rows.push_back(std::move(row));
  }
  print_report(report, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repetition detectors over {1..n}: exact counting, exhaustive "
               "enumeration, seeded sampling, closed forms, reference-table "
               "reproduction"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand

  std::string format = "markdown";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();

  // Garbage-fill flags, shared by the subcommands that run detectors.
  std::string fill = "zeroed";
  std::int64_t fill_constant = 0;
  std::uint64_t fill_seed = 0;
  auto add_fill_flags = [&](CLI::App* cmd) {
    cmd->add_option("--fill", fill, "garbage working-vector pre-fill")
        ->check(CLI::IsMember({"zeroed", "constant", "random"}));
    cmd->add_option("--constant", fill_constant, "cell value for --fill constant");
    cmd->add_option("--fill-seed", fill_seed, "stream seed for --fill random");
  };

  std::string alg = "all";
  std::string seq_text;
  auto* check = app.add_subcommand("check", "run detectors on one sequence");
  check->add_option("--alg", alg, "algorithm name, or 'all'");
  check->add_option("--seq", seq_text, "comma-separated values, e.g. 3,1,2")->required();
  add_fill_flags(check);

  std::int64_t n = 0;
  int workers = 1;
  int max_n_exact = -1;  // -1 means "use the default/env cap"
  std::string enum_alg;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive totals over all n^n inputs");
  enumerate->add_option("--n", n, "sequence length / alphabet size")->required();
  enumerate->add_option("--alg", enum_alg, "algorithm name")->required();
  enumerate->add_option("--workers", workers, "parallel shards (never changes results)");
  enumerate->add_option("--max-n-exact", max_n_exact, "enumeration cap override");
  add_fill_flags(enumerate);

  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string sample_alg;
  auto* sample_cmd = app.add_subcommand("sample", "seeded Monte Carlo summary");
  sample_cmd->add_option("--n", n, "sequence length / alphabet size")->required();
  sample_cmd->add_option("--alg", sample_alg, "algorithm name")->required();
  sample_cmd->add_option("--samples", samples, "sample count")->capture_default_str();
  sample_cmd->add_option("--seed", seed, "base seed")->capture_default_str();
  sample_cmd->add_option("--workers", workers, "parallel shards (never changes results)");
  add_fill_flags(sample_cmd);

  std::string n_list;
  std::string sweep_alg;
  auto* sweep_cmd = app.add_subcommand("sweep", "sample across several n");
  sweep_cmd->add_option("--n", n_list, "n list: '1..20', '5', or '2,4,8'")->required();
  sweep_cmd->add_option("--alg", sweep_alg, "algorithm name")->required();
  sweep_cmd->add_option("--samples", samples, "sample count per n")->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "base seed (per-n seeds derived)")
      ->capture_default_str();
  sweep_cmd->add_option("--workers", workers, "parallel shards");
  add_fill_flags(sweep_cmd);

  std::string fit_alg;
  std::string fit_n_list = "1..20";
  int fit_max_n_exact = 8;
  auto* fit_cmd = app.add_subcommand(
      "fit", "least squares mean = a*sqrt(n)*log2(n) + b over exact+sampled means");
  fit_cmd->add_option("--alg", fit_alg, "algorithm name")->required();
  fit_cmd->add_option("--n", fit_n_list, "n list")->capture_default_str();
  fit_cmd->add_option("--samples", samples, "sample count per sampled n")
      ->capture_default_str();
  fit_cmd->add_option("--seed", seed, "base seed")->capture_default_str();
  fit_cmd->add_option("--max-n-exact", fit_max_n_exact,
                      "use exhaustive means up to this n")
      ->capture_default_str();
  fit_cmd->add_option("--workers", workers, "parallel shards");

  std::string formula_name;
  std::string formula_n = "1..10";
  auto* formula_cmd = app.add_subcommand("formula", "evaluate closed forms by name");
  formula_cmd->add_option("--name", formula_name, "formula name, or 'all'")->required();
  formula_cmd->add_option("--n", formula_n, "n list")->capture_default_str();

  int table_id = 0;
  ReproductionBudget budget;
  auto* table_cmd = app.add_subcommand("table", "re-derive one reference table (1..5)");
  table_cmd->add_option("table", table_id, "table number in 1..5")->required();
  table_cmd->add_option("--samples", budget.sample_count, "samples for statistical cells")
      ->capture_default_str();
  table_cmd->add_option("--seed", budget.seed, "base seed for statistical cells")
      ->capture_default_str();
  table_cmd->add_option("--max-n-exact", budget.max_n_exact, "exhaustive ceiling")
      ->capture_default_str();
  table_cmd->add_option("--workers", budget.workers, "parallel shards");

  app.add_subcommand("ledger", "print the discrepancy ledger");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // parse failures are usage errors
  }

  try {
    const GarbagePolicy policy = make_policy(fill, fill_constant, fill_seed);
    if (app.got_subcommand("check")) {
      return cmd_check(alg, seq_text, policy, format);
    }
    if (app.got_subcommand("enumerate")) {
      std::optional<int> cap;
      if (max_n_exact >= 0) cap = max_n_exact;
      return cmd_enumerate(n, enum_alg, workers, cap, policy, format);
    }
    if (app.got_subcommand("sample")) {
      return cmd_sample(n, sample_alg, samples, seed, workers, policy, format);
    }
    if (app.got_subcommand("sweep")) {
      return cmd_sweep(n_list, sweep_alg, samples, seed, workers, policy, format);
    }
    if (app.got_subcommand("fit")) {
      return cmd_fit(fit_n_list, fit_alg, samples, seed, workers, fit_max_n_exact,
                     format);
    }
    if (app.got_subcommand("formula")) {
      return cmd_formula(formula_name, formula_n, format);
    }
    if (app.got_subcommand("table")) {
      return cmd_table(table_id, budget, format);
    }
    return cmd_ledger(format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
