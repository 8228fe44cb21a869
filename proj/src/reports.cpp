#include "repcheck/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "repcheck/analytics.hpp"
#include "repcheck/exact_oracle.hpp"
#include "repcheck/montecarlo.hpp"
#include "repcheck/rng.hpp"

namespace repcheck {

double round6(double x) {
  return static_cast<double>(std::llround(x * 1e6)) / 1e6;
}

namespace {

// Equality after rounding half away from zero to 6 decimals. Every compared
// magnitude is far below 2^53 / 1e6, so the scaled llround is exact enough.
bool match6(double expected, double actual) {
  return std::llround(expected * 1e6) == std::llround(actual * 1e6);
}

std::string fmt(double x, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

std::optional<GoldenCorrection> correction_for(const std::string& table_id,
                                               std::int64_t row_n, int column) {
  for (const auto& c : golden_corrections()) {
    if (c.table_id == table_id && c.row_n == row_n && c.column == column) return c;
  }
  return std::nullopt;
}

// An analytic or exhaustively re-derived cell, asserted at 6 decimals. When
// the cell carries a correction, the corrected value is the target and the
// note records the printed one.
CellDiff exact_cell(const GoldenTable& t, const std::vector<double>& row, int column,
                    double actual) {
  CellDiff d;
  d.row_n = std::llround(row[0]);
  d.column = t.columns[static_cast<std::size_t>(column)];
  d.mode = ComparisonMode::Exact6dp;
  d.actual = actual;
  if (auto c = correction_for(t.id, d.row_n, column)) {
    d.expected = c->corrected;
    d.note = "printed " + fmt(c->printed) + " contradicts its own row; asserting " +
             fmt(c->corrected) + " (ledger: " + c->ledger_id + ")";
  } else {
    d.expected = row[static_cast<std::size_t>(column)];
  }
  d.status = match6(d.expected, actual) ? CellStatus::Pass : CellStatus::Fail;
  return d;
}

CellDiff skipped_cell(std::int64_t n, std::string column, ComparisonMode mode,
                      double printed, int cap) {
  CellDiff d;
  d.row_n = n;
  d.column = std::move(column);
  d.mode = mode;
  d.status = CellStatus::Skipped;
  d.expected = printed;
  d.note = "skipped: n above the exhaustive budget (max_n_exact = " +
           std::to_string(cap) + ")";
  return d;
}

// Mean columns of the sampled table: a plain band around the printed value,
// wide enough for two independent 100000-sample means of the same
// distribution to land together.
CellDiff band_cell(const GoldenTable& t, const std::vector<double>& row, int column,
                   double actual, double tolerance, const ReproductionBudget& budget) {
  CellDiff d;
  d.row_n = std::llround(row[0]);
  d.column = t.columns[static_cast<std::size_t>(column)];
  d.mode = ComparisonMode::Statistical;
  d.expected = row[static_cast<std::size_t>(column)];
  d.actual = actual;
  d.status = std::fabs(actual - d.expected) <= tolerance ? CellStatus::Pass
                                                         : CellStatus::Fail;
  d.note = "band +/-" + fmt(tolerance, 2) + " around the printed 100000-sample mean" +
           " (reproduced with " + std::to_string(budget.sample_count) + " samples, seed " +
           std::to_string(budget.seed) + ")";
  return d;
}

TableDiff reproduce_table1(const GoldenTable& t, const ReproductionBudget& budget,
                           int cap) {
  TableDiff diff{t.id, false, {}, budget};
  const double pi = std::numbers::pi;
  for (const auto& row : t.rows) {
    const std::int64_t n = std::llround(row[0]);
    diff.cells.push_back(exact_cell(t, row, 1, c_linear(n)));
    diff.cells.push_back(exact_cell(t, row, 2, std::sqrt(pi * double(n) / 2.0) + 2.0 / 3.0));
    diff.cells.push_back(exact_cell(t, row, 3, factorial_ratio(n)));
    diff.cells.push_back(exact_cell(t, row, 4, kappa(n)));
    diff.cells.push_back(exact_cell(t, row, 5, delta(n)));
    if (n <= cap) {
      auto s = enumerate_all(n, Algorithm::Linear, {}, budget.workers, cap);
      auto d = exact_cell(t, row, 1, s.expected_comparisons());
      d.column += " [exhaustive]";
      d.note = "mean over all n^n inputs";
      diff.cells.push_back(d);
    } else {
      diff.cells.push_back(skipped_cell(n, t.columns[1] + " [exhaustive]",
                                        ComparisonMode::Exact6dp, row[1], cap));
    }
  }
  return diff;
}

TableDiff reproduce_table2(const GoldenTable& t, const ReproductionBudget& budget,
                           int cap) {
  TableDiff diff{t.id, false, {}, budget};
  const double pi = std::numbers::pi;
  for (const auto& row : t.rows) {
    const std::int64_t n = std::llround(row[0]);
    diff.cells.push_back(exact_cell(t, row, 1, c_backward(n)));
    diff.cells.push_back(exact_cell(
        t, row, 2, double(n) - std::sqrt(pi * double(n) / 8.0) + 2.0 / 3.0));
    diff.cells.push_back(
        exact_cell(t, row, 3, factorial_ratio(n) * double(n + 1) / 2.0));
    diff.cells.push_back(exact_cell(t, row, 4, kappa(n)));
    diff.cells.push_back(exact_cell(t, row, 5, alpha(n)));
    if (n <= cap) {
      auto s = enumerate_all(n, Algorithm::Backward, {}, budget.workers, cap);
      auto d = exact_cell(t, row, 1, s.expected_comparisons());
      d.column += " [exhaustive]";
      d.note = "mean over all n^n inputs";
      diff.cells.push_back(d);
    } else {
      diff.cells.push_back(skipped_cell(n, t.columns[1] + " [exhaustive]",
                                        ComparisonMode::Exact6dp, row[1], cap));
    }
  }
  return diff;
}

TableDiff reproduce_table3(const GoldenTable& t, const ReproductionBudget& budget,
                           int cap) {
  TableDiff diff{t.id, false, {}, budget};
  for (const auto& row : t.rows) {
    const std::int64_t n = std::llround(row[0]);
    auto ti = exact_cell(t, row, 1, static_cast<double>(total_inputs(n)));
    ti.note = "integer, computed directly";
    diff.cells.push_back(ti);
    auto gc = exact_cell(t, row, 2, static_cast<double>(good_count(n)));
    gc.note = "integer, computed directly";
    diff.cells.push_back(gc);
    if (n <= cap) {
      auto f = enumerate_all(n, Algorithm::Forward, {}, budget.workers, cap);
      auto b = enumerate_all(n, Algorithm::Backward, {}, budget.workers, cap);
      diff.cells.push_back(exact_cell(t, row, 3, f.expected_comparisons()));
      diff.cells.push_back(exact_cell(t, row, 4, b.expected_comparisons()));
    } else {
      diff.cells.push_back(
          skipped_cell(n, t.columns[3], ComparisonMode::Exact6dp, row[3], cap));
      diff.cells.push_back(
          skipped_cell(n, t.columns[4], ComparisonMode::Exact6dp, row[4], cap));
    }
  }
  return diff;
}

TableDiff reproduce_table4(const GoldenTable& t, const ReproductionBudget& budget) {
  TableDiff diff{t.id, false, {}, budget};
  for (const auto& row : t.rows) {
    const std::int64_t n = std::llround(row[0]);
    auto s = sample(n, Algorithm::Tree, budget.sample_count,
                    sweep_seed(budget.seed, n), {}, budget.workers);

    // The good-input column is a single binomial draw on both sides, so the
    // assertion is against the model N * n!/n^n with a 5-sigma band, not
    // against the printed draw itself.
    const double p = factorial_ratio(n);
    const double count = static_cast<double>(budget.sample_count);
    const double model_mean = count * p;
    const double sigma = std::sqrt(count * p * (1.0 - p));
    CellDiff g;
    g.row_n = n;
    g.column = t.columns[1];
    g.mode = ComparisonMode::Statistical;
    g.expected = row[1];
    g.actual = static_cast<double>(s.good_count);
    g.status = std::fabs(g.actual - model_mean) <= 5.0 * sigma ? CellStatus::Pass
                                                               : CellStatus::Fail;
    g.note = "binomial 5-sigma band around the model mean " + fmt(model_mean, 3) +
             " (sigma " + fmt(sigma, 3) + "); the printed cell is itself one draw";
    diff.cells.push_back(g);

    diff.cells.push_back(band_cell(t, row, 2, s.mean_comparisons, 0.05, budget));
    diff.cells.push_back(band_cell(t, row, 3, s.mean_assignments, 0.02, budget));
  }
  return diff;
}

TableDiff reproduce_table5(const GoldenTable& t, const ReproductionBudget& budget,
                           int cap) {
  TableDiff diff{t.id, false, {}, budget};
  const double pi = std::numbers::pi;
  for (const auto& row : t.rows) {
    const std::int64_t n = std::llround(row[0]);
    const double sqrt_n = std::sqrt(double(n));
    diff.cells.push_back(exact_cell(t, row, 1, e_bucket_occupancy(n)));
    diff.cells.push_back(exact_cell(t, row, 2, std::sqrt(pi / 2.0)));
    diff.cells.push_back(exact_cell(t, row, 3, 1.0 / (3.0 * sqrt_n)));
    diff.cells.push_back(exact_cell(t, row, 4, kappa(n) / sqrt_n));
    diff.cells.push_back(exact_cell(t, row, 5, mu(n)));

    // The closed form models the large-n regime; at small n exhaustive
    // enumeration gives a visibly different number (ledger:
    // bucket-occupancy-model-small-n). Reported side by side, never asserted.
    const std::string diag_column = t.columns[1] + " [exhaustive row 1]";
    if (n <= cap) {
      auto bs = enumerate_bucket_stats(n, budget.workers, cap);
      CellDiff d;
      d.row_n = n;
      d.column = diag_column;
      d.mode = ComparisonMode::Diagnostic;
      d.status = CellStatus::Info;
      d.expected = row[1];
      d.actual = bs.mean_occupancy.at(0);
      d.note = "exhaustive mean occupancy of the first row; diagnostic only "
               "(ledger: bucket-occupancy-model-small-n)";
      diff.cells.push_back(d);
    } else {
      diff.cells.push_back(
          skipped_cell(n, diag_column, ComparisonMode::Diagnostic, row[1], cap));
    }
  }
  return diff;
}

}  // namespace

TableDiff reproduce(int table_number, const ReproductionBudget& budget) {
  const GoldenTable& t = golden_table(table_number);
  if (budget.sample_count < 1) throw InvalidInputError("sample_count must be >= 1");
  if (budget.workers < 1) throw InvalidInputError("workers must be >= 1");
  const int cap = std::min(budget.max_n_exact, kEnumerationHardMax);

  TableDiff diff;
  switch (table_number) {
    case 1: diff = reproduce_table1(t, budget, cap); break;
    case 2: diff = reproduce_table2(t, budget, cap); break;
    case 3: diff = reproduce_table3(t, budget, cap); break;
    case 4: diff = reproduce_table4(t, budget); break;
    default: diff = reproduce_table5(t, budget, cap); break;
  }
  diff.pass = std::none_of(diff.cells.begin(), diff.cells.end(), [](const CellDiff& c) {
    return c.status == CellStatus::Fail;
  });
  return diff;
}

const std::vector<DiscrepancyEntry>& discrepancy_ledger() {
  static const std::vector<DiscrepancyEntry> entries = {
      {"kappa-summand-power",
       "displayed formula for kappa versus reference tables 1, 2 and 5",
       "the printed summand uses k (n! k / ((n-k)! n^(k+1))), which gives "
       "kappa(2) = -0.439121 and non-monotone values, contradicting every "
       "tabulated kappa, alpha and mu and the linear-cost identity",
       "the summand uses k^2; with it every kappa-derived cell in the three "
       "tables reproduces at 6 decimals, and the two independent forms of "
       "c_linear agree to better than 1e-12"},
      {"backward-cost-sign",
       "displayed formula for the expected backward comparisons versus the "
       "header and body of reference table 2",
       "the displayed formula adds sqrt(pi*n/8); the table header and all ten "
       "tabulated values subtract it",
       "the minus sign is implemented; the hand-checkable case "
       "c_backward(1) = 0 (one element, nothing to compare) confirms it"},
      {"bucket-row-index-typo",
       "bucket pseudocode, row-selection line",
       "the row index is printed as ceil(s_i/m) m, a product that would "
       "index past the m rows for every element beyond the first bucket",
       "the trailing m is dropped; the row index is ceil(s_i/m), which keeps "
       "all indices in [1, m] and matches the worked examples"},
      {"table2-comma-cell",
       "reference table 2, row n = 6, alpha column",
       "the cell is printed with a decimal comma: 0,073035",
       "read as 0.073035, which the closed form confirms at 6 decimals"},
      {"table3-backward-n5-transposition",
       "reference table 3, row n = 5, backward-comparisons column",
       "printed 4.126960; exhaustive enumeration over all 3125 inputs gives "
       "exactly 2581/625 = 4.129600, which reference table 2 also prints for "
       "the same quantity (the printed cell looks digit-transposed)",
       "4.129600 is asserted; the printed value stays on record in the "
       "golden table and in golden_corrections()"},
      {"table3-forward-n6-digit",
       "reference table 3, row n = 6, forward-comparisons column",
       "printed 5.342341; exhaustive enumeration over all 46656 inputs gives "
       "exactly 247386/46656 = 41231/7776 = 5.302341 (one digit off), and "
       "only the corrected value keeps the column's increments monotone",
       "5.302341 is asserted; the printed value stays on record in the "
       "golden table and in golden_corrections()"},
      {"table5-occupancy-n3-transposition",
       "reference table 5, row n = 3, occupancy column",
       "printed 1.090055; the row's own terms give sqrt(pi/2) - mu(3) = "
       "1.090551 (trailing digits transposed)",
       "1.090551 is asserted via golden_corrections(); the printed value "
       "stays on record"},
      {"table5-occupancy-n7-duplicate",
       "reference table 5, row n = 7, occupancy column",
       "printed 1.147287, identical to the row n = 8 cell; the row's own "
       "terms give sqrt(pi/2) - mu(7) = 1.140749",
       "1.140749 is asserted via golden_corrections(); the printed value "
       "stays on record"},
      {"table5-n4-rounded-intermediates",
       "reference table 5, row n = 4, kappa/sqrt(n) and mu columns",
       "printed 0.022727 and 0.143940; full-precision evaluation gives "
       "0.0227275... and 0.1439391..., i.e. 0.022728 and 0.143939 at 6 "
       "decimals (the printed mu equals the difference of the row's already-"
       "rounded neighbours)",
       "the full-precision roundings are asserted via golden_corrections()"},
      {"table4-integer-good-cells",
       "reference table 4, good-input column, rows n >= 9",
       "the cells switch from 6-decimal format to bare integers (104, 33, "
       "...); they are single binomial draws either way",
       "all cells in the column are treated as counts and compared through a "
       "5-sigma binomial band around the model mean N * n!/n^n, never "
       "draw-against-draw"},
      {"bucket-occupancy-model-small-n",
       "closed form for the expected first-row occupancy versus exhaustive "
       "enumeration at small n",
       "the closed form gives 1.060660 at n = 2 while exhaustive enumeration "
       "over all 4 inputs gives exactly 1.5; the combinatorial model behind "
       "the closed form only holds asymptotically",
       "both numbers are reported (the exhaustive one as a diagnostic cell); "
       "nothing asserts that they agree at small n"},
      {"tree-fit-constants",
       "published least-squares constants for the tree detector "
       "(1.245754, -0.273588)",
       "the published model evaluates to about 12.81 at n = 10 while the "
       "same table's sampled mean is 6.70; refitting the published means "
       "against the stated basis sqrt(n)*log2(n) gives a near 0.589, so the "
       "constants cannot come from this data with this basis (they do match "
       "a fit against sqrt(n)*log2(sqrt(n)) up to the intercept)",
       "tree_fit_estimate ships the published constants verbatim and nothing "
       "asserts it against data; fits produced by this library report their "
       "own coefficients, and the acceptance check that pins the published "
       "coefficient range is expected to fail honestly"},
  };
  return entries;
}

}  // namespace repcheck
