#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repcheck/types.hpp"

// The five reference tables this library reproduces, embedded verbatim, plus
// the machinery that re-derives every cell and diffs it against the printed
// value. Printed cells stay exactly as published (after the documented
// decimal-comma normalization); the handful of cells that provably
// contradict their own rows carry a correction, and the comparison engine
// asserts the corrected value while reporting both (see discrepancy_ledger).

namespace repcheck {

enum class ComparisonMode {
  Exact6dp,     // reproduced value must match after rounding half away from
                // zero to 6 decimals
  Statistical,  // sampled value must land inside the cell's tolerance band
  Diagnostic,   // reported for inspection only; never pass/fail
};

struct GoldenCorrection {
  std::string table_id;     // "T1".."T5"
  std::int64_t row_n;
  int column;               // index into GoldenTable::columns
  double printed;           // the cell as published
  double corrected;         // the row-consistent value the engine asserts
  std::string ledger_id;    // discrepancy ledger entry explaining it
};

struct GoldenTable {
  std::string id;     // "T1".."T5"
  std::string title;
  std::string source; // which reference table, what it tabulates
  std::vector<std::string> columns;            // columns[0] is always "n"
  std::vector<ComparisonMode> column_modes;    // parallel to columns
  std::vector<std::vector<double>> rows;       // printed values, verbatim
};

const GoldenTable& golden_table(int table_number);          // 1..5
const std::vector<GoldenCorrection>& golden_corrections();  // the known bad cells

enum class CellStatus { Pass, Fail, Skipped, Info };

struct CellDiff {
  std::int64_t row_n = 0;
  std::string column;
  ComparisonMode mode{};
  CellStatus status{};
  double expected = 0.0;      // asserted target (corrected value if the cell
                              // carries a correction)
  double actual = 0.0;        // re-derived value (meaningless when Skipped)
  std::string note;           // tolerance, source, or correction remark
};

struct ReproductionBudget {
  int max_n_exact = 8;              // exhaustive enumeration ceiling
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 42;          // base seed for sampled columns
  int workers = 1;
};

struct TableDiff {
  std::string table_id;
  bool pass = false;  // no Exact6dp or Statistical cell failed
  std::vector<CellDiff> cells;
  ReproductionBudget budget;
};

// Re-derive one reference table. Analytic columns come from the closed
// forms, exhaustively checkable columns additionally from the enumeration
// oracle (rows beyond budget.max_n_exact are Skipped, not failed), sampled
// columns from seeded Monte Carlo within their published tolerance bands.
TableDiff reproduce(int table_number, const ReproductionBudget& budget = {});

// Round half away from zero to 6 decimals; the comparison rule for
// Exact6dp cells (and the rendering rule for table views).
double round6(double x);

struct DiscrepancyEntry {
  std::string id;          // stable short key, e.g. "backward-cost-sign"
  std::string location;    // where in the source material the issue sits
  std::string issue;       // what is inconsistent
  std::string resolution;  // what this library does about it
};

// Everything in the source material that required a judgment call:
// sign/typo fixes, cells corrected against their own rows, model-vs-
// exhaustive divergences that are reported but not asserted.
const std::vector<DiscrepancyEntry>& discrepancy_ledger();

}  // namespace repcheck
