#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repcheck/types.hpp"

// Exhaustive ground truth: run a detector over every one of the n^n
// sequences and accumulate exact integer totals. Feasible through n = 9,
// where the comparison total is bounded by 9^9 * 36 < 2^63, so plain 64-bit
// accumulators cannot overflow (36 = 9*8/2 is the worst per-run comparison
// count among the detectors at n = 9).

namespace repcheck {

struct ExactSummary {
  std::int64_t n = 0;
  Algorithm algorithm{};
  std::uint64_t total_inputs = 0;
  std::uint64_t good_count = 0;
  std::uint64_t comparison_sum = 0;
  std::uint64_t assignment_sum = 0;

  double expected_comparisons() const {
    return static_cast<double>(comparison_sum) / static_cast<double>(total_inputs);
  }
  double expected_assignments() const {
    return static_cast<double>(assignment_sum) / static_cast<double>(total_inputs);
  }
};

bool operator==(const ExactSummary& a, const ExactSummary& b);

struct BucketExactStats {
  std::int64_t n = 0;
  std::uint64_t total_inputs = 0;
  std::vector<double> mean_occupancy;       // per row, averaged over all inputs
  double mean_last_row_comparisons = 0.0;   // good inputs contribute 0
};

bool operator==(const BucketExactStats& a, const BucketExactStats& b);

// Default ceiling on n for exhaustive enumeration. 8 unless the environment
// variable REPCHECK_MAX_ENUM_N (parsed as an integer in [1, 9]) says
// otherwise; the hard bound 9 comes from the overflow analysis above and is
// never exceeded.
inline constexpr int kEnumerationHardMax = 9;
inline constexpr const char* kEnumerationCapEnvVar = "REPCHECK_MAX_ENUM_N";
int default_enumeration_cap();

// Enumerate all n^n sequences in base-n odometer order (rightmost digit
// fastest) and total up one detector's metrics. workers > 1 splits the
// odometer range contiguously; all accumulators are integers, so any split
// produces bit-identical results. Throws CapExceededError when n is above
// the cap (cap_override wins over the environment/default cap but is still
// clamped to the hard bound), InvalidInputError for nonsense arguments.
ExactSummary enumerate_all(std::int64_t n, Algorithm algorithm,
                           const GarbagePolicy& policy = {}, int workers = 1,
                           std::optional<int> cap_override = std::nullopt);

// Same sweep, but collecting the bucket detector's terminal traces: mean
// per-row occupancy and the mean row-scan cost of the detecting element
// (0 for repetition-free inputs).
BucketExactStats enumerate_bucket_stats(std::int64_t n, int workers = 1,
                                        std::optional<int> cap_override = std::nullopt);

// n!, the number of repetition-free sequences. Exact through n = 20, which
// is the last factorial a 64-bit integer holds; CapExceededError beyond.
std::uint64_t good_count(std::int64_t n);

// n^n for the enumeration domain (requires n <= 15 so it fits in 64 bits).
std::uint64_t total_inputs(std::int64_t n);

// Exact decimal rendering of num/den to `places` fractional digits, half
// away from zero, via integer long division. Used wherever expectation
// values must be shown beyond double's comfort (>= 9 places by default).
std::string exact_decimal(std::uint64_t num, std::uint64_t den, int places = 12);

}  // namespace repcheck
