#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repcheck/types.hpp"

// Seeded Monte Carlo estimation of the detectors' costs. Sequences are drawn
// element-by-element (uniform on [1, n] by rejection, see rng.hpp) and fed
// to the detector cores lazily, so a run that stops at position p never
// generates element p+1. Every sample owns a derived stream, and all
// accumulators are integers, which makes summaries bit-identical for any
// worker count.

namespace repcheck {

struct SampleSummary {
  std::int64_t n = 0;
  Algorithm algorithm{};
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;  // the seed actually used for this batch
  std::uint64_t good_count = 0;
  double mean_comparisons = 0.0;
  double mean_assignments = 0.0;
  double comparison_variance = 0.0;  // unbiased (count - 1 denominator)
  double std_error = 0.0;            // sqrt(variance / count)
  std::string generator_version;     // pinned stream contract, see rng.hpp
  int workers = 1;
};

bool operator==(const SampleSummary& a, const SampleSummary& b);

// Draw sample_count sequences of length n and aggregate one detector's
// metrics. Throws InvalidInputError for n < 1 or sample_count < 1.
SampleSummary sample(std::int64_t n, Algorithm algorithm, std::uint64_t sample_count,
                     std::uint64_t seed, const GarbagePolicy& policy = {},
                     int workers = 1);

// sample() across several n with per-n seeds derived from base_seed (see
// sweep_seed in rng.hpp); each summary records its derived seed.
std::vector<SampleSummary> sweep(const std::vector<std::int64_t>& ns, Algorithm algorithm,
                                 std::uint64_t sample_count, std::uint64_t base_seed,
                                 const GarbagePolicy& policy = {}, int workers = 1);

struct FitPoint {
  std::int64_t n = 0;
  double mean = 0.0;
};

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double residual_rms = 0.0;
};

// Least squares for mean = a * sqrt(n) * log2(n) + b. Requires at least two
// points whose basis values differ (DegenerateBasisError otherwise; a point
// list whose n are all equal cannot pin down a and b) and n >= 1 everywhere.
// Duplicate n values are fine as long as a second distinct n is present;
// they simply leave residual_rms > 0.
FitResult fit_sqrtnlogn(const std::vector<FitPoint>& points);

}  // namespace repcheck
