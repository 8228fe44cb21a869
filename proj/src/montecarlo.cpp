#include "repcheck/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

#include "repcheck/detectors.hpp"
#include "repcheck/rng.hpp"

namespace repcheck {

bool operator==(const SampleSummary& a, const SampleSummary& b) {
  return a.n == b.n && a.algorithm == b.algorithm && a.sample_count == b.sample_count &&
         a.seed == b.seed && a.good_count == b.good_count &&
         a.mean_comparisons == b.mean_comparisons &&
         a.mean_assignments == b.mean_assignments &&
         a.comparison_variance == b.comparison_variance && a.std_error == b.std_error &&
         a.generator_version == b.generator_version && a.workers == b.workers;
}

namespace {

struct Accum {
  std::uint64_t good = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t assignments = 0;
  unsigned __int128 comparisons_sq = 0;  // worst case (n(n-1)/2)^2 per sample
};

// One contiguous block of sample indices. Each sample re-derives its own
// stream from (seed, index), so block boundaries cannot influence results.
Accum run_block(std::int64_t n, Algorithm algorithm, const GarbagePolicy& policy,
                std::uint64_t seed, std::uint64_t first, std::uint64_t last) {
  Accum acc;
  for (std::uint64_t k = first; k < last; ++k) {
    SplitMix64 rng = derive_stream(seed, k);
    auto src = detail::make_lazy_source([&rng, n] { return uniform_1_to_n(rng, n); });
    const RunMetrics m = detail::run_core(algorithm, n, src, policy);
    acc.good += m.good ? 1 : 0;
    acc.comparisons += m.comparisons;
    acc.assignments += m.assignments;
    acc.comparisons_sq +=
        static_cast<unsigned __int128>(m.comparisons) * m.comparisons;
  }
  return acc;
}

}  // namespace

SampleSummary sample(std::int64_t n, Algorithm algorithm, std::uint64_t sample_count,
                     std::uint64_t seed, const GarbagePolicy& policy, int workers) {
  if (n < 1) throw InvalidInputError("n must be at least 1, got " + std::to_string(n));
  if (sample_count < 1) throw InvalidInputError("sample_count must be at least 1");
  if (workers < 1) {
    throw InvalidInputError("workers must be at least 1, got " + std::to_string(workers));
  }

  const std::uint64_t parts =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), sample_count);
  std::vector<std::future<Accum>> futs;
  for (std::uint64_t w = 0; w < parts; ++w) {
    const std::uint64_t first =
        sample_count / parts * w + std::min<std::uint64_t>(w, sample_count % parts);
    const std::uint64_t size = sample_count / parts + (w < sample_count % parts);
    futs.push_back(std::async(std::launch::async, run_block, n, algorithm, policy, seed,
                              first, first + size));
  }
  Accum total;
  for (auto& f : futs) {
    const Accum a = f.get();
    total.good += a.good;
    total.comparisons += a.comparisons;
    total.assignments += a.assignments;
    total.comparisons_sq += a.comparisons_sq;
  }

  SampleSummary out;
  out.n = n;
  out.algorithm = algorithm;
  out.sample_count = sample_count;
  out.seed = seed;
  out.good_count = total.good;
  out.generator_version = kGeneratorVersion;
  out.workers = workers;
  const long double count = static_cast<long double>(sample_count);
  const long double csum = static_cast<long double>(total.comparisons);
  out.mean_comparisons = static_cast<double>(csum / count);
  out.mean_assignments =
      static_cast<double>(static_cast<long double>(total.assignments) / count);
  if (sample_count > 1) {
    // unbiased variance from the exact integer sums
    const long double csq = static_cast<long double>(total.comparisons_sq);
    long double var = (csq - csum * csum / count) / (count - 1.0L);
    if (var < 0.0L) var = 0.0L;  // guard the all-equal case against round-off
    out.comparison_variance = static_cast<double>(var);
    out.std_error = static_cast<double>(std::sqrt(static_cast<double>(var / count)));
  }
  return out;
}

std::vector<SampleSummary> sweep(const std::vector<std::int64_t>& ns, Algorithm algorithm,
                                 std::uint64_t sample_count, std::uint64_t base_seed,
                                 const GarbagePolicy& policy, int workers) {
  if (ns.empty()) throw InvalidInputError("sweep needs at least one n");
  std::vector<SampleSummary> out;
  out.reserve(ns.size());
  for (const std::int64_t n : ns) {
    out.push_back(sample(n, algorithm, sample_count, sweep_seed(base_seed, n), policy, workers));
  }
  return out;
}

FitResult fit_sqrtnlogn(const std::vector<FitPoint>& points) {
  if (points.size() < 2) {
    throw DegenerateBasisError("fit needs at least two points, got " +
                               std::to_string(points.size()));
  }
  std::set<std::int64_t> distinct;
  for (const auto& p : points) {
    if (p.n < 1) {
      throw InvalidInputError("fit point has n = " + std::to_string(p.n) +
                              ", must be at least 1");
    }
    distinct.insert(p.n);
  }
  if (distinct.size() < 2) {
    throw DegenerateBasisError(
        "all fit points share n = " + std::to_string(points.front().n) +
        "; the basis sqrt(n)*log2(n) cannot separate slope from intercept");
  }

  const double count = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double dn = static_cast<double>(p.n);
    const double x = std::sqrt(dn) * std::log2(dn);
    sx += x;
    sy += p.mean;
    sxx += x * x;
    sxy += x * p.mean;
  }
  const double det = count * sxx - sx * sx;
  FitResult r;
  r.a = (count * sxy - sx * sy) / det;
  r.b = (sy - r.a * sx) / count;
  double ss = 0;
  for (const auto& p : points) {
    const double dn = static_cast<double>(p.n);
    const double x = std::sqrt(dn) * std::log2(dn);
    const double resid = p.mean - (r.a * x + r.b);
    ss += resid * resid;
  }
  r.residual_rms = std::sqrt(ss / count);
  return r;
}

}  // namespace repcheck
