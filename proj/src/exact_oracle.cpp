#include "repcheck/exact_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>

#include "repcheck/detectors.hpp"

namespace repcheck {

bool operator==(const ExactSummary& a, const ExactSummary& b) {
  return a.n == b.n && a.algorithm == b.algorithm && a.total_inputs == b.total_inputs &&
         a.good_count == b.good_count && a.comparison_sum == b.comparison_sum &&
         a.assignment_sum == b.assignment_sum;
}

bool operator==(const BucketExactStats& a, const BucketExactStats& b) {
  return a.n == b.n && a.total_inputs == b.total_inputs &&
         a.mean_occupancy == b.mean_occupancy &&
         a.mean_last_row_comparisons == b.mean_last_row_comparisons;
}

int default_enumeration_cap() {
  if (const char* env = std::getenv(kEnumerationCapEnvVar)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kEnumerationHardMax) {
      return static_cast<int>(v);
    }
  }
  return 8;
}

std::uint64_t good_count(std::int64_t n) {
  if (n < 1) throw InvalidInputError("n must be at least 1, got " + std::to_string(n));
  if (n > 20) {
    throw CapExceededError("good_count is exact only through n = 20 (64-bit factorial); got n = " +
                           std::to_string(n));
  }
  std::uint64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t total_inputs(std::int64_t n) {
  if (n < 1 || n > 15) {
    throw InvalidInputError("n^n fits 64 bits only for 1 <= n <= 15; got n = " +
                            std::to_string(n));
  }
  std::uint64_t t = 1;
  for (std::int64_t i = 0; i < n; ++i) t *= static_cast<std::uint64_t>(n);
  return t;
}

namespace {

int effective_cap(std::optional<int> cap_override) {
  int cap = cap_override.value_or(default_enumeration_cap());
  if (cap > kEnumerationHardMax) cap = kEnumerationHardMax;
  if (cap < 1) cap = 1;
  return cap;
}

void check_enumeration_args(std::int64_t n, int workers, std::optional<int> cap_override) {
  if (n < 1) throw InvalidInputError("n must be at least 1, got " + std::to_string(n));
  if (workers < 1) {
    throw InvalidInputError("workers must be at least 1, got " + std::to_string(workers));
  }
  const int cap = effective_cap(cap_override);
  if (n > cap) {
    throw CapExceededError("exhaustive enumeration is capped at n = " + std::to_string(cap) +
                           " (hard bound " + std::to_string(kEnumerationHardMax) +
                           "); got n = " + std::to_string(n));
  }
}

// Walk the odometer over linear indices [first, last): decode the starting
// index into digits (values digit+1, rightmost digit fastest), then step
// with carries. Visit receives the current values buffer.
template <class Visit>
void walk_range(std::int64_t n, std::uint64_t first, std::uint64_t last, Visit&& visit) {
  std::vector<std::int32_t> vals(static_cast<std::size_t>(n));
  std::uint64_t idx = first;
  for (std::int64_t pos = n - 1; pos >= 0; --pos) {
    vals[static_cast<std::size_t>(pos)] =
        static_cast<std::int32_t>(idx % static_cast<std::uint64_t>(n)) + 1;
    idx /= static_cast<std::uint64_t>(n);
  }
  for (std::uint64_t v = first; v < last; ++v) {
    visit(vals);
    // increment rightmost-fastest with carry
    for (std::int64_t pos = n - 1; pos >= 0; --pos) {
      auto& d = vals[static_cast<std::size_t>(pos)];
      if (d < n) {
        ++d;
        break;
      }
      d = 1;
    }
  }
}

struct Totals {
  std::uint64_t good = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t assignments = 0;
};

}  // namespace

ExactSummary enumerate_all(std::int64_t n, Algorithm algorithm, const GarbagePolicy& policy,
                           int workers, std::optional<int> cap_override) {
  check_enumeration_args(n, workers, cap_override);
  const std::uint64_t total = total_inputs(n);

  auto run_part = [&](std::uint64_t first, std::uint64_t last) {
    Totals t;
    walk_range(n, first, last, [&](const std::vector<std::int32_t>& vals) {
      detail::ArraySource src{vals.data()};
      const RunMetrics m = detail::run_core(algorithm, n, src, policy);
      t.good += m.good ? 1 : 0;
      t.comparisons += m.comparisons;
      t.assignments += m.assignments;
    });
    return t;
  };

  const int parts = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
  std::vector<std::future<Totals>> futs;
  for (int w = 0; w < parts; ++w) {
    const std::uint64_t first = total / parts * w + std::min<std::uint64_t>(w, total % parts);
    const std::uint64_t size = total / parts + (static_cast<std::uint64_t>(w) < total % parts);
    futs.push_back(std::async(std::launch::async, run_part, first, first + size));
  }

  ExactSummary out;
  out.n = n;
  out.algorithm = algorithm;
  out.total_inputs = total;
  for (auto& f : futs) {
    const Totals t = f.get();
    out.good_count += t.good;
    out.comparison_sum += t.comparisons;
    out.assignment_sum += t.assignments;
  }
  return out;
}

BucketExactStats enumerate_bucket_stats(std::int64_t n, int workers,
                                        std::optional<int> cap_override) {
  check_enumeration_args(n, workers, cap_override);
  const std::uint64_t total = total_inputs(n);

  struct BucketTotals {
    std::vector<std::uint64_t> occupancy;
    std::uint64_t last_row = 0;
  };
  auto run_part = [&](std::uint64_t first, std::uint64_t last) {
    BucketTotals t;
    BucketTrace trace;
    walk_range(n, first, last, [&](const std::vector<std::int32_t>& vals) {
      detail::ArraySource src{vals.data()};
      detail::bucket_core(n, src, &trace);
      if (t.occupancy.empty()) t.occupancy.resize(trace.occupancy.size());
      for (std::size_t j = 0; j < trace.occupancy.size(); ++j) {
        t.occupancy[j] += static_cast<std::uint64_t>(trace.occupancy[j]);
      }
      t.last_row += trace.last_row_comparisons;  // 0 for good inputs by construction
    });
    return t;
  };

  const int parts = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
  std::vector<std::future<BucketTotals>> futs;
  for (int w = 0; w < parts; ++w) {
    const std::uint64_t first = total / parts * w + std::min<std::uint64_t>(w, total % parts);
    const std::uint64_t size = total / parts + (static_cast<std::uint64_t>(w) < total % parts);
    futs.push_back(std::async(std::launch::async, run_part, first, first + size));
  }

  std::vector<std::uint64_t> occ_sum;
  std::uint64_t last_row_sum = 0;
  for (auto& f : futs) {
    const BucketTotals t = f.get();
    if (occ_sum.empty()) occ_sum.resize(t.occupancy.size());
    for (std::size_t j = 0; j < t.occupancy.size(); ++j) occ_sum[j] += t.occupancy[j];
    last_row_sum += t.last_row;
  }

  BucketExactStats out;
  out.n = n;
  out.total_inputs = total;
  out.mean_occupancy.reserve(occ_sum.size());
  for (const std::uint64_t s : occ_sum) {
    out.mean_occupancy.push_back(static_cast<double>(s) / static_cast<double>(total));
  }
  out.mean_last_row_comparisons =
      static_cast<double>(last_row_sum) / static_cast<double>(total);
  return out;
}

std::string exact_decimal(std::uint64_t num, std::uint64_t den, int places) {
  if (den == 0) throw InvalidInputError("exact_decimal: zero denominator");
  if (places < 1) throw InvalidInputError("exact_decimal: places must be positive");
  std::string digits = std::to_string(num / den);
  // 128-bit intermediates so the long division is safe for any u64 inputs
  unsigned __int128 rem = num % den;
  digits += '.';
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    digits += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  if (rem * 2 >= den) {
    // round the last digit half away from zero, propagating carries
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (digits[i] == '.') continue;
      if (digits[i] != '9') {
        ++digits[i];
        break;
      }
      digits[i] = '0';
      if (i == 0) {
        digits.insert(digits.begin(), '1');
        break;
      }
    }
  }
  return digits;
}

}  // namespace repcheck
