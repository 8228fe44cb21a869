#include "repcheck/detectors.hpp"

namespace repcheck {
namespace detail {

std::vector<std::int64_t> garbage_prefill(std::int64_t n, const GarbagePolicy& policy) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1);
  switch (policy.fill) {
    case GarbageFill::Zeroed:
      break;  // value-initialized already
    case GarbageFill::Constant:
      std::fill(v.begin(), v.end(), policy.constant);
      break;
    case GarbageFill::SeededRandom: {
      // Arbitrary stale memory, modeled as draws from [-n, 2n]; that span
      // includes plausible positions, zero, and out-of-range junk on both
      // sides, so the guard sees every case it must survive.
      SplitMix64 rng(policy.seed);
      for (std::int64_t i = 1; i <= n; ++i) v[i] = uniform_in(rng, -n, 2 * n);
      break;
    }
  }
  return v;
}

}  // namespace detail

namespace {
detail::ArraySource source_of(const Sequence& s) {
  return detail::ArraySource{s.values().data()};
}
}  // namespace

RunMetrics run_linear(const Sequence& s) {
  auto src = source_of(s);
  return detail::linear_core(s.n(), src);
}

RunMetrics run_backward(const Sequence& s) {
  auto src = source_of(s);
  return detail::backward_core(s.n(), src);
}

RunMetrics run_forward(const Sequence& s) {
  auto src = source_of(s);
  return detail::forward_core(s.n(), src);
}

RunMetrics run_tree(const Sequence& s) {
  auto src = source_of(s);
  return detail::tree_core(s.n(), src);
}

RunMetrics run_garbage(const Sequence& s, const GarbagePolicy& policy) {
  auto src = source_of(s);
  return detail::garbage_core(s.n(), src, policy);
}

RunMetrics run_bucket(const Sequence& s, BucketTrace* trace) {
  auto src = source_of(s);
  return detail::bucket_core(s.n(), src, trace);
}

RunMetrics run_algorithm(Algorithm a, const Sequence& s, const GarbagePolicy& policy) {
  auto src = source_of(s);
  return detail::run_core(a, s.n(), src, policy);
}

}  // namespace repcheck
