#pragma once

#include <cstdint>
#include <vector>

#include "repcheck/rng.hpp"
#include "repcheck/types.hpp"

// Six ways to decide whether s[1..n] over {1..n} is repetition-free, each
// instrumented with the exact comparison/assignment conventions documented
// on RunMetrics. The cores are templates over an element source so the same
// code serves materialized sequences, the exhaustive enumerator, and lazily
// drawn random sequences (where early termination means most of the
// sequence is never generated at all).

namespace repcheck {
namespace detail {

// Source contract: at(i) returns s[i] (1-based) and may be called for any
// i <= one past the highest index requested so far; prefix() exposes the
// already-materialized elements as a contiguous array for backward scans.
struct ArraySource {
  const std::int32_t* data;
  std::int32_t at(std::int64_t i) const { return data[i - 1]; }
  const std::int32_t* prefix() const { return data; }
};

template <class Gen>
struct LazySource {
  Gen gen;  // called as std::int32_t gen()
  std::vector<std::int32_t> buf;
  std::int32_t at(std::int64_t i) {
    while (static_cast<std::int64_t>(buf.size()) < i) buf.push_back(gen());
    return buf[static_cast<std::size_t>(i) - 1];
  }
  const std::int32_t* prefix() const { return buf.data(); }
};

template <class Gen>
LazySource<Gen> make_lazy_source(Gen gen) {
  return LazySource<Gen>{std::move(gen), {}};
}

// Counting vector: v[x] holds how many times x has been seen. One probe per
// element; stops at the first count that is already positive.
template <class Src>
RunMetrics linear_core(std::int64_t n, Src& s) {
  RunMetrics m;
  std::vector<std::int32_t> v(static_cast<std::size_t>(n) + 1, 0);
  m.assignments = static_cast<std::uint64_t>(n);  // the initial zeroing
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int32_t x = s.at(i);
    ++m.comparisons;
    if (v[x] > 0) {
      m.good = false;
      m.first_repeat_position = i;
      return m;
    }
    v[x] += 1;
    ++m.assignments;
  }
  return m;
}

// Compare each element against all earlier ones, newest first; stop at the
// first equality.
template <class Src>
RunMetrics backward_core(std::int64_t n, Src& s) {
  RunMetrics m;
  for (std::int64_t i = 2; i <= n; ++i) {
    const std::int32_t x = s.at(i);
    const std::int32_t* p = s.prefix();
    for (std::int64_t j = i - 1; j >= 1; --j) {
      ++m.comparisons;
      if (p[j - 1] == x) {
        m.good = false;
        m.first_repeat_position = i;
        return m;
      }
    }
  }
  return m;
}

// Compare each element against all later ones; stop at the first equality.
// The reported position is the inner index, i.e. the later element of the
// colliding pair, which is why it can differ from the other detectors'.
template <class Src>
RunMetrics forward_core(std::int64_t n, Src& s) {
  RunMetrics m;
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    const std::int32_t x = s.at(i);
    for (std::int64_t j = i + 1; j <= n; ++j) {
      const std::int32_t y = s.at(j);
      ++m.comparisons;
      if (x == y) {
        m.good = false;
        m.first_repeat_position = j;
        return m;
      }
    }
  }
  return m;
}

// Unbalanced binary search tree in insertion order: s[1] is the root; each
// later element is looked up (one probe per visited node, equality decided
// before the descend direction) and inserted on miss.
template <class Src>
RunMetrics tree_core(std::int64_t n, Src& s) {
  RunMetrics m;
  std::vector<std::int32_t> key;
  std::vector<std::int32_t> left, right;  // node indices, -1 when absent
  key.reserve(16);
  left.reserve(16);
  right.reserve(16);
  key.push_back(s.at(1));
  left.push_back(-1);
  right.push_back(-1);
  m.assignments = 1;  // the root node
  for (std::int64_t i = 2; i <= n; ++i) {
    const std::int32_t x = s.at(i);
    std::int32_t cur = 0;
    for (;;) {
      ++m.comparisons;
      if (x == key[cur]) {
        m.good = false;
        m.first_repeat_position = i;
        return m;
      }
      const bool go_left = x < key[cur];
      const std::int32_t child = go_left ? left[cur] : right[cur];
      if (child < 0) {
        const std::int32_t idx = static_cast<std::int32_t>(key.size());
        key.push_back(x);
        left.push_back(-1);
        right.push_back(-1);
        (go_left ? left[cur] : right[cur]) = idx;
        ++m.assignments;
        break;
      }
      cur = child;
    }
  }
  return m;
}

std::vector<std::int64_t> garbage_prefill(std::int64_t n, const GarbagePolicy& policy);

// Position-stamping vector that is never initialized by the algorithm
// itself; the policy models whatever the memory held beforehand. The guard
// makes stale cells harmless: a cell is only trusted if it names a plausible
// earlier position AND the element there really matches. One probe per loop
// iteration (the whole guarded test counts once).
template <class Src>
RunMetrics garbage_core(std::int64_t n, Src& s, const GarbagePolicy& policy) {
  RunMetrics m;
  std::vector<std::int64_t> v = garbage_prefill(n, policy);
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int32_t x = s.at(i);
    ++m.comparisons;
    const std::int64_t w = v[x];
    // w < i <= n keeps the s.at(w) dereference in already-seen territory.
    if (w >= 1 && w < i && s.at(w) == x) {
      m.good = false;
      m.first_repeat_position = i;
      return m;
    }
    v[x] = i;
    ++m.assignments;
  }
  return m;
}

// Square-root bucketing: m = ceil(sqrt(n)) rows, element x goes to row
// ceil(x / m), each row is scanned linearly (one probe per occupied slot)
// and appended to on miss. Rows never overflow m slots: a row only receives
// values from one span of m consecutive integers, and a repetition stops the
// run before an (m+1)-th distinct value could arrive.
template <class Src>
RunMetrics bucket_core(std::int64_t n, Src& s, BucketTrace* trace) {
  RunMetrics m;
  std::int64_t rows = 1;
  while (rows * rows < n) ++rows;  // ceil(sqrt(n)) without float round-off
  std::vector<std::int64_t> count(static_cast<std::size_t>(rows) + 1, 1);
  std::vector<std::int32_t> q(static_cast<std::size_t>(rows * rows));
  m.assignments = static_cast<std::uint64_t>(rows);  // the counter setup
  std::uint64_t last_row = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int32_t x = s.at(i);
    const std::int64_t r = (x + rows - 1) / rows;
    const std::int32_t* row = q.data() + (r - 1) * rows;
    last_row = 0;
    bool hit = false;
    for (std::int64_t j = 1; j < count[r]; ++j) {
      ++m.comparisons;
      ++last_row;
      if (row[j - 1] == x) {
        hit = true;
        break;
      }
    }
    if (hit) {
      m.good = false;
      m.first_repeat_position = i;
      break;
    }
    q[static_cast<std::size_t>((r - 1) * rows + count[r] - 1)] = x;
    count[r] += 1;
    ++m.assignments;
  }
  if (trace != nullptr) {
    trace->row_count = rows;
    trace->occupancy.assign(static_cast<std::size_t>(rows), 0);
    for (std::int64_t j = 1; j <= rows; ++j) trace->occupancy[j - 1] = count[j] - 1;
    trace->last_row_comparisons = m.good ? 0 : last_row;
  }
  return m;
}

}  // namespace detail

// Materialized-sequence entry points.
RunMetrics run_linear(const Sequence& s);
RunMetrics run_backward(const Sequence& s);
RunMetrics run_forward(const Sequence& s);
RunMetrics run_tree(const Sequence& s);
RunMetrics run_garbage(const Sequence& s, const GarbagePolicy& policy = {});
RunMetrics run_bucket(const Sequence& s, BucketTrace* trace = nullptr);

// Dispatcher over the algorithm enum; the policy only matters for Garbage.
RunMetrics run_algorithm(Algorithm a, const Sequence& s, const GarbagePolicy& policy = {});

namespace detail {
template <class Src>
RunMetrics run_core(Algorithm a, std::int64_t n, Src& s, const GarbagePolicy& policy,
                    BucketTrace* trace = nullptr) {
  switch (a) {
    case Algorithm::Linear: return linear_core(n, s);
    case Algorithm::Backward: return backward_core(n, s);
    case Algorithm::Forward: return forward_core(n, s);
    case Algorithm::Tree: return tree_core(n, s);
    case Algorithm::Garbage: return garbage_core(n, s, policy);
    case Algorithm::Bucket: return bucket_core(n, s, trace);
  }
  throw Error("unhandled algorithm");
}
}  // namespace detail

}  // namespace repcheck
