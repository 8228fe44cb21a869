#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "repcheck/detectors.hpp"
#include "repcheck/rng.hpp"

using namespace repcheck;

namespace {

RunMetrics good_run(std::uint64_t comparisons, std::uint64_t assignments) {
  return RunMetrics{true, comparisons, assignments, std::nullopt};
}

RunMetrics bad_run(std::uint64_t comparisons, std::uint64_t assignments,
                   std::int64_t position) {
  return RunMetrics{false, comparisons, assignments, position};
}

Sequence seq(std::vector<std::int32_t> v) { return Sequence(std::move(v)); }

// A deterministic random sequence of length n over [1, n].
Sequence random_seq(std::int64_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::int32_t> v;
  v.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    v.push_back(static_cast<std::int32_t>(uniform_1_to_n(rng, n)));
  return Sequence(std::move(v));
}

}  // namespace

TEST_CASE("sequence validation") {
  CHECK_NOTHROW(seq({1}));
  CHECK_NOTHROW(seq({3, 1, 2}));
  CHECK_NOTHROW(seq({2, 2}));
  CHECK_THROWS_AS(seq({}), InvalidInputError);
  CHECK_THROWS_AS(seq({0}), InvalidInputError);
  CHECK_THROWS_AS(seq({2}), InvalidInputError);        // 2 > n = 1
  CHECK_THROWS_AS(seq({1, 2, 4}), InvalidInputError);  // 4 > n = 3
  CHECK_THROWS_AS(seq({1, -1, 2}), InvalidInputError);
}

TEST_CASE("algorithm names round-trip") {
  for (Algorithm a : kAllAlgorithms) {
    auto back = algorithm_from_string(to_string(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(algorithm_from_string("treap").has_value());
  CHECK_FALSE(algorithm_from_string("Linear").has_value());
}

// Single element: nothing can repeat, and each detector pays its fixed
// bookkeeping. Hand-traced.
TEST_CASE("all detectors on the one-element sequence") {
  const Sequence s = seq({1});
  CHECK(run_linear(s) == good_run(1, 2));    // zero 1 cell, 1 probe, 1 count
  CHECK(run_backward(s) == good_run(0, 0));
  CHECK(run_forward(s) == good_run(0, 0));
  CHECK(run_tree(s) == good_run(0, 1));      // root created, nothing compared
  CHECK(run_garbage(s) == good_run(1, 1));   // 1 guard test, 1 stamp
  BucketTrace t;
  CHECK(run_bucket(s, &t) == good_run(0, 2));  // 1 counter + 1 placement
  CHECK(t == BucketTrace{1, {1}, 0});
}

// Hand-traced repetition at the last element: (2, 1, 3, 2).
TEST_CASE("all detectors on (2,1,3,2)") {
  const Sequence s = seq({2, 1, 3, 2});
  CHECK(run_linear(s) == bad_run(4, 7, 4));    // 4 zeroes + 3 counts
  CHECK(run_backward(s) == bad_run(6, 0, 4));  // 1 + 2 + 3 probes
  CHECK(run_forward(s) == bad_run(3, 0, 4));   // i=1 scans j=2,3,4 and hits
  CHECK(run_tree(s) == bad_run(3, 3, 4));      // 1 probe per earlier node + root hit
  CHECK(run_garbage(s) == bad_run(4, 3, 4));   // stamps for the first three only
  BucketTrace t;
  CHECK(run_bucket(s, &t) == bad_run(2, 5, 4));  // 2 counters + 3 placements
  CHECK(t == BucketTrace{2, {2, 1}, 1});
}

// Hand-traced repetition-free run: (3, 1, 4, 2).
TEST_CASE("all detectors on (3,1,4,2)") {
  const Sequence s = seq({3, 1, 4, 2});
  CHECK(run_linear(s) == good_run(4, 8));
  CHECK(run_backward(s) == good_run(6, 0));
  CHECK(run_forward(s) == good_run(6, 0));
  CHECK(run_tree(s) == good_run(4, 4));  // 1 at depth 1, 1, then 2 for the leaf
  CHECK(run_garbage(s) == good_run(4, 4));
  BucketTrace t;
  CHECK(run_bucket(s, &t) == good_run(2, 6));
  CHECK(t == BucketTrace{2, {2, 2}, 0});
}

TEST_CASE("all detectors on the immediate repeat (1,1)") {
  const Sequence s = seq({1, 1});
  CHECK(run_linear(s) == bad_run(2, 3, 2));
  CHECK(run_backward(s) == bad_run(1, 0, 2));
  CHECK(run_forward(s) == bad_run(1, 0, 2));
  CHECK(run_tree(s) == bad_run(1, 1, 2));
  CHECK(run_garbage(s) == bad_run(2, 1, 2));
  BucketTrace t;
  CHECK(run_bucket(s, &t) == bad_run(1, 3, 2));
  CHECK(t == BucketTrace{2, {1, 0}, 1});
}

// The forward scan visits pairs ordered by their FIRST element, so the pair
// it reports can differ from the leftmost repetition. In (1,2,2,1) the
// leftmost repetition completes at position 3, but the forward scan finds
// the pair (1,4) first and reports position 4.
TEST_CASE("forward reports the later element of its first-found pair") {
  const Sequence s = seq({1, 2, 2, 1});
  CHECK(run_forward(s) == bad_run(3, 0, 4));
  CHECK(run_backward(s) == bad_run(2, 0, 3));
  CHECK(run_linear(s) == bad_run(3, 6, 3));
  CHECK(run_tree(s) == bad_run(3, 2, 3));
}

// Bucket worked examples at n = 4 (m = 2, rows {1,2} and {3,4}).
TEST_CASE("bucket traces on the worked n=4 examples") {
  BucketTrace t;
  SUBCASE("(2,2,1,1) detected inside the first row") {
    CHECK(run_bucket(seq({2, 2, 1, 1}), &t) == bad_run(1, 3, 2));
    CHECK(t == BucketTrace{2, {1, 0}, 1});
  }
  SUBCASE("(1,4,2,3) repetition-free, one probe per row") {
    CHECK(run_bucket(seq({1, 4, 2, 3}), &t) == good_run(2, 6));
    CHECK(t == BucketTrace{2, {2, 2}, 0});
  }
}

TEST_CASE("bucket row count is the ceiling square root") {
  BucketTrace t;
  run_bucket(random_seq(1, 7), &t);
  CHECK(t.row_count == 1);
  run_bucket(random_seq(2, 7), &t);
  CHECK(t.row_count == 2);
  run_bucket(random_seq(4, 7), &t);
  CHECK(t.row_count == 2);
  run_bucket(random_seq(5, 7), &t);
  CHECK(t.row_count == 3);
  run_bucket(random_seq(9, 7), &t);
  CHECK(t.row_count == 3);
  run_bucket(random_seq(10, 7), &t);
  CHECK(t.row_count == 4);
  run_bucket(random_seq(100, 7), &t);
  CHECK(t.row_count == 10);
  run_bucket(random_seq(101, 7), &t);
  CHECK(t.row_count == 11);
}

TEST_CASE("bucket occupancy sums to the number of placed elements") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Sequence s = random_seq(30, seed);
    BucketTrace t;
    const RunMetrics m = run_bucket(s, &t);
    std::int64_t placed = 0;
    for (std::int64_t o : t.occupancy) {
      CHECK(o >= 0);
      placed += o;
    }
    // Every element before the detecting one is placed; on a good run all n.
    const std::int64_t processed =
        m.good ? s.n() : *m.first_repeat_position - 1;
    CHECK(placed == processed);
    CHECK(m.assignments == static_cast<std::uint64_t>(t.row_count + placed));
  }
}

// All six detectors must agree on the verdict everywhere, and all but the
// forward scan on the position (the forward scan's pair order is its own).
TEST_CASE("verdict agreement across detectors on random inputs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(seed % 12);
    const Sequence s = random_seq(n, 1000 + seed);
    const RunMetrics reference = run_backward(s);
    for (Algorithm a : kAllAlgorithms) {
      const RunMetrics m = run_algorithm(a, s);
      CHECK(m.good == reference.good);
      CHECK(m.first_repeat_position.has_value() == !m.good);
      if (!m.good && a != Algorithm::Forward) {
        CHECK(*m.first_repeat_position == *reference.first_repeat_position);
      }
      if (!m.good) {
        CHECK(*m.first_repeat_position >= 2);
        CHECK(*m.first_repeat_position <= s.n());
      }
    }
  }
}

// The garbage detector's whole point: its behavior is identical no matter
// what the working vector held beforehand. The guard only fires on genuine
// repetitions, so verdict, position, and both counters match the zeroed run
// for every fill, including fills crafted to look like plausible stamps.
TEST_CASE("garbage detector ignores the pre-fill") {
  std::vector<GarbagePolicy> fills = {
      {GarbageFill::Zeroed, 0, 0},
      {GarbageFill::Constant, 1, 0},   // a stamp-like value inside [1, n]
      {GarbageFill::Constant, -3, 0},
      {GarbageFill::Constant, 7, 0},
      {GarbageFill::SeededRandom, 0, 1},
      {GarbageFill::SeededRandom, 0, 2},
      {GarbageFill::SeededRandom, 0, 0xDEADBEEF},
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(seed % 10);
    const Sequence s = random_seq(n, 5000 + seed);
    const RunMetrics reference = run_garbage(s, fills[0]);
    for (const auto& policy : fills) {
      CHECK(run_garbage(s, policy) == reference);
    }
  }
}

TEST_CASE("garbage detector on a crafted stamp-collision fill") {
  // With every cell pre-filled to 1, position 2 sees a well-formed stamp
  // (w = 1 < 2) and must still reject it because s[1] differs.
  CHECK(run_garbage(seq({2, 1, 3, 4}), {GarbageFill::Constant, 1, 0}) ==
        good_run(4, 4));
  // ... and must still accept it when s[1] really matches.
  CHECK(run_garbage(seq({2, 2, 1, 3}), {GarbageFill::Constant, 1, 0}) ==
        bad_run(2, 1, 2));
}

TEST_CASE("run_algorithm dispatches to the matching direct entry point") {
  const Sequence s = seq({2, 1, 3, 2});
  CHECK(run_algorithm(Algorithm::Linear, s) == run_linear(s));
  CHECK(run_algorithm(Algorithm::Backward, s) == run_backward(s));
  CHECK(run_algorithm(Algorithm::Forward, s) == run_forward(s));
  CHECK(run_algorithm(Algorithm::Tree, s) == run_tree(s));
  CHECK(run_algorithm(Algorithm::Garbage, s) == run_garbage(s));
  CHECK(run_algorithm(Algorithm::Bucket, s) == run_bucket(s));
}

// Tree insertion draws a right spine from an increasing run, so the probe
// count per element is its depth along that spine.
TEST_CASE("tree comparisons on sorted input grow quadratically") {
  std::vector<std::int32_t> v;
  for (int i = 1; i <= 10; ++i) v.push_back(i);
  // Element i probes the i-1 nodes above it: total 0+1+...+9 = 45.
  CHECK(run_tree(seq(std::move(v))) == good_run(45, 10));
}

TEST_CASE("pairwise detectors on the all-distinct worst case") {
  std::vector<std::int32_t> v;
  for (int i = 1; i <= 12; ++i) v.push_back(i);
  const Sequence s = seq(std::move(v));
  // Both scan all n(n-1)/2 pairs when nothing repeats.
  CHECK(run_backward(s) == good_run(66, 0));
  CHECK(run_forward(s) == good_run(66, 0));
}
