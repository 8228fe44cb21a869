#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "repcheck/detectors.hpp"
#include "repcheck/exact_oracle.hpp"

using namespace repcheck;

// Expected integer totals over all n^n inputs for n = 1..5, frozen from an
// independent brute-force implementation (exact rational arithmetic, no
// floats). A row is {good, comparison_sum, assignment_sum}.
namespace {

struct FrozenTotals {
  std::uint64_t good;
  std::uint64_t comparisons;
  std::uint64_t assignments;
};

// index = n - 1
constexpr FrozenTotals kLinear[] = {
    {1, 1, 2}, {2, 8, 14}, {6, 72, 132}, {24, 800, 1592}, {120, 10850, 23470}};
constexpr FrozenTotals kBackward[] = {
    {1, 0, 0}, {2, 4, 0}, {6, 57, 0}, {24, 808, 0}, {120, 12905, 0}};
constexpr FrozenTotals kForward[] = {
    {1, 0, 0}, {2, 4, 0}, {6, 57, 0}, {24, 820, 0}, {120, 13325, 0}};
constexpr FrozenTotals kTree[] = {
    {1, 0, 1}, {2, 4, 6}, {6, 55, 51}, {24, 748, 568}, {120, 11493, 7845}};
constexpr FrozenTotals kGarbage[] = {
    {1, 1, 1}, {2, 8, 6}, {6, 72, 51}, {24, 800, 568}, {120, 10850, 7845}};
constexpr FrozenTotals kBucket[] = {
    {1, 0, 2}, {2, 4, 14}, {6, 33, 105}, {24, 424, 1080}, {120, 6965, 17220}};

void check_against(Algorithm a, const FrozenTotals* frozen) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    CAPTURE(to_string(a));
    CAPTURE(n);
    const ExactSummary s = enumerate_all(n, a);
    CHECK(s.n == n);
    CHECK(s.algorithm == a);
    CHECK(s.total_inputs == total_inputs(n));
    CHECK(s.good_count == frozen[n - 1].good);
    CHECK(s.comparison_sum == frozen[n - 1].comparisons);
    CHECK(s.assignment_sum == frozen[n - 1].assignments);
  }
}

}  // namespace

TEST_CASE("enumeration totals match the independent brute force, n = 1..5") {
  check_against(Algorithm::Linear, kLinear);
  check_against(Algorithm::Backward, kBackward);
  check_against(Algorithm::Forward, kForward);
  check_against(Algorithm::Tree, kTree);
  check_against(Algorithm::Garbage, kGarbage);
  check_against(Algorithm::Bucket, kBucket);
}

TEST_CASE("the two pairwise scans agree through n = 3 and split at n = 4") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    CHECK(enumerate_all(n, Algorithm::Backward).comparison_sum ==
          enumerate_all(n, Algorithm::Forward).comparison_sum);
  }
  const auto b4 = enumerate_all(4, Algorithm::Backward);
  const auto f4 = enumerate_all(4, Algorithm::Forward);
  CHECK(b4.comparison_sum == 808);
  CHECK(f4.comparison_sum == 820);
  CHECK(b4.good_count == f4.good_count);
}

TEST_CASE("garbage totals equal linear comparisons and tree assignments") {
  // Per run the garbage guard fires once per processed element (same as the
  // linear probe) and stamps exactly the elements the tree turns into nodes.
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto g = enumerate_all(n, Algorithm::Garbage);
    CHECK(g.comparison_sum == enumerate_all(n, Algorithm::Linear).comparison_sum);
    CHECK(g.assignment_sum == enumerate_all(n, Algorithm::Tree).assignment_sum);
  }
}

TEST_CASE("good counts equal the factorial everywhere") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (Algorithm a : kAllAlgorithms) {
      CHECK(enumerate_all(n, a).good_count == good_count(n));
    }
  }
}

TEST_CASE("worker partitioning never changes a bit") {
  for (int workers : {2, 3, 7, 16}) {
    for (Algorithm a : kAllAlgorithms) {
      CHECK(enumerate_all(5, a, {}, workers) == enumerate_all(5, a, {}, 1));
    }
    CHECK(enumerate_all(1, Algorithm::Tree, {}, workers) ==
          enumerate_all(1, Algorithm::Tree, {}, 1));
  }
}

TEST_CASE("garbage enumeration is fill-independent in aggregate too") {
  const GarbagePolicy noisy{GarbageFill::SeededRandom, 0, 12345};
  const GarbagePolicy stampy{GarbageFill::Constant, 1, 0};
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto zeroed = enumerate_all(n, Algorithm::Garbage);
    CHECK(enumerate_all(n, Algorithm::Garbage, noisy) == zeroed);
    CHECK(enumerate_all(n, Algorithm::Garbage, stampy) == zeroed);
  }
}

TEST_CASE("enumeration caps") {
  SUBCASE("an explicit override bounds n") {
    CHECK_THROWS_AS(enumerate_all(4, Algorithm::Linear, {}, 1, 3), CapExceededError);
    CHECK_NOTHROW(enumerate_all(3, Algorithm::Linear, {}, 1, 3));
  }
  SUBCASE("the override cannot push past the hard bound") {
    CHECK_THROWS_AS(enumerate_all(10, Algorithm::Linear, {}, 1, 99), CapExceededError);
  }
  SUBCASE("the error names the cap and the offending n") {
    try {
      enumerate_all(9, Algorithm::Linear, {}, 1, 4);
      FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("n = 4") != std::string::npos);
      CHECK(msg.find("n = 9") != std::string::npos);
    }
  }
  SUBCASE("bad arguments are rejected") {
    CHECK_THROWS_AS(enumerate_all(0, Algorithm::Linear), InvalidInputError);
    CHECK_THROWS_AS(enumerate_all(3, Algorithm::Linear, {}, 0), InvalidInputError);
  }
}

TEST_CASE("the environment variable moves the default cap") {
  // The suite otherwise runs with the variable unset; restore that on exit.
  unsetenv(kEnumerationCapEnvVar);
  CHECK(default_enumeration_cap() == 8);

  setenv(kEnumerationCapEnvVar, "3", 1);
  CHECK(default_enumeration_cap() == 3);
  CHECK_THROWS_AS(enumerate_all(4, Algorithm::Linear), CapExceededError);
  CHECK_NOTHROW(enumerate_all(3, Algorithm::Linear));

  // Values outside [1, 9] or non-numeric fall back to the default.
  setenv(kEnumerationCapEnvVar, "15", 1);
  CHECK(default_enumeration_cap() == 8);
  setenv(kEnumerationCapEnvVar, "0", 1);
  CHECK(default_enumeration_cap() == 8);
  setenv(kEnumerationCapEnvVar, "lots", 1);
  CHECK(default_enumeration_cap() == 8);

  unsetenv(kEnumerationCapEnvVar);
  CHECK(default_enumeration_cap() == 8);
}

TEST_CASE("good_count and total_inputs") {
  CHECK(good_count(1) == 1);
  CHECK(good_count(5) == 120);
  CHECK(good_count(12) == 479001600ULL);
  CHECK(good_count(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(good_count(21), CapExceededError);
  CHECK_THROWS_AS(good_count(0), InvalidInputError);

  CHECK(total_inputs(1) == 1);
  CHECK(total_inputs(5) == 3125);
  CHECK(total_inputs(9) == 387420489ULL);
  CHECK(total_inputs(15) == 437893890380859375ULL);
  CHECK_THROWS_AS(total_inputs(16), InvalidInputError);
  CHECK_THROWS_AS(total_inputs(0), InvalidInputError);
}

TEST_CASE("bucket exhaustive stats match the brute force") {
  SUBCASE("n = 1") {
    const auto s = enumerate_bucket_stats(1);
    CHECK(s.total_inputs == 1);
    REQUIRE(s.mean_occupancy.size() == 1);
    CHECK(s.mean_occupancy[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.mean_last_row_comparisons == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("n = 2: occupancy 3/2 and 0, last-row cost 1/2") {
    const auto s = enumerate_bucket_stats(2);
    CHECK(s.total_inputs == 4);
    REQUIRE(s.mean_occupancy.size() == 2);
    CHECK(s.mean_occupancy[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(s.mean_occupancy[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.mean_last_row_comparisons == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("n = 4: both rows at 71/64, last-row cost 17/16") {
    const auto s = enumerate_bucket_stats(4);
    CHECK(s.total_inputs == 256);
    REQUIRE(s.mean_occupancy.size() == 2);
    CHECK(s.mean_occupancy[0] == doctest::Approx(71.0 / 64.0).epsilon(1e-15));
    CHECK(s.mean_occupancy[1] == doctest::Approx(71.0 / 64.0).epsilon(1e-15));
    CHECK(s.mean_last_row_comparisons == doctest::Approx(17.0 / 16.0).epsilon(1e-15));
  }
  SUBCASE("worker partitioning is bit-identical here too") {
    CHECK(enumerate_bucket_stats(4, 5) == enumerate_bucket_stats(4, 1));
  }
}

TEST_CASE("expected values derived from the sums match the reference decimals") {
  // C_F and C_W rows of the exhaustive table, n = 2..5.
  CHECK(enumerate_all(2, Algorithm::Forward).expected_comparisons() ==
        doctest::Approx(1.000000).epsilon(1e-9));
  CHECK(enumerate_all(3, Algorithm::Forward).expected_comparisons() ==
        doctest::Approx(2.111111).epsilon(1e-6));
  CHECK(enumerate_all(4, Algorithm::Forward).expected_comparisons() ==
        doctest::Approx(3.203125).epsilon(1e-9));
  CHECK(enumerate_all(5, Algorithm::Forward).expected_comparisons() ==
        doctest::Approx(4.264000).epsilon(1e-9));
  CHECK(enumerate_all(5, Algorithm::Backward).expected_comparisons() ==
        doctest::Approx(4.129600).epsilon(1e-9));
}

TEST_CASE("exact_decimal renders rationals digit-exactly") {
  CHECK(exact_decimal(1, 3, 9) == "0.333333333");
  CHECK(exact_decimal(2581, 625, 6) == "4.129600");
  CHECK(exact_decimal(25, 8, 12) == "3.125000000000");
  CHECK(exact_decimal(0, 7, 4) == "0.0000");
  // Rounding is half away from zero, with carry propagation.
  CHECK(exact_decimal(1, 2, 1) == "0.5");
  CHECK(exact_decimal(5, 4, 1) == "1.3");
  CHECK(exact_decimal(1, 8, 2) == "0.13");
  CHECK(exact_decimal(999, 1000, 2) == "1.00");
  CHECK(exact_decimal(19999, 10000, 3) == "2.000");
  // Denominators too large for a naive u64 remainder step.
  CHECK(exact_decimal(1, 10000000000000000000ULL, 2) == "0.00");
  CHECK_THROWS_AS(exact_decimal(1, 0, 3), InvalidInputError);
  CHECK_THROWS_AS(exact_decimal(1, 2, 0), InvalidInputError);
}
