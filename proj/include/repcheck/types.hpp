#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repcheck {

// Everything user-correctable derives from Error so callers (the CLI, the
// python bindings) can map the whole family to a usage/validation failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInputError : Error {
  using Error::Error;
};
struct CapExceededError : Error {
  using Error::Error;
};
struct DegenerateBasisError : Error {
  using Error::Error;
};

// Input to the repetition detectors: values s[1..n] with every value in
// [1, n]. Validation happens on construction so the detectors can assume
// well-formed input.
class Sequence {
 public:
  explicit Sequence(std::vector<std::int32_t> values);

  std::int64_t n() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<std::int32_t>& values() const { return values_; }

 private:
  std::vector<std::int32_t> values_;
};

enum class Algorithm { Linear, Backward, Forward, Tree, Garbage, Bucket };

constexpr Algorithm kAllAlgorithms[] = {Algorithm::Linear, Algorithm::Backward,
                                        Algorithm::Forward, Algorithm::Tree,
                                        Algorithm::Garbage, Algorithm::Bucket};

const char* to_string(Algorithm a);
// Accepts the lowercase names ("linear", ..., "bucket"); returns nullopt for
// anything else.
std::optional<Algorithm> algorithm_from_string(std::string_view name);

enum class GarbageFill { Zeroed, Constant, SeededRandom };

// How the garbage detector's working vector is pre-filled before the run.
// The fill models whatever happened to be in memory; the detector's verdict
// and reported position must not depend on it (tests enforce that).
// SeededRandom draws every cell uniformly from [-n, 2n].
struct GarbagePolicy {
  GarbageFill fill = GarbageFill::Zeroed;
  std::int64_t constant = 0;   // cell value when fill == Constant
  std::uint64_t seed = 0;      // fill stream seed when fill == SeededRandom
};

// Exact operation counts for one run of one detector.
//
// comparisons counts each algorithm's probe test once per execution:
//   linear   - the "count already positive" test on the counting vector
//   backward - each s[i] = s[j] element test
//   forward  - each s[i] = s[j] element test
//   tree     - one probe per node visited during a lookup
//   garbage  - the guarded collision test, once per loop iteration
//   bucket   - each s[i] = Q[r][j] row-scan test
//
// assignments counts writes into the algorithm's working storage:
//   linear   - n for the initial zeroing, plus one per element counted
//   backward - always 0 (no working storage)
//   forward  - always 0 (no working storage)
//   tree     - one per node created, the root included
//   garbage  - one per position stamp (the pre-fill is not the algorithm's
//              own work, so it is not counted)
//   bucket   - m for the row-counter setup, plus one per element placed
struct RunMetrics {
  bool good = true;
  std::uint64_t comparisons = 0;
  std::uint64_t assignments = 0;
  // 1-based index of the element whose processing detected the repetition;
  // engaged exactly when good is false, and always in [2, n]. For forward
  // this is the inner scan index, i.e. the later element of the pair.
  std::optional<std::int64_t> first_repeat_position;
};

bool operator==(const RunMetrics& a, const RunMetrics& b);
inline bool operator!=(const RunMetrics& a, const RunMetrics& b) { return !(a == b); }

// Extra observability for the bucket detector.
struct BucketTrace {
  std::int64_t row_count = 0;               // m = ceil(sqrt(n))
  std::vector<std::int64_t> occupancy;      // per-row element count at termination
  std::uint64_t last_row_comparisons = 0;   // row-scan cost of the detecting
                                            // element; 0 on a good run
};

bool operator==(const BucketTrace& a, const BucketTrace& b);

}  // namespace repcheck
