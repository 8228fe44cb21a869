#include "repcheck/types.hpp"

namespace repcheck {

Sequence::Sequence(std::vector<std::int32_t> values) : values_(std::move(values)) {
  const auto n = static_cast<std::int64_t>(values_.size());
  if (n < 1) throw InvalidInputError("sequence must contain at least one element");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::int32_t v = values_[i];
    if (v < 1 || v > n) {
      throw InvalidInputError("sequence element at position " + std::to_string(i + 1) +
                              " is " + std::to_string(v) + ", outside [1, " +
                              std::to_string(n) + "]");
    }
  }
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Linear: return "linear";
    case Algorithm::Backward: return "backward";
    case Algorithm::Forward: return "forward";
    case Algorithm::Tree: return "tree";
    case Algorithm::Garbage: return "garbage";
    case Algorithm::Bucket: return "bucket";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

bool operator==(const RunMetrics& a, const RunMetrics& b) {
  return a.good == b.good && a.comparisons == b.comparisons &&
         a.assignments == b.assignments &&
         a.first_repeat_position == b.first_repeat_position;
}

bool operator==(const BucketTrace& a, const BucketTrace& b) {
  return a.row_count == b.row_count && a.occupancy == b.occupancy &&
         a.last_row_comparisons == b.last_row_comparisons;
}

}  // namespace repcheck
