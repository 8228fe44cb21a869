#include "repcheck/analytics.hpp"

#include <cmath>
#include <numbers>

#include "repcheck/types.hpp"

namespace repcheck {

namespace {

constexpr double kPi = std::numbers::pi;
// Falling-factorial terms below this bound cannot move a double total.
constexpr double kTermFloor = 1e-18;

void require_n(std::int64_t n) {
  if (n < 1) throw InvalidInputError("n must be at least 1, got " + std::to_string(n));
}

// sum_{k=1..n} p_k * k^2 / n with p_k = prod_{i=0..k-1} (1 - i/n). The
// recurrence keeps every intermediate in [0, 1]; p_k decays like
// exp(-k^2/2n), so the loop ends after O(sqrt(n)) terms.
double weighted_survival_sum(std::int64_t n) {
  const double dn = static_cast<double>(n);
  double p = 1.0;
  double sum = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (k > 1) p *= 1.0 - static_cast<double>(k - 1) / dn;
    if (p < kTermFloor) break;
    const double dk = static_cast<double>(k);
    sum += p * dk * dk / dn;
  }
  return sum;
}

}  // namespace

double kappa(std::int64_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return 1.0 / 3.0 - std::sqrt(kPi * dn / 2.0) + weighted_survival_sum(n);
}

double factorial_ratio(std::int64_t n) {
  require_n(n);
  double p = 1.0;
  const double dn = static_cast<double>(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    p *= static_cast<double>(i) / dn;
    if (p == 0.0) break;  // underflow; the true value is below double range
  }
  return p;
}

double delta(std::int64_t n) { return kappa(n) - factorial_ratio(n); }

double c_linear(std::int64_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return std::sqrt(kPi * dn / 2.0) + 2.0 / 3.0 + kappa(n) - factorial_ratio(n);
}

double c_linear_series(std::int64_t n) {
  require_n(n);
  return 1.0 - factorial_ratio(n) + weighted_survival_sum(n);
}

double t_linear(std::int64_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return dn + std::sqrt(2.0 * kPi * dn) + 7.0 / 3.0 + 2.0 * delta(n);
}

double alpha(std::int64_t n) {
  require_n(n);
  return kappa(n) / 2.0 + factorial_ratio(n) * static_cast<double>(n + 1) / 2.0;
}

double c_backward(std::int64_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return dn - std::sqrt(kPi * dn / 8.0) + 2.0 / 3.0 - alpha(n);
}

double t_backward(std::int64_t n) { return c_backward(n) + 2.0 / 3.0; }

double mu(std::int64_t n) {
  require_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  return 1.0 / (3.0 * rn) - kappa(n) / rn;
}

double e_bucket_occupancy(std::int64_t n) {
  return std::sqrt(kPi / 2.0) - mu(n);
}

double eta(std::int64_t n) {
  require_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  return (1.0 / 3.0 + std::sqrt(kPi / 8.0) - kappa(n) / 2.0) / (rn + 2.0);
}

double e_first_repeat_comparisons(std::int64_t n) {
  return 1.0 + std::sqrt(kPi / 8.0) - eta(n);
}

double rho(std::int64_t n) {
  require_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  return (5.0 / 6.0 - std::sqrt(9.0 * kPi / 8.0) - 3.0 * kappa(n) / 2.0) / (rn + 1.0);
}

double c_bucket_per_bucket(std::int64_t n) {
  require_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  return rn + 1.0 / 3.0 - std::sqrt(kPi / 8.0) + rho(n);
}

double phi(std::int64_t n) {
  require_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  const double k = kappa(n);
  return 3.0 * k - rho(n) - 3.0 * eta(n) - factorial_ratio(n) -
         (3.0 * std::sqrt(kPi / 8.0) - 1.0 / 3.0 - 3.0 * k / 2.0) / (rn + 1.0);
}

double t_bucket(std::int64_t n) {
  require_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  return (3.0 + 3.0 * std::sqrt(kPi / 2.0)) * rn + std::sqrt(25.0 * kPi / 8.0) + phi(n);
}

double tree_fit_estimate(std::int64_t n) {
  require_n(n);
  const double dn = static_cast<double>(n);
  return 1.245754 * std::sqrt(dn) * std::log2(dn) - 0.273588;
}

namespace {
struct NamedFormula {
  const char* name;
  double (*fn)(std::int64_t);
};
constexpr NamedFormula kFormulas[] = {
    {"kappa", kappa},
    {"factorial_ratio", factorial_ratio},
    {"delta", delta},
    {"c_linear", c_linear},
    {"t_linear", t_linear},
    {"alpha", alpha},
    {"c_backward", c_backward},
    {"t_backward", t_backward},
    {"mu", mu},
    {"e_bucket_occupancy", e_bucket_occupancy},
    {"eta", eta},
    {"e_first_repeat_comparisons", e_first_repeat_comparisons},
    {"rho", rho},
    {"c_bucket_per_bucket", c_bucket_per_bucket},
    {"phi", phi},
    {"t_bucket", t_bucket},
    {"tree_fit_estimate", tree_fit_estimate},
};
}  // namespace

const std::vector<std::string>& formula_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : kFormulas) v.emplace_back(f.name);
    return v;
  }();
  return names;
}

double evaluate_formula(std::string_view name, std::int64_t n) {
  for (const auto& f : kFormulas) {
    if (name == f.name) return f.fn(n);
  }
  std::string known;
  for (const auto& f : kFormulas) {
    if (!known.empty()) known += ", ";
    known += f.name;
  }
  throw InvalidInputError("unknown formula '" + std::string(name) + "'; known: " + known);
}

}  // namespace repcheck
