// Python bindings. Results cross as plain dicts and lists so the module
// needs no wrapper classes on the Python side; validation errors of any
// kind surface as ValueError.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repcheck/analytics.hpp"
#include "repcheck/detectors.hpp"
#include "repcheck/exact_oracle.hpp"
#include "repcheck/montecarlo.hpp"
#include "repcheck/reports.hpp"
#include "repcheck/rng.hpp"

namespace py = pybind11;
using namespace repcheck;

namespace {

Algorithm algorithm_arg(const std::string& name) {
  const auto a = algorithm_from_string(name);
  if (!a) throw InvalidInputError("unknown algorithm '" + name + "'");
  return *a;
}

GarbagePolicy policy_arg(const std::string& fill, std::int64_t constant,
                         std::uint64_t fill_seed) {
  GarbagePolicy p;
  if (fill == "zeroed") {
    p.fill = GarbageFill::Zeroed;
  } else if (fill == "constant") {
    p.fill = GarbageFill::Constant;
  } else if (fill == "random") {
    p.fill = GarbageFill::SeededRandom;
  } else {
    throw InvalidInputError("unknown fill '" + fill +
                            "'; expected zeroed, constant or random");
  }
  p.constant = constant;
  p.seed = fill_seed;
  return p;
}

py::dict metrics_dict(const RunMetrics& m) {
  py::dict d;
  d["good"] = m.good;
  d["comparisons"] = m.comparisons;
  d["assignments"] = m.assignments;
  if (m.first_repeat_position) {
    d["first_repeat_position"] = *m.first_repeat_position;
  } else {
    d["first_repeat_position"] = py::none();
  }
  return d;
}

py::dict summary_dict(const ExactSummary& s) {
  py::dict d;
  d["n"] = s.n;
  d["algorithm"] = to_string(s.algorithm);
  d["total_inputs"] = s.total_inputs;
  d["good_count"] = s.good_count;
  d["comparison_sum"] = s.comparison_sum;
  d["assignment_sum"] = s.assignment_sum;
  d["expected_comparisons"] = s.expected_comparisons();
  d["expected_assignments"] = s.expected_assignments();
  return d;
}

py::dict sample_dict(const SampleSummary& s) {
  py::dict d;
  d["n"] = s.n;
  d["algorithm"] = to_string(s.algorithm);
  d["sample_count"] = s.sample_count;
  d["seed"] = s.seed;
  d["good_count"] = s.good_count;
  d["mean_comparisons"] = s.mean_comparisons;
  d["mean_assignments"] = s.mean_assignments;
  d["comparison_variance"] = s.comparison_variance;
  d["std_error"] = s.std_error;
  d["generator_version"] = s.generator_version;
  d["workers"] = s.workers;
  return d;
}

}  // namespace

PYBIND11_MODULE(_repcheck, m) {
  m.doc() = "repetition detectors over {1..n}: exact counting, exhaustive "
            "enumeration, seeded sampling, closed forms, table reproduction";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("generator_version") = kGeneratorVersion;

  m.def(
      "run",
      [](const std::string& alg, const std::vector<std::int32_t>& values,
         const std::string& fill, std::int64_t constant, std::uint64_t fill_seed) {
        const Sequence seq(values);
        return metrics_dict(
            run_algorithm(algorithm_arg(alg), seq, policy_arg(fill, constant, fill_seed)));
      },
      py::arg("alg"), py::arg("seq"), py::arg("fill") = "zeroed",
      py::arg("constant") = 0, py::arg("fill_seed") = 0,
      "Run one detector on a sequence; returns its verdict and counted work.");

  m.def(
      "run_bucket",
      [](const std::vector<std::int32_t>& values) {
        BucketTrace trace;
        const RunMetrics metrics = run_bucket(Sequence(values), &trace);
        py::dict d = metrics_dict(metrics);
        d["row_count"] = trace.row_count;
        d["occupancy"] = trace.occupancy;
        d["last_row_comparisons"] = trace.last_row_comparisons;
        return d;
      },
      py::arg("seq"),
      "Run the bucket detector and include its placement trace.");

  m.def(
      "enumerate_all",
      [](std::int64_t n, const std::string& alg, int workers,
         std::optional<int> cap, const std::string& fill, std::int64_t constant,
         std::uint64_t fill_seed) {
        return summary_dict(enumerate_all(n, algorithm_arg(alg),
                                          policy_arg(fill, constant, fill_seed),
                                          workers, cap));
      },
      py::arg("n"), py::arg("alg"), py::arg("workers") = 1,
      py::arg("cap") = py::none(), py::arg("fill") = "zeroed",
      py::arg("constant") = 0, py::arg("fill_seed") = 0,
      "Exhaustive totals over all n**n sequences.");

  m.def(
      "enumerate_bucket_stats",
      [](std::int64_t n, int workers, std::optional<int> cap) {
        const BucketExactStats s = enumerate_bucket_stats(n, workers, cap);
        py::dict d;
        d["n"] = s.n;
        d["total_inputs"] = s.total_inputs;
        d["mean_occupancy"] = s.mean_occupancy;
        d["mean_last_row_comparisons"] = s.mean_last_row_comparisons;
        return d;
      },
      py::arg("n"), py::arg("workers") = 1, py::arg("cap") = py::none(),
      "Exhaustive per-row bucket occupancy and last-row probe means.");

  m.def("good_count", &good_count, py::arg("n"),
        "Number of repetition-free sequences, n! (n <= 20).");
  m.def("total_inputs", &total_inputs, py::arg("n"),
        "Number of sequences over {1..n}, n**n (n <= 15).");
  m.def("exact_decimal", &exact_decimal, py::arg("numerator"),
        py::arg("denominator"), py::arg("places") = 12,
        "Render numerator/denominator rounded half away from zero.");

  m.def("formula_names", &formula_names, "Names accepted by evaluate_formula.");
  m.def("evaluate_formula", &evaluate_formula, py::arg("name"), py::arg("n"),
        "Evaluate one closed form at n.");

  m.def(
      "sample",
      [](std::int64_t n, const std::string& alg, std::uint64_t samples,
         std::uint64_t seed, int workers, const std::string& fill,
         std::int64_t constant, std::uint64_t fill_seed) {
        return sample_dict(sample(n, algorithm_arg(alg), samples, seed,
                                  policy_arg(fill, constant, fill_seed), workers));
      },
      py::arg("n"), py::arg("alg"), py::arg("samples") = 100000,
      py::arg("seed") = 42, py::arg("workers") = 1, py::arg("fill") = "zeroed",
      py::arg("constant") = 0, py::arg("fill_seed") = 0,
      "Seeded Monte Carlo summary; identical for any worker count.");

  m.def(
      "sweep",
      [](const std::vector<std::int64_t>& ns, const std::string& alg,
         std::uint64_t samples, std::uint64_t seed, int workers) {
        py::list out;
        for (const auto& s : sweep(ns, algorithm_arg(alg), samples, seed, {}, workers)) {
          out.append(sample_dict(s));
        }
        return out;
      },
      py::arg("ns"), py::arg("alg"), py::arg("samples") = 100000,
      py::arg("seed") = 42, py::arg("workers") = 1,
      "Sample each n with a seed derived from the base seed.");

  m.def(
      "fit",
      [](const std::vector<std::pair<std::int64_t, double>>& raw) {
        std::vector<FitPoint> points;
        points.reserve(raw.size());
        for (const auto& [n, mean] : raw) points.push_back({n, mean});
        const FitResult f = fit_sqrtnlogn(points);
        py::dict d;
        d["a"] = f.a;
        d["b"] = f.b;
        d["residual_rms"] = f.residual_rms;
        return d;
      },
      py::arg("points"),
      "Least squares for mean = a*sqrt(n)*log2(n) + b over (n, mean) pairs.");

  m.def(
      "reproduce",
      [](int table_number, int max_n_exact, std::uint64_t samples,
         std::uint64_t seed, int workers) {
        ReproductionBudget budget;
        budget.max_n_exact = max_n_exact;
        budget.sample_count = samples;
        budget.seed = seed;
        budget.workers = workers;
        const TableDiff diff = reproduce(table_number, budget);
        py::list cells;
        for (const auto& cell : diff.cells) {
          py::dict d;
          d["n"] = cell.row_n;
          d["column"] = cell.column;
          d["status"] = cell.status == CellStatus::Pass      ? "pass"
                        : cell.status == CellStatus::Fail    ? "fail"
                        : cell.status == CellStatus::Skipped ? "skipped"
                                                             : "info";
          d["expected"] = cell.expected;
          d["actual"] = cell.actual;
          d["note"] = cell.note;
          cells.append(d);
        }
        py::dict d;
        d["table_id"] = diff.table_id;
        d["pass"] = diff.pass;
        d["cells"] = cells;
        return d;
      },
      py::arg("table_number"), py::arg("max_n_exact") = 8,
      py::arg("samples") = 100000, py::arg("seed") = 42, py::arg("workers") = 1,
      "Re-derive one reference table and diff it cell by cell.");

  m.def(
      "discrepancy_ledger",
      []() {
        py::list out;
        for (const auto& e : discrepancy_ledger()) {
          py::dict d;
          d["id"] = e.id;
          d["location"] = e.location;
          d["issue"] = e.issue;
          d["resolution"] = e.resolution;
          out.append(d);
        }
        return out;
      },
      "Every judgment call made against the source tables, with resolutions.");
}
