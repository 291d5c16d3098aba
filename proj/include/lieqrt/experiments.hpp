#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "lieqrt/lie_reps.hpp"
#include "lieqrt/report.hpp"

namespace lieqrt {

enum class RepKind { Su2, So2n };

struct RepSpec {
  RepKind kind = RepKind::Su2;
  /// 2s for su2, number of modes for so2n.
  int param = 10;

  static RepSpec su2(double s);
  static RepSpec so2n(int n) { return {RepKind::So2n, n}; }

  std::string label() const;
  LieRep build() const;
};

/// Inclusive grid lo, lo + step, ..., hi with `count` points.
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  std::vector<double> points() const;
  /// Parses "lo:hi:count".
  static Grid parse(const std::string& text);
  std::string str() const;
};

struct ExperimentConfig {
  RepSpec rep;
  std::uint64_t seed = 0;
  int trials = 100;
  double epsilon = 0.02;
  int steps = 5;
  double cfo_scale = 1.0;
  /// Empty means the experiment default (all m >= 0 for the spin).
  std::vector<double> m_values;
  Grid alpha{-2.0, 2.0, 41};
  Grid eta{0.0, 3.0, 61};
  int workers = 1;
  /// Report-only threshold; the hard invariants below never depend on it.
  double tolerance = 1e-8;

  void validate() const;
  nlohmann::json to_json() const;
};

/// Hard per-row thresholds.
inline constexpr double kFreeTol = 1e-8;
inline constexpr double kBoundTol = 1e-9;
inline constexpr double kMarginTol = 1e-8;
inline constexpr double kOracleTol = 1e-8;

/// Runs body(i) for i in [0, count) on up to `workers` threads. Every index
/// is executed exactly once; the exception of the lowest failing index is
/// rethrown after all workers join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

/// m >= 0 weight labels of spin s: 0, 1, ..., s or 1/2, 3/2, ..., s.
std::vector<double> nonnegative_weights(double s);

ExperimentReport run_thm1(const ExperimentConfig& cfg);
ExperimentReport run_fig2(const ExperimentConfig& cfg);
ExperimentReport run_fig3(const ExperimentConfig& cfg);
ExperimentReport run_closed_form_scan(const ExperimentConfig& cfg);
ExperimentReport run_structures_suite();

/// Invariant suites of every module: one row per check.
ExperimentReport run_verify(std::uint64_t seed);

}  // namespace lieqrt
