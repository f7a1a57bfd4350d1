#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leo/core.hpp"

namespace leo::bench {

/// Identifies one closed-form test objective. `n` applies to the N-dimensional
/// families; `shift` only to the shifted Rosenbrock variant.
struct BenchmarkId {
  std::string name;
  std::size_t n = 2;
  double shift = 0.2913;
};

/// Exact closed-form value(s). ZDT ids return (f1, f2); everything else a
/// single value. Throws std::invalid_argument on dimension mismatch and
/// std::domain_error for ZDT inputs outside [0, 1].
std::vector<double> evaluate_benchmark(const BenchmarkId& id, const std::vector<double>& x);

/// Analytic gradient where implemented, otherwise central finite differences
/// with step h_i = 1e-6 * (1 + |x_i|). Unsupported for ZDT.
std::vector<double> gradient_benchmark(const BenchmarkId& id, const std::vector<double>& x);

/// Central finite-difference gradient of an arbitrary scalar objective;
/// evaluates 2*num_vars times. Used as the fallback above and as a test
/// oracle against the analytic forms.
std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, const std::vector<double>& x);

/// Reference Pareto front sampled on the g=1 surface. ZDT1: f2 = 1 - sqrt(f1).
/// ZDT3: the analytic curve restricted to its nondominated segments.
std::vector<std::pair<double, double>> zdt_true_front(const BenchmarkId& id,
                                                      std::size_t num_points);

/// Builds the ObjectiveSpec (bounds, evaluator, gradient, known minima) for a
/// benchmark id. Unbounded domains get the finite init/prompt box [-5, 10]^n.
ObjectiveSpec make_benchmark_spec(const BenchmarkId& id);

/// Names accepted by make_benchmark_spec / evaluate_benchmark.
std::vector<std::string> benchmark_names();

}  // namespace leo::bench
