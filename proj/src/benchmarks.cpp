#include "leo/benchmarks.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace leo::bench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dim(const std::vector<double>& x, std::size_t n, const std::string& name) {
  if (x.size() != n)
    throw std::invalid_argument(name + ": expected " + std::to_string(n) + " variables, got " +
                                std::to_string(x.size()));
}

double scaled_sphere(double x, double y) { return x * x + y * y * y * y; }

double himmelblau(double x, double y) {
  double a = x * x + y - 11.0;
  double b = x + y * y - 7.0;
  return a * a + b * b;
}

double sphere2d(double x, double y) { return x * x + y * y; }

double beale(double x, double y) {
  double t1 = 1.5 - x + x * y;
  double t2 = 2.25 - x + x * y * y;
  double t3 = 2.625 - x + x * y * y * y;
  return t1 * t1 + t2 * t2 + t3 * t3;
}

double goldstein_price(double x, double y) {
  double p = x + y + 1.0;
  double q = 19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y;
  double r = 2.0 * x - 3.0 * y;
  double s = 18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y;
  return (1.0 + p * p * q) * (30.0 + r * r * s);
}

// Sum over consecutive pairs; identical to the 2D form at n = 2.
double rosenbrock(const std::vector<double>& x) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double a = x[i + 1] - x[i] * x[i];
    double b = 1.0 - x[i];
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

double rosenbrock_shifted(const std::vector<double>& x, double a) {
  std::vector<double> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - a;
  return rosenbrock(z);
}

std::vector<double> rosenbrock_grad(const std::vector<double>& x) {
  std::vector<double> g(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double a = x[i + 1] - x[i] * x[i];
    g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
    g[i + 1] += 200.0 * a;
  }
  return g;
}

double zdt_g(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
  return 1.0 + 9.0 / (static_cast<double>(x.size()) - 1.0) * s;
}

void require_zdt_domain(const std::vector<double>& x) {
  for (double v : x)
    if (v < 0.0 || v > 1.0) throw std::domain_error("ZDT input outside [0, 1]");
}

std::vector<double> zdt1(const std::vector<double>& x) {
  require_zdt_domain(x);
  double f1 = x[0];
  double g = zdt_g(x);
  return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

std::vector<double> zdt3(const std::vector<double>& x) {
  require_zdt_domain(x);
  double f1 = x[0];
  double g = zdt_g(x);
  return {f1, g * (1.0 - std::sqrt(f1 / g) -
                   (f1 / g) * std::sin(10.0 * std::numbers::pi * f1))};
}

}  // namespace

std::vector<double> evaluate_benchmark(const BenchmarkId& id, const std::vector<double>& x) {
  const std::string& n = id.name;
  if (n == "scaled_sphere") {
    require_dim(x, 2, n);
    return {scaled_sphere(x[0], x[1])};
  }
  if (n == "himmelblau") {
    require_dim(x, 2, n);
    return {himmelblau(x[0], x[1])};
  }
  if (n == "rosenbrock2d") {
    require_dim(x, 2, n);
    return {rosenbrock(x)};
  }
  if (n == "sphere2d") {
    require_dim(x, 2, n);
    return {sphere2d(x[0], x[1])};
  }
  if (n == "beale") {
    require_dim(x, 2, n);
    return {beale(x[0], x[1])};
  }
  if (n == "goldstein_price") {
    require_dim(x, 2, n);
    return {goldstein_price(x[0], x[1])};
  }
  if (n == "rosenbrock_nd") {
    require_dim(x, id.n, n);
    return {rosenbrock(x)};
  }
  if (n == "rosenbrock_nd_shifted") {
    require_dim(x, id.n, n);
    return {rosenbrock_shifted(x, id.shift)};
  }
  if (n == "zdt1") {
    require_dim(x, id.n, n);
    return zdt1(x);
  }
  if (n == "zdt3") {
    require_dim(x, id.n, n);
    return zdt3(x);
  }
  throw std::invalid_argument("unknown benchmark: " + n);
}

std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, const std::vector<double>& x) {
  std::vector<double> g(x.size());
  std::vector<double> xp = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double h = 1e-6 * (1.0 + std::fabs(x[i]));
    xp[i] = x[i] + h;
    double fp = f(xp);
    xp[i] = x[i] - h;
    double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

std::vector<double> gradient_benchmark(const BenchmarkId& id, const std::vector<double>& x) {
  const std::string& n = id.name;
  if (n == "zdt1" || n == "zdt3")
    throw std::invalid_argument("gradient unsupported for multi-objective benchmark " + n);

  if (n == "sphere2d") {
    require_dim(x, 2, n);
    return {2.0 * x[0], 2.0 * x[1]};
  }
  if (n == "scaled_sphere") {
    require_dim(x, 2, n);
    return {2.0 * x[0], 4.0 * x[1] * x[1] * x[1]};
  }
  if (n == "himmelblau") {
    require_dim(x, 2, n);
    double a = x[0] * x[0] + x[1] - 11.0;
    double b = x[0] + x[1] * x[1] - 7.0;
    return {4.0 * x[0] * a + 2.0 * b, 2.0 * a + 4.0 * x[1] * b};
  }
  if (n == "beale") {
    require_dim(x, 2, n);
    double y = x[1];
    double t1 = 1.5 - x[0] + x[0] * y;
    double t2 = 2.25 - x[0] + x[0] * y * y;
    double t3 = 2.625 - x[0] + x[0] * y * y * y;
    return {2.0 * t1 * (y - 1.0) + 2.0 * t2 * (y * y - 1.0) + 2.0 * t3 * (y * y * y - 1.0),
            2.0 * t1 * x[0] + 4.0 * t2 * x[0] * y + 6.0 * t3 * x[0] * y * y};
  }
  if (n == "rosenbrock2d") {
    require_dim(x, 2, n);
    return rosenbrock_grad(x);
  }
  if (n == "rosenbrock_nd") {
    require_dim(x, id.n, n);
    return rosenbrock_grad(x);
  }
  if (n == "rosenbrock_nd_shifted") {
    require_dim(x, id.n, n);
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - id.shift;
    return rosenbrock_grad(z);
  }

  // goldstein_price and anything without an analytic form
  auto scalar = [&](const std::vector<double>& p) { return evaluate_benchmark(id, p)[0]; };
  return finite_difference_gradient(scalar, x);
}

std::vector<std::pair<double, double>> zdt_true_front(const BenchmarkId& id,
                                                      std::size_t num_points) {
  if (num_points < 2) throw std::invalid_argument("zdt_true_front: need >= 2 points");
  std::vector<std::pair<double, double>> pts;
  if (id.name == "zdt1") {
    pts.reserve(num_points);
    for (std::size_t i = 0; i < num_points; ++i) {
      double f1 = static_cast<double>(i) / static_cast<double>(num_points - 1);
      pts.emplace_back(f1, 1.0 - std::sqrt(f1));
    }
    return pts;
  }
  if (id.name == "zdt3") {
    // Analytic g=1 curve filtered to nondominated points: f1 increases along
    // the curve, so a point survives iff its f2 is below the running minimum.
    double run_min = kInf;
    for (std::size_t i = 0; i < num_points; ++i) {
      double f1 = static_cast<double>(i) / static_cast<double>(num_points - 1);
      double f2 = 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * std::numbers::pi * f1);
      if (f2 < run_min) {
        run_min = f2;
        pts.emplace_back(f1, f2);
      }
    }
    return pts;
  }
  throw std::invalid_argument("zdt_true_front: unsupported id " + id.name);
}

ObjectiveSpec make_benchmark_spec(const BenchmarkId& id) {
  ObjectiveSpec spec;
  spec.name = id.name;
  const std::string& n = id.name;

  auto box = [&](double lo, double hi, std::size_t dims) {
    spec.num_vars = dims;
    spec.lower.assign(dims, lo);
    spec.upper.assign(dims, hi);
    spec.init_lower = spec.lower;
    spec.init_upper = spec.upper;
  };
  auto unbounded = [&](std::size_t dims) {
    spec.num_vars = dims;
    spec.lower.assign(dims, -kInf);
    spec.upper.assign(dims, kInf);
    spec.init_lower.assign(dims, -5.0);
    spec.init_upper.assign(dims, 10.0);
  };

  if (n == "scaled_sphere") {
    box(-1.0, 4.0, 2);
    spec.known_minimum = {0.0, {{0.0, 0.0}}};
  } else if (n == "himmelblau") {
    box(-5.0, 5.0, 2);
    spec.known_minimum = {0.0,
                          {{3.0, 2.0},
                           {-2.805118, 3.131312},
                           {-3.779310, -3.283186},
                           {3.584428, -1.848126}}};
  } else if (n == "rosenbrock2d") {
    unbounded(2);
    spec.known_minimum = {0.0, {{1.0, 1.0}}};
  } else if (n == "sphere2d") {
    unbounded(2);
    spec.known_minimum = {0.0, {{0.0, 0.0}}};
  } else if (n == "beale") {
    box(-4.5, 4.5, 2);
    spec.known_minimum = {0.0, {{3.0, 0.5}}};
  } else if (n == "goldstein_price") {
    box(-2.0, 2.0, 2);
    spec.known_minimum = {3.0, {{0.0, -1.0}}};
  } else if (n == "rosenbrock_nd") {
    unbounded(id.n);
    spec.known_minimum = {0.0, {std::vector<double>(id.n, 1.0)}};
  } else if (n == "rosenbrock_nd_shifted") {
    unbounded(id.n);
    spec.known_minimum = {0.0, {std::vector<double>(id.n, 1.0 + id.shift)}};
  } else if (n == "zdt1" || n == "zdt3") {
    box(0.0, 1.0, id.n);
    spec.num_objectives = 2;
  } else {
    throw std::invalid_argument("unknown benchmark: " + n);
  }

  BenchmarkId captured = id;
  spec.evaluate = [captured](const std::vector<double>& x) {
    return evaluate_benchmark(captured, x);
  };
  if (spec.num_objectives == 1) {
    spec.gradient = [captured](const std::vector<double>& x) {
      return gradient_benchmark(captured, x);
    };
  }
  spec.validate();
  return spec;
}

std::vector<std::string> benchmark_names() {
  return {"scaled_sphere", "himmelblau",    "rosenbrock2d",
          "sphere2d",      "beale",         "goldstein_price",
          "rosenbrock_nd", "rosenbrock_nd_shifted", "zdt1", "zdt3"};
}

}  // namespace leo::bench
