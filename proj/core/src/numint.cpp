#include "hhbounds/numint.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hhb::numint {
namespace {

constexpr unsigned kKronrodPoints = 21;
using Rule = boost::math::quadrature::gauss_kronrod<double, kKronrodPoints>;

struct Cell {
  double lo;
  double hi;
  double value;
  double error;
};

struct WorseFirst {
  bool operator()(const Cell& x, const Cell& y) const { return x.error < y.error; }
};

void check_tolerance(double tol) {
  if (!(tol >= kMinTolerance) || !std::isfinite(tol)) {
    std::ostringstream msg;
    msg << "integration tolerance must be >= " << kMinTolerance << ", got " << tol;
    throw ParameterError(msg.str());
  }
}

class CountingIntegrand {
public:
  explicit CountingIntegrand(const Integrand& g) : g_(g) {}

  double operator()(double x) {
    ++evaluations_;
    const double y = g_(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand is not finite at x = " << x;
      throw DomainError(msg.str());
    }
    return y;
  }

  std::size_t evaluations() const { return evaluations_; }

private:
  const Integrand& g_;
  std::size_t evaluations_ = 0;
};

Cell evaluate_cell(CountingIntegrand& g, double lo, double hi) {
  double error = 0.0;
  auto ref = [&g](double x) { return g(x); };
  const double value = Rule::integrate(ref, lo, hi, 0, 0.0, &error);
  return Cell{lo, hi, value, error};
}

}  // namespace

QuadResult integrate(const Integrand& g, const Interval& iv, const QuadOptions& options) {
  check_tolerance(options.tol);
  CountingIntegrand counted(g);

  std::priority_queue<Cell, std::vector<Cell>, WorseFirst> active;
  std::vector<Cell> settled;  // cells too narrow to bisect further

  active.push(evaluate_cell(counted, iv.a(), iv.b()));
  double total_error = active.top().error;

  auto summarize = [&](bool converged) {
    std::vector<Cell> cells = settled;
    auto copy = active;
    while (!copy.empty()) {
      cells.push_back(copy.top());
      copy.pop();
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.lo < y.lo; });
    QuadResult result;
    for (const Cell& c : cells) {
      result.value += c.value;
      result.error_estimate += c.error;
    }
    result.evaluations = counted.evaluations();
    result.converged = converged && result.error_estimate <= options.tol;
    return result;
  };

  while (total_error > options.tol) {
    if (active.empty()) {
      break;
    }
    if (counted.evaluations() + 2 * kKronrodPoints > options.max_evaluations) {
      QuadResult partial = summarize(false);
      std::ostringstream msg;
      msg << "integration did not converge within " << options.max_evaluations
          << " evaluations (error estimate " << partial.error_estimate << ", tol " << options.tol
          << ")";
      throw OracleFailure(msg.str(), partial);
    }
    Cell worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      settled.push_back(worst);
      continue;
    }
    Cell left = evaluate_cell(counted, worst.lo, mid);
    Cell right = evaluate_cell(counted, mid, worst.hi);
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);

    if (total_error <= options.tol) {
      // Re-sum to shed accumulated rounding in the running total.
      total_error = 0.0;
      for (const Cell& c : settled) total_error += c.error;
      auto copy = active;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }

  QuadResult result = summarize(true);
  if (!result.converged) {
    std::ostringstream msg;
    msg << "integration stalled at error estimate " << result.error_estimate << " (tol "
        << options.tol << ")";
    throw OracleFailure(msg.str(), result);
  }
  return result;
}

QuadResult integrate(const Integrand& g, const Interval& iv, double tol) {
  return integrate(g, iv, QuadOptions{tol, kDefaultEvaluationBudget});
}

QuadResult integrate_with_breakpoints(const Integrand& g, const Interval& iv,
                                      std::span<const double> breaks, double tol) {
  check_tolerance(tol);
  if (!std::is_sorted(breaks.begin(), breaks.end())) {
    throw ParameterError("breakpoints must be sorted");
  }
  std::vector<double> nodes{iv.a()};
  for (double x : breaks) {
    if (!iv.contains(x)) {
      std::ostringstream msg;
      msg << "breakpoint " << x << " lies outside [" << iv.a() << ", " << iv.b() << "]";
      throw ParameterError(msg.str());
    }
    if (x > nodes.back() && x < iv.b()) {
      nodes.push_back(x);
    }
  }
  nodes.push_back(iv.b());

  const std::size_t segments = nodes.size() - 1;
  const double segment_tol = std::max(tol / static_cast<double>(segments), kMinTolerance);
  QuadResult total;
  total.converged = true;
  for (std::size_t i = 0; i < segments; ++i) {
    const QuadResult part = integrate(g, Interval(nodes[i], nodes[i + 1]), segment_tol);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
    total.converged = total.converged && part.converged;
  }
  return total;
}

double finite_diff_second(const Integrand& g, double x, double h) {
  if (!(h > 0.0)) {
    throw ParameterError("finite difference step must be positive");
  }
  const double value = (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "second difference is not finite at x = " << x << " (h = " << h << ")";
    throw DomainError(msg.str());
  }
  return value;
}

double finite_diff_first(const Integrand& g, double x, double h) {
  if (!(h > 0.0)) {
    throw ParameterError("finite difference step must be positive");
  }
  const double value = (g(x + h) - g(x - h)) / (2.0 * h);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "first difference is not finite at x = " << x << " (h = " << h << ")";
    throw DomainError(msg.str());
  }
  return value;
}

}  // namespace hhb::numint
