#include "hhbounds/identity.hpp"

#include <algorithm>
#include <cmath>

#include "hhbounds/errors.hpp"

namespace hhb {
namespace {

double clamp_tolerance(double tol) { return std::max(tol, numint::kMinTolerance); }

std::vector<double> interior_sorted(std::vector<double> pts) {
  std::erase_if(pts, [](double t) { return !(t > 0.0 && t < 1.0); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double rule_terms(const TestFunction& fn, const Interval& iv, double alpha, double lambda) {
  const double x = (1.0 - alpha) * iv.b() + alpha * iv.a();
  return iv.width() * (alpha - 0.5) * fn.df(x) + (1.0 - lambda) * fn.f(x) +
         lambda * (alpha * fn.f(iv.a()) + (1.0 - alpha) * fn.f(iv.b()));
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

double kernel_k(double t, double alpha, double lambda) {
  if (t <= 1.0 - alpha) {
    return 2.0 * alpha * lambda * t - t * t;
  }
  return (1.0 - t) * (t - 1.0 + 2.0 * lambda * (1.0 - alpha));
}

double kernel_jump(double alpha, double lambda) {
  const double t = 1.0 - alpha;
  const double left = 2.0 * alpha * lambda * t - t * t;
  const double right = (1.0 - t) * (t - 1.0 + 2.0 * lambda * (1.0 - alpha));
  return right - left;
}

std::vector<double> kernel_breakpoints(double alpha, double lambda) {
  return interior_sorted({2.0 * alpha * lambda, 1.0 - alpha, 1.0 - 2.0 * lambda * (1.0 - alpha)});
}

numint::QuadResult mean_value(const TestFunction& fn, const Interval& iv, double tol) {
  fn.require_domain(iv);
  if (fn.antiderivative) {
    const auto& F = *fn.antiderivative;
    numint::QuadResult r;
    r.value = (F(iv.b()) - F(iv.a())) / iv.width();
    r.converged = true;
    return r;
  }
  numint::QuadResult r = numint::integrate(fn.f, iv, clamp_tolerance(tol * iv.width()));
  r.value /= iv.width();
  r.error_estimate /= iv.width();
  return r;
}

double lhs_functional(const TestFunction& fn, const Interval& iv, double alpha, double lambda,
                      double tol) {
  check_unit(alpha, "alpha");
  check_unit(lambda, "lambda");
  const numint::QuadResult mean = mean_value(fn, iv, tol);
  return rule_terms(fn, iv, alpha, lambda) - mean.value;
}

numint::QuadResult rhs_integral(const TestFunction& fn, const Interval& iv, double alpha,
                                double lambda, double tol) {
  check_unit(alpha, "alpha");
  check_unit(lambda, "lambda");
  fn.require_domain(iv);
  const double scale = 0.5 * iv.width() * iv.width();
  auto integrand = [&](double t) { return kernel_k(t, alpha, lambda) * fn.d2f(iv.at(t)); };
  const std::vector<double> breaks = kernel_breakpoints(alpha, lambda);
  numint::QuadResult r =
      numint::integrate_with_breakpoints(integrand, Interval(0.0, 1.0), breaks, clamp_tolerance(tol / scale));
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

IdentityReport identity_residual(const TestFunction& fn, const Interval& iv, double alpha,
                                 double lambda, double tol) {
  const numint::QuadResult mean = mean_value(fn, iv, tol);
  const numint::QuadResult rhs = rhs_integral(fn, iv, alpha, lambda, tol);
  IdentityReport report{fn.name, Params(alpha, lambda), iv};
  report.lhs = rule_terms(fn, iv, alpha, lambda) - mean.value;
  report.rhs = rhs.value;
  report.residual = std::abs(report.lhs - report.rhs);
  report.oracle_error = mean.error_estimate + rhs.error_estimate;
  return report;
}

double averaged_identity_residual(const TestFunction& fn, const Interval& iv, double lambda,
                                  std::size_t n_alpha, double tol) {
  check_unit(lambda, "lambda");
  if (n_alpha < 3 || n_alpha % 2 == 0) {
    throw ParameterError("composite Simpson over alpha needs an odd node count >= 3");
  }
  const double mean = mean_value(fn, iv, tol).value;
  const double h = 1.0 / static_cast<double>(n_alpha - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < n_alpha; ++i) {
    const double alpha = (i + 1 == n_alpha) ? 1.0 : h * static_cast<double>(i);
    const double weight = (i == 0 || i + 1 == n_alpha) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += weight * (rule_terms(fn, iv, alpha, lambda) - mean);
  }
  const double averaged = sum * h / 3.0;
  const double closed_form = (lambda - 1.0) * (0.5 * (fn.f(iv.a()) + fn.f(iv.b())) - mean);
  return std::abs(averaged - closed_form);
}

double reference_kernel(double t, double lambda) {
  if (t <= 0.5) {
    return 0.5 * t * (t - lambda);
  }
  return 0.5 * (1.0 - t) * (1.0 - lambda - t);
}

double reference_lhs(const TestFunction& fn, const Interval& iv, double lambda, double tol) {
  check_unit(lambda, "lambda");
  const double mean = mean_value(fn, iv, tol).value;
  return (lambda - 1.0) * fn.f(iv.midpoint()) - lambda * 0.5 * (fn.f(iv.a()) + fn.f(iv.b())) + mean;
}

numint::QuadResult reference_rhs(const TestFunction& fn, const Interval& iv, double lambda,
                                 double tol) {
  check_unit(lambda, "lambda");
  fn.require_domain(iv);
  const double scale = iv.width() * iv.width();
  // Argument runs from b down to a.
  auto integrand = [&](double t) { return reference_kernel(t, lambda) * fn.d2f(iv.at(1.0 - t)); };
  const std::vector<double> breaks = interior_sorted({lambda, 0.5, 1.0 - lambda});
  numint::QuadResult r =
      numint::integrate_with_breakpoints(integrand, Interval(0.0, 1.0), breaks, clamp_tolerance(tol / scale));
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

}  // namespace hhb
