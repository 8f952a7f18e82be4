#ifndef HHBOUNDS_IDENTITY_HPP
#define HHBOUNDS_IDENTITY_HPP

// The error representation behind the (alpha, lambda) rule family:
//
//   rule(f) - mean(f) = (b-a)^2/2 * int_0^1 k(t) f''(t b + (1-t) a) dt,
//
// where rule(f) = (b-a)(alpha-1/2) f'(x) + (1-lambda) f(x)
//                 + lambda (alpha f(a) + (1-alpha) f(b)),  x = (1-alpha) b + alpha a.

#include <string>
#include <vector>

#include "hhbounds/coeffs.hpp"
#include "hhbounds/funcspace.hpp"
#include "hhbounds/numint.hpp"

namespace hhb {

/// k(t) = 2 alpha lambda t - t^2 on [0, 1-alpha], (1-t)(t - 1 + 2 lambda (1-alpha)) on
/// [1-alpha, 1]. At t = 1-alpha the left branch is used.
double kernel_k(double t, double alpha, double lambda);

/// Right branch minus left branch at t = 1-alpha. Equals 1 - 2 alpha; the
/// derivative term of the rule absorbs it, so k is continuous only at alpha = 1/2.
double kernel_jump(double alpha, double lambda);

/// Kinks and sign changes of k inside (0, 1): {2 alpha lambda, 1-alpha, 1 - 2 lambda (1-alpha)}.
std::vector<double> kernel_breakpoints(double alpha, double lambda);

/// (1/(b-a)) int_a^b f. Exact (error 0) when the function carries an
/// antiderivative, otherwise the oracle at tol.
numint::QuadResult mean_value(const TestFunction& fn, const Interval& iv,
                              double tol = numint::kFormulaTolerance);

/// rule(f) - mean(f), the left-hand side of the identity.
double lhs_functional(const TestFunction& fn, const Interval& iv, double alpha, double lambda,
                      double tol = numint::kFormulaTolerance);

/// (b-a)^2/2 * int_0^1 k(t) f''(t b + (1-t) a) dt, integrated piecewise between the
/// kernel breakpoints. The error estimate is scaled along with the value.
numint::QuadResult rhs_integral(const TestFunction& fn, const Interval& iv, double alpha,
                                double lambda, double tol = numint::kIdentityTolerance);

struct IdentityReport {
  std::string function;
  Params params;
  Interval interval;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;      ///< |lhs - rhs|, never clamped
  double oracle_error = 0.0;  ///< summed error estimates of both sides
};

IdentityReport identity_residual(const TestFunction& fn, const Interval& iv, double alpha,
                                 double lambda, double tol = numint::kIdentityTolerance);

/// Integrates lhs_functional over alpha in [0, 1] with composite Simpson on
/// n_alpha (odd, >= 3) nodes and returns its distance to the closed form
/// (lambda - 1) ((f(a) + f(b))/2 - mean(f)).
double averaged_identity_residual(const TestFunction& fn, const Interval& iv, double lambda,
                                  std::size_t n_alpha, double tol = numint::kFormulaTolerance);

// Earlier midpoint/trapezoid identity that the family reduces to at alpha = 1/2:
//   (lambda-1) f((a+b)/2) - lambda (f(a)+f(b))/2 + mean(f)
//     = (b-a)^2 int_0^1 k_ref(t) f''(t a + (1-t) b) dt.

/// t(t - lambda)/2 on [0, 1/2], (1-t)(1 - lambda - t)/2 on [1/2, 1].
double reference_kernel(double t, double lambda);

double reference_lhs(const TestFunction& fn, const Interval& iv, double lambda,
                     double tol = numint::kFormulaTolerance);

numint::QuadResult reference_rhs(const TestFunction& fn, const Interval& iv, double lambda,
                                 double tol = numint::kIdentityTolerance);

}  // namespace hhb

#endif  // HHBOUNDS_IDENTITY_HPP
