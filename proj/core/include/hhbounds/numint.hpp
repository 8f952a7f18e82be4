#ifndef HHBOUNDS_NUMINT_HPP
#define HHBOUNDS_NUMINT_HPP

// Reference integrator used to cross-check every closed form in the library.
// Nothing in here knows about kernels, coefficients or bounds.

#include <cstddef>
#include <functional>
#include <span>

#include "hhbounds/errors.hpp"
#include "hhbounds/interval.hpp"

namespace hhb::numint {

using Integrand = std::function<double(double)>;

inline constexpr double kFormulaTolerance = 1e-12;
inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kMinTolerance = 1e-14;
inline constexpr std::size_t kDefaultEvaluationBudget = 10'000'000;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Raised when the evaluation budget runs out before the error estimate drops below tol.
class OracleFailure : public Error {
public:
  OracleFailure(const std::string& what, QuadResult partial) : Error(what), partial_(partial) {}
  const QuadResult& partial() const noexcept { return partial_; }

private:
  QuadResult partial_;
};

struct QuadOptions {
  double tol = kFormulaTolerance;
  std::size_t max_evaluations = kDefaultEvaluationBudget;
};

/// Globally adaptive 10/21-point Gauss-Kronrod quadrature. Cells are bisected
/// worst-first until the summed per-cell |K - G| estimates fall below tol.
/// Throws OracleFailure on budget exhaustion and DomainError on a non-finite sample.
QuadResult integrate(const Integrand& g, const Interval& iv, const QuadOptions& options);
QuadResult integrate(const Integrand& g, const Interval& iv, double tol = kFormulaTolerance);

/// Integrates each segment between consecutive breakpoints separately; values
/// and error estimates add. Breakpoints must be sorted and lie inside iv;
/// ones that coincide with an endpoint or a neighbour are dropped.
QuadResult integrate_with_breakpoints(const Integrand& g, const Interval& iv,
                                      std::span<const double> breaks,
                                      double tol = kFormulaTolerance);

/// (g(x+h) - 2 g(x) + g(x-h)) / h^2
double finite_diff_second(const Integrand& g, double x, double h);

/// (g(x+h) - g(x-h)) / (2h)
double finite_diff_first(const Integrand& g, double x, double h);

}  // namespace hhb::numint

#endif  // HHBOUNDS_NUMINT_HPP
