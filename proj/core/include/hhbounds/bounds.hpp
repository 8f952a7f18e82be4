#ifndef HHBOUNDS_BOUNDS_HPP
#define HHBOUNDS_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hhbounds/coeffs.hpp"
#include "hhbounds/funcspace.hpp"
#include "hhbounds/interval.hpp"

namespace hhb {

/// |f''(a)| and |f''(b)|, the only information about f the bounds consume.
struct EndpointCurvature {
  double at_a = 0.0;
  double at_b = 0.0;

  static EndpointCurvature of(const TestFunction& fn, const Interval& iv);
};

/// T2: |f''| convex. T3: |f''|^q convex, power-mean form. T4: |f''|^q convex,
/// Hoelder form (q > 1). REF_G2/REF_G3: the older alpha = 1/2 bounds.
enum class Theorem { T2, T3, T4, REF_G2, REF_G3 };

std::string_view to_string(Theorem t) noexcept;
/// Accepts "T2", "t2", "REF_G2", "ref_g2", ... ; throws ParameterError otherwise.
Theorem parse_theorem(std::string_view text);

/// ((b-a)^2/2) [(gamma_b + mu_b) |f''(b)| + (gamma_a + mu_a) |f''(a)|] with the
/// regime-selected gamma and mu pairs.
double bound_t2(const EndpointCurvature& c, const Interval& iv, double alpha, double lambda);
double bound_t2(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs);

/// ((b-a)^2/2) [tau^{1-1/q} (gamma_b B^q + gamma_a A^q)^{1/q} + z^{1-1/q} (mu_b B^q + mu_a A^q)^{1/q}].
/// At q = 1 this is T2 and takes the T2 arithmetic path.
double bound_t3(const EndpointCurvature& c, const Interval& iv, double alpha, double lambda, double q);
double bound_t3(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs);

/// ((b-a)^2/2) [phi^{1/p} (eps1 B^q + beta_a A^q)^{1/q} + psi^{1/p} (beta_b B^q + eps2 A^q)^{1/q}].
/// Throws UnsupportedError when q == 1.
double bound_t4(const EndpointCurvature& c, const Interval& iv, double alpha, double lambda, double q);
double bound_t4(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs);

namespace detail {
/// The general power-mean expression without the q = 1 shortcut.
double bound_t3_general(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs);
}  // namespace detail

/// Both older bounds at alpha = 1/2. Each has a lambda <= 1/2 and a lambda >= 1/2 branch.
struct ReferenceBounds {
  double g2 = 0.0;
  double g3 = 0.0;
};

enum class ReferenceBranch { automatic, lower, upper };

ReferenceBounds reference_bounds(const EndpointCurvature& c, const Interval& iv, double lambda,
                                 double q, ReferenceBranch branch = ReferenceBranch::automatic);

struct BoundOptions {
  /// Multiplies the bound before it is reported. Anything but 1 is a deliberate fault.
  double coefficient_scale = 1.0;
  std::size_t convexity_samples = kDefaultConvexitySamples;
  double tol = 1e-12;
};

struct BoundReport {
  Theorem theorem = Theorem::T2;
  std::string function;
  Params params{0.5, 0.0};
  Interval interval{0.0, 1.0};
  Regime regime;
  double lhs_abs = 0.0;
  double bound = 0.0;
  double slack = 0.0;  ///< bound - lhs_abs
  bool hypothesis_ok = false;
  double worst_violation = 0.0;
};

inline constexpr double kSlackTolerance = 1e-10;

/// Computes |lhs| through the identity module, the convexity verdict (|f''| for
/// T2 and REF_G2, |f''|^q otherwise) and the requested bound. A failed
/// hypothesis is reported, not thrown. REF_* theorems need alpha = 1/2; their
/// lhs is that of the older identity.
BoundReport verify_bound(const TestFunction& fn, const Interval& iv, const Params& params,
                         Theorem theorem, const BoundOptions& options = {});

}  // namespace hhb

#endif  // HHBOUNDS_BOUNDS_HPP
