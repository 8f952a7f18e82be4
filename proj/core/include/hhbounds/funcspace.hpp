#ifndef HHBOUNDS_FUNCSPACE_HPP
#define HHBOUNDS_FUNCSPACE_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhbounds/interval.hpp"

namespace hhb {

using RealFunction = std::function<double(double)>;

/// Admissible arguments [lo, hi] of a test function. Infinite ends are allowed.
struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& iv) const noexcept { return lo <= iv.a() && iv.b() <= hi; }
};

/// A twice differentiable function together with its exact derivatives.
/// Evaluators must be reentrant; they are shared between sweep workers.
struct TestFunction {
  std::string name;
  Domain domain;
  RealFunction f;
  RealFunction df;
  RealFunction d2f;
  std::optional<RealFunction> antiderivative;

  /// Throws DomainError if iv is not inside the declared domain.
  void require_domain(const Interval& iv) const;
};

/// Lower cut-off for functions singular at the origin (recip, log).
inline constexpr double kPositiveDomainFloor = 1e-8;

/// Resolves a catalog name: "recip", "log", "square", "cubic", "exp",
/// "pow_n:<n>" (also "pow_n(<n>)"), or any name added with register_function.
/// Throws LookupError for unknown names.
TestFunction catalog_lookup(std::string_view name);

/// Adds (or replaces) a user function in the process-wide catalog. Thread safe.
/// Built-in names cannot be replaced.
void register_function(TestFunction fn);

/// Built-in names followed by registered ones, in registration order.
std::vector<std::string> catalog_names();

/// Parses the exponent of a "pow_n:<n>" / "pow_n(<n>)" name; nullopt for other names.
std::optional<double> power_exponent(std::string_view name);

struct ConvexityVerdict {
  bool convex_abs_f2 = false;
  bool convex_abs_f2_pow_q = false;
  double q = 1.0;
  /// Largest midpoint-convexity excess of |f''| beyond the tolerance (0 when convex).
  double worst_violation_abs = 0.0;
  /// Same for |f''|^q.
  double worst_violation = 0.0;
  std::size_t samples = 0;
};

inline constexpr std::size_t kDefaultConvexitySamples = 257;
inline constexpr double kConvexityRelativeTolerance = 1e-12;

/// Sampled midpoint-convexity test of |f''| and |f''|^q on an n-point uniform
/// grid over iv: g((x_i + x_j)/2) <= (g(x_i) + g(x_j))/2 + tol for all pairs,
/// with tol = 1e-12 * max g. Requires n >= 3 and q >= 1.
ConvexityVerdict check_abs_f2_convex(const TestFunction& fn, const Interval& iv, double q,
                                     std::size_t n = kDefaultConvexitySamples);

/// Worst absolute disagreement between the exact derivatives and central
/// differences with step h, sampled at interior points of iv.
struct DerivativeMismatch {
  double first = 0.0;
  double second = 0.0;
  std::optional<double> antiderivative;
};

DerivativeMismatch derivative_mismatch(const TestFunction& fn, const Interval& iv, double h,
                                       std::size_t samples = 33);

}  // namespace hhb

#endif  // HHBOUNDS_FUNCSPACE_HPP
