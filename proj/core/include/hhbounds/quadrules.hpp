#ifndef HHBOUNDS_QUADRULES_HPP
#define HHBOUNDS_QUADRULES_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "hhbounds/bounds.hpp"
#include "hhbounds/funcspace.hpp"
#include "hhbounds/interval.hpp"

namespace hhb {

enum class NamedRule { midpoint, trapezoid, simpson };

std::string_view to_string(NamedRule r) noexcept;
NamedRule parse_named_rule(std::string_view text);

/// One member of the (alpha, lambda) rule family.
struct RuleSpec {
  double alpha = 0.5;
  double lambda = 0.0;
  std::string name = "midpoint";

  /// The derivative term drops out only at alpha = 1/2.
  bool uses_derivative() const noexcept { return alpha != 0.5; }

  static RuleSpec midpoint() { return {0.5, 0.0, "midpoint"}; }
  static RuleSpec trapezoid() { return {0.5, 1.0, "trapezoid"}; }
  static RuleSpec simpson() { return {0.5, 1.0 / 3.0, "simpson"}; }
  static RuleSpec named(NamedRule r);
  /// "midpoint", "trapezoid", "simpson" or "custom:<alpha>,<lambda>".
  static RuleSpec parse(std::string_view text);
};

/// (1-lambda) f(x) + lambda (alpha f(a) + (1-alpha) f(b)) + (b-a)(alpha-1/2) f'(x),
/// x = (1-alpha) b + alpha a. Approximates the mean value of f over iv.
double generalized_rule(const TestFunction& fn, const Interval& iv, const RuleSpec& rule);

/// Which Simpson constant to use. The published statement has 2^{p+1} - 1 in
/// the Simpson case; the integral it stands for evaluates to 2^{p+1} + 1.
enum class ConstantForm { derived, printed };

std::string_view to_string(ConstantForm f) noexcept;

/// The quantity raised to 1/p in the proposition bounds:
///   midpoint  1 / (2^{2p+1} (p+1))
///   trapezoid (2^{p+1} - 1) / (2^{2p+1} (p+1))
///   simpson   (2^{p+1} +- 1) / (2^{2p+1} 3^{p+1} (p+1))
/// returned already raised to 1/p (evaluated in log space, finite for large p).
double proposition_factor(NamedRule kind, double p, ConstantForm form = ConstantForm::derived);

/// (b-a)^2 * factor * { [E B^q + beta A^q]^{1/q} + [beta B^q + E A^q]^{1/q} } with
/// E = 1/(2^{q+2}(q+2)), beta = B(1/2; q+1, 2), A = |f''(a)|, B = |f''(b)|. Needs q > 1.
double proposition_bound(NamedRule kind, const EndpointCurvature& c, const Interval& iv, double q,
                         ConstantForm form = ConstantForm::derived);

inline constexpr double kConsistencyTolerance = 1e-12;

/// Compares proposition_bound with bound_t4 at the matching (1/2, lambda).
/// Throws ConsistencyError when they differ by more than 1e-12 * max(1, |t4|);
/// returns the T4 value otherwise.
double match_general(NamedRule kind, const EndpointCurvature& c, const Interval& iv, double q,
                     ConstantForm form = ConstantForm::derived);

struct CertifiedResult {
  double value = 0.0;        ///< approximation of int_a^b f
  double error_bound = 0.0;  ///< sum of the per-cell bounds
  std::size_t cells = 0;
  Theorem theorem_used = Theorem::T4;
  double q = 1.0;
};

inline constexpr std::size_t kCellConvexitySamples = 33;

/// Applies the rule on n_cells equal cells; each cell adds h * rule and
/// h * bound. Convexity of |f''| (T2) or |f''|^q (T3, T4) is sampled on every
/// cell; a failure throws HypothesisError carrying the cell index.
CertifiedResult composite_certified(const TestFunction& fn, const Interval& iv, std::size_t n_cells,
                                    const RuleSpec& rule, double q, Theorem theorem,
                                    std::size_t convexity_samples = kCellConvexitySamples);

}  // namespace hhb

#endif  // HHBOUNDS_QUADRULES_HPP
