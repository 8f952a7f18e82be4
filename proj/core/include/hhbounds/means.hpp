#ifndef HHBOUNDS_MEANS_HPP
#define HHBOUNDS_MEANS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hhbounds/quadrules.hpp"

namespace hhb {

enum class MeanKind { A, G, H, L, I, Lp };

std::string_view to_string(MeanKind k) noexcept;

struct MeanValue {
  MeanKind kind = MeanKind::A;
  double a = 1.0;
  double b = 1.0;
  std::optional<double> order;  ///< only for Lp
  double value = 1.0;
};

/// Arithmetic, geometric, harmonic, logarithmic, identric and p-logarithmic
/// means of two positive reals. a == b gives a for every kind. L, I and Lp are
/// evaluated through log1p/expm1 so nearly equal arguments keep full accuracy.
/// Throws DomainError for nonpositive arguments and ParameterError for an Lp
/// order in {-1, 0} or a missing one.
MeanValue special_mean(MeanKind kind, double a, double b, std::optional<double> order = std::nullopt);

/// Convenience: special_mean(...).value
double mean(MeanKind kind, double a, double b, std::optional<double> order = std::nullopt);

enum class MeanFamily { recip, log, pow_n };

std::string_view to_string(MeanFamily f) noexcept;
MeanFamily parse_mean_family(std::string_view text);

struct MeansReport {
  MeanFamily family = MeanFamily::recip;
  NamedRule variant = NamedRule::midpoint;
  double a = 1.0;
  double b = 2.0;
  double q = 2.0;
  std::optional<int> n;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< rhs - lhs
  bool hypothesis_ok = false;
  ConstantForm form = ConstantForm::derived;
};

/// The mean inequalities obtained from the midpoint, trapezoid and Simpson
/// bounds applied to 1/x (recip), ln x (log) and x^n (pow_n):
///
///   recip:  |A^-1 - L^-1|,  |H^-1 - L^-1|,  |H^-1/3 + 2 A^-1/3 - L^-1|
///   log:    |ln A - ln I|,  |ln G - ln I|,  |ln G/3 + 2 ln A/3 - ln I|
///   pow_n:  |A^n - L_n^n|,  |A(a^n, b^n) - L_n^n|,  |A(a^n, b^n)/3 + 2 A^n/3 - L_n^n|
///
/// each bounded by K (b-a)^2 / D * C(p) * (1/(2(q+2)))^{1/q} *
///   sum_{i=1,2} [r^{i-1} b^{e q} + r^{2-i} a^{e q}]^{1/q},   r = (q+3)/(q+1),
/// with (K, e) = (1, -3), (1, -2), (n(n-1), n-2) and D = 8, 16, 16 for midpoint
/// and trapezoid, three times that for Simpson.
/// Requires 0 < a < b, q > 1 and, for pow_n, an integer n > 2.
MeansReport mean_inequality(MeanFamily family, NamedRule variant, double a, double b, double q,
                            std::optional<int> n = std::nullopt,
                            ConstantForm form = ConstantForm::derived);

/// The catalog function a family is derived from ("recip", "log", "pow_n:<n>").
std::string family_function_name(MeanFamily family, std::optional<int> n);

/// H < G < L < I < A. When b - a is within 1e-6 relative of a the
/// comparison is non-strict with a few ulps of slack.
bool mean_chain_check(double a, double b);

}  // namespace hhb

#endif  // HHBOUNDS_MEANS_HPP
