#include "hhbounds/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "hhbounds/errors.hpp"
#include "hhbounds/identity.hpp"

namespace hhb {
namespace {

// Roundoff can push a selected coefficient a hair below zero; pow() of a
// negative base with a fractional exponent would then return NaN.
double nonneg(double x) { return std::max(0.0, x); }

double half_width_sq(const Interval& iv) { return 0.5 * iv.width() * iv.width(); }

void check_curvature(const EndpointCurvature& c) {
  if (!(c.at_a >= 0.0) || !(c.at_b >= 0.0) || !std::isfinite(c.at_a) || !std::isfinite(c.at_b)) {
    throw ParameterError("endpoint curvatures must be finite and nonnegative");
  }
}

double power_mean_term(double outer, double w_b, double w_a, double Bq, double Aq, double q) {
  const double inner = nonneg(w_b) * Bq + nonneg(w_a) * Aq;
  return std::pow(nonneg(outer), 1.0 - 1.0 / q) * std::pow(inner, 1.0 / q);
}

double ref_g2(const EndpointCurvature& c, const Interval& iv, double l, bool upper) {
  const double w2 = iv.width() * iv.width();
  if (upper) {
    return w2 * (3.0 * l - 1.0) / 48.0 * (c.at_a + c.at_b);
  }
  const double l3 = l * l * l;
  const double l4 = l3 * l;
  const double m = 1.0 - l;
  const double wa = l4 + (1.0 + l) * m * m * m + (5.0 * l - 3.0) / 4.0;
  const double wb = l4 + (2.0 - l) * l3 + (1.0 - 3.0 * l) / 4.0;
  return w2 / 12.0 * (wa * c.at_a + wb * c.at_b);
}

double ref_g3(const EndpointCurvature& c, const Interval& iv, double l, double q, bool upper) {
  const double A = std::pow(c.at_a, q);
  const double B = std::pow(c.at_b, q);
  const double scale = half_width_sq(iv);
  if (upper) {
    const double lo = (8.0 * l - 3.0) / 192.0;
    const double hi = (16.0 * l - 5.0) / 192.0;
    const double outer = (3.0 * l - 1.0) / 24.0;
    return scale * (power_mean_term(outer, hi, lo, B, A, q) + power_mean_term(outer, lo, hi, B, A, q));
  }
  const double l3 = l * l * l;
  const double l4 = l3 * l;
  const double m = 1.0 - l;
  const double outer = l3 / 3.0 + (1.0 - 3.0 * l) / 24.0;
  const double shared = l4 / 6.0 + (3.0 - 8.0 * l) / 192.0;
  const double first_b = (2.0 - l) * l3 / 6.0 + (5.0 - 16.0 * l) / 192.0;
  const double second_a = (1.0 + l) * m * m * m / 6.0 + (48.0 * l - 27.0) / 192.0;
  return scale * (power_mean_term(outer, first_b, shared, B, A, q) +
                  power_mean_term(outer, shared, second_a, B, A, q));
}

}  // namespace

EndpointCurvature EndpointCurvature::of(const TestFunction& fn, const Interval& iv) {
  fn.require_domain(iv);
  EndpointCurvature c{std::abs(fn.d2f(iv.a())), std::abs(fn.d2f(iv.b()))};
  if (!std::isfinite(c.at_a) || !std::isfinite(c.at_b)) {
    throw DomainError("f'' of '" + fn.name + "' is not finite at an endpoint");
  }
  return c;
}

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::REF_G2: return "REF_G2";
    case Theorem::REF_G3: return "REF_G3";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (Theorem t : {Theorem::T2, Theorem::T3, Theorem::T4, Theorem::REF_G2, Theorem::REF_G3}) {
    if (up == to_string(t)) return t;
  }
  throw ParameterError("unknown theorem '" + std::string(text) + "' (expected T2, T3, T4, REF_G2 or REF_G3)");
}

double bound_t2(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs) {
  check_curvature(c);
  const auto [g_b, g_a] = cs.selected_gamma();
  const auto [m_b, m_a] = cs.selected_mu();
  return half_width_sq(iv) * (nonneg(g_b + m_b) * c.at_b + nonneg(g_a + m_a) * c.at_a);
}

double bound_t2(const EndpointCurvature& c, const Interval& iv, double alpha, double lambda) {
  return bound_t2(c, iv, compute_coefficients(Params(alpha, lambda)));
}

namespace detail {
double bound_t3_general(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs) {
  check_curvature(c);
  const double q = cs.params.q();
  const double A = std::pow(c.at_a, q);
  const double B = std::pow(c.at_b, q);
  const auto [g_b, g_a] = cs.selected_gamma();
  const auto [m_b, m_a] = cs.selected_mu();
  return half_width_sq(iv) * (power_mean_term(cs.selected_tau(), g_b, g_a, B, A, q) +
                              power_mean_term(cs.selected_z(), m_b, m_a, B, A, q));
}
}  // namespace detail

double bound_t3(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs) {
  if (cs.params.q() == 1.0) {
    return bound_t2(c, iv, cs);
  }
  return detail::bound_t3_general(c, iv, cs);
}

double bound_t3(const EndpointCurvature& c, const Interval& iv, double alpha, double lambda, double q) {
  return bound_t3(c, iv, compute_coefficients(Params(alpha, lambda, q)));
}

double bound_t4(const EndpointCurvature& c, const Interval& iv, const CoefficientSet& cs) {
  check_curvature(c);
  if (!cs.holder) {
    throw UnsupportedError("the Hoelder bound needs q > 1");
  }
  const HolderCoeffs& h = *cs.holder;
  const double q = cs.params.q();
  const double p = cs.params.p();
  const double A = std::pow(c.at_a, q);
  const double B = std::pow(c.at_b, q);
  const double left = std::pow(nonneg(cs.selected_phi()), 1.0 / p) *
                      std::pow(h.eps1 * B + h.beta_a * A, 1.0 / q);
  const double right = std::pow(nonneg(cs.selected_psi()), 1.0 / p) *
                       std::pow(h.beta_b * B + h.eps2 * A, 1.0 / q);
  return half_width_sq(iv) * (left + right);
}

double bound_t4(const EndpointCurvature& c, const Interval& iv, double alpha, double lambda, double q) {
  return bound_t4(c, iv, compute_coefficients(Params(alpha, lambda, q)));
}

ReferenceBounds reference_bounds(const EndpointCurvature& c, const Interval& iv, double lambda,
                                 double q, ReferenceBranch branch) {
  check_curvature(c);
  // Validates lambda and q.
  const Params params(0.5, lambda, q);
  const bool upper = branch == ReferenceBranch::automatic ? lambda >= 0.5 : branch == ReferenceBranch::upper;
  ReferenceBounds out;
  out.g2 = ref_g2(c, iv, lambda, upper);
  out.g3 = q == 1.0 ? out.g2 : ref_g3(c, iv, lambda, q, upper);
  return out;
}

BoundReport verify_bound(const TestFunction& fn, const Interval& iv, const Params& params,
                         Theorem theorem, const BoundOptions& options) {
  const bool reference = theorem == Theorem::REF_G2 || theorem == Theorem::REF_G3;
  if (reference && params.alpha() != 0.5) {
    throw ParameterError("the reference bounds are only defined at alpha = 1/2");
  }
  if (theorem == Theorem::T4 && !params.has_conjugate()) {
    throw UnsupportedError("the Hoelder bound needs q > 1");
  }

  BoundReport r;
  r.theorem = theorem;
  r.function = fn.name;
  r.params = params;
  r.interval = iv;

  const CoefficientSet cs = compute_coefficients(params);
  r.regime = cs.regime;

  const bool first_power = theorem == Theorem::T2 || theorem == Theorem::REF_G2;
  const ConvexityVerdict verdict =
      check_abs_f2_convex(fn, iv, first_power ? 1.0 : params.q(), options.convexity_samples);
  r.hypothesis_ok = first_power ? verdict.convex_abs_f2 : verdict.convex_abs_f2_pow_q;
  r.worst_violation = first_power ? verdict.worst_violation_abs : verdict.worst_violation;

  const EndpointCurvature curv = EndpointCurvature::of(fn, iv);
  double bound = 0.0;
  switch (theorem) {
    case Theorem::T2: bound = bound_t2(curv, iv, cs); break;
    case Theorem::T3: bound = bound_t3(curv, iv, cs); break;
    case Theorem::T4: bound = bound_t4(curv, iv, cs); break;
    case Theorem::REF_G2: bound = reference_bounds(curv, iv, params.lambda(), 1.0).g2; break;
    case Theorem::REF_G3: bound = reference_bounds(curv, iv, params.lambda(), params.q()).g3; break;
  }
  r.bound = bound * options.coefficient_scale;
  r.lhs_abs = reference ? std::abs(reference_lhs(fn, iv, params.lambda(), options.tol))
                        : std::abs(lhs_functional(fn, iv, params.alpha(), params.lambda(), options.tol));
  r.slack = r.bound - r.lhs_abs;
  return r;
}

}  // namespace hhb
