#include "hhbounds/quadrules.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hhbounds/coeffs.hpp"
#include "hhbounds/errors.hpp"

namespace hhb {
namespace {

double parse_double(std::string_view text, std::string_view context) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParameterError("cannot parse number in '" + std::string(context) + "'");
  }
  return v;
}

double rule_lambda(NamedRule kind) {
  switch (kind) {
    case NamedRule::midpoint: return 0.0;
    case NamedRule::trapezoid: return 1.0;
    case NamedRule::simpson: return 1.0 / 3.0;
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(NamedRule r) noexcept {
  switch (r) {
    case NamedRule::midpoint: return "midpoint";
    case NamedRule::trapezoid: return "trapezoid";
    case NamedRule::simpson: return "simpson";
  }
  return "?";
}

NamedRule parse_named_rule(std::string_view text) {
  for (NamedRule r : {NamedRule::midpoint, NamedRule::trapezoid, NamedRule::simpson}) {
    if (text == to_string(r)) return r;
  }
  throw ParameterError("unknown rule '" + std::string(text) + "' (expected midpoint, trapezoid or simpson)");
}

std::string_view to_string(ConstantForm f) noexcept {
  return f == ConstantForm::derived ? "derived" : "printed";
}

RuleSpec RuleSpec::named(NamedRule r) {
  return {0.5, rule_lambda(r), std::string(to_string(r))};
}

RuleSpec RuleSpec::parse(std::string_view text) {
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = text.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ParameterError("custom rule needs 'custom:<alpha>,<lambda>'");
    }
    const double alpha = parse_double(rest.substr(0, comma), text);
    const double lambda = parse_double(rest.substr(comma + 1), text);
    Params check(alpha, lambda);
    return {alpha, lambda, std::string(text)};
  }
  return named(parse_named_rule(text));
}

double generalized_rule(const TestFunction& fn, const Interval& iv, const RuleSpec& rule) {
  fn.require_domain(iv);
  const Params check(rule.alpha, rule.lambda);
  const double alpha = rule.alpha;
  const double lambda = rule.lambda;
  const double x = (1.0 - alpha) * iv.b() + alpha * iv.a();
  double value = (1.0 - lambda) * fn.f(x) + lambda * (alpha * fn.f(iv.a()) + (1.0 - alpha) * fn.f(iv.b()));
  if (rule.uses_derivative()) {
    value += iv.width() * (alpha - 0.5) * fn.df(x);
  }
  return value;
}

double proposition_factor(NamedRule kind, double p, ConstantForm form) {
  if (!(p > 1.0)) {
    throw UnsupportedError("the proposition bounds need a finite conjugate exponent (q > 1)");
  }
  constexpr double ln2 = std::numbers::ln2;
  const double ln3 = std::log(3.0);
  // log of 2^{p+1} +- 1 without forming 2^{p+1}
  const double pow2 = (p + 1.0) * ln2;
  const double tiny = std::exp(-pow2);
  double log_num = 0.0;
  double log_den = (2.0 * p + 1.0) * ln2 + std::log(p + 1.0);
  switch (kind) {
    case NamedRule::midpoint:
      break;
    case NamedRule::trapezoid:
      log_num = pow2 + std::log1p(-tiny);
      break;
    case NamedRule::simpson:
      log_num = pow2 + std::log1p(form == ConstantForm::derived ? tiny : -tiny);
      log_den += (p + 1.0) * ln3;
      break;
  }
  return std::exp((log_num - log_den) / p);
}

double proposition_bound(NamedRule kind, const EndpointCurvature& c, const Interval& iv, double q,
                         ConstantForm form) {
  const Params params(0.5, rule_lambda(kind), q);
  if (!params.has_conjugate()) {
    throw UnsupportedError("the proposition bounds need q > 1");
  }
  if (!(c.at_a >= 0.0) || !(c.at_b >= 0.0)) {
    throw ParameterError("endpoint curvatures must be nonnegative");
  }
  const double A = std::pow(c.at_a, q);
  const double B = std::pow(c.at_b, q);
  const double E = 1.0 / (std::pow(2.0, q + 2.0) * (q + 2.0));
  const double beta = incomplete_beta(0.5, q + 1.0, 2.0);
  const double inner = std::pow(E * B + beta * A, 1.0 / q) + std::pow(beta * B + E * A, 1.0 / q);
  return iv.width() * iv.width() * proposition_factor(kind, params.p(), form) * inner;
}

double match_general(NamedRule kind, const EndpointCurvature& c, const Interval& iv, double q,
                     ConstantForm form) {
  const double prop = proposition_bound(kind, c, iv, q, form);
  const double general = bound_t4(c, iv, 0.5, rule_lambda(kind), q);
  if (std::abs(prop - general) > kConsistencyTolerance * std::max(1.0, std::abs(general))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << to_string(kind) << " proposition (" << to_string(form) << " constant) gives " << prop
        << " but the general bound gives " << general << " at q = " << q;
    throw ConsistencyError(msg.str());
  }
  return general;
}

CertifiedResult composite_certified(const TestFunction& fn, const Interval& iv, std::size_t n_cells,
                                    const RuleSpec& rule, double q, Theorem theorem,
                                    std::size_t convexity_samples) {
  if (n_cells == 0) {
    throw ParameterError("composite rule needs at least one cell");
  }
  if (theorem != Theorem::T2 && theorem != Theorem::T3 && theorem != Theorem::T4) {
    throw ParameterError("composite rules are certified by T2, T3 or T4");
  }
  fn.require_domain(iv);
  const Params params(rule.alpha, rule.lambda, q);
  if (theorem == Theorem::T4 && !params.has_conjugate()) {
    throw UnsupportedError("the Hoelder bound needs q > 1");
  }
  const CoefficientSet cs = compute_coefficients(params);
  const double check_q = theorem == Theorem::T2 ? 1.0 : q;

  CertifiedResult out;
  out.cells = n_cells;
  out.theorem_used = theorem;
  out.q = q;
  const double h = iv.width() / static_cast<double>(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    const double lo = iv.a() + h * static_cast<double>(i);
    const double hi = (i + 1 == n_cells) ? iv.b() : iv.a() + h * static_cast<double>(i + 1);
    const Interval cell(lo, hi);
    const ConvexityVerdict v = check_abs_f2_convex(fn, cell, check_q, convexity_samples);
    const bool ok = theorem == Theorem::T2 ? v.convex_abs_f2 : v.convex_abs_f2_pow_q;
    if (!ok) {
      std::ostringstream msg;
      msg << "convexity hypothesis fails on cell " << i << " [" << lo << ", " << hi << "] of '"
          << fn.name << "'";
      throw HypothesisError(msg.str(), i);
    }
    const EndpointCurvature curv = EndpointCurvature::of(fn, cell);
    double b = 0.0;
    switch (theorem) {
      case Theorem::T2: b = bound_t2(curv, cell, cs); break;
      case Theorem::T3: b = bound_t3(curv, cell, cs); break;
      default: b = bound_t4(curv, cell, cs); break;
    }
    out.value += cell.width() * generalized_rule(fn, cell, rule);
    out.error_bound += cell.width() * b;
  }
  return out;
}

}  // namespace hhb
