#include "hhbounds/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hhbounds/errors.hpp"
#include "hhbounds/funcspace.hpp"

namespace hhb {
namespace {

void check_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    std::ostringstream msg;
    msg << "means need positive finite arguments, got (" << a << ", " << b << ")";
    throw DomainError(msg.str());
  }
}

// log(b/a) for a <= b without cancellation.
double log_ratio(double a, double b) { return std::log1p((b - a) / a); }

double logarithmic(double a, double b) { return (b - a) / log_ratio(a, b); }

double identric(double a, double b) {
  // (1/e) (b^b / a^a)^{1/(b-a)} = a exp(b log(b/a) / (b-a) - 1)
  return a * std::exp(b * log_ratio(a, b) / (b - a) - 1.0);
}

double p_logarithmic(double a, double b, double p) {
  // [(b^{p+1} - a^{p+1}) / ((p+1)(b-a))]^{1/p}, scaled by a.
  const double u = (b - a) / a;
  const double ratio = std::expm1((p + 1.0) * std::log1p(u)) / ((p + 1.0) * u);
  return a * std::pow(ratio, 1.0 / p);
}

double variant_denominator(NamedRule v) { return v == NamedRule::simpson ? 3.0 : 1.0; }

double variant_constant(NamedRule v, double p, ConstantForm form) {
  switch (v) {
    case NamedRule::midpoint:
      return std::pow(1.0 / (p + 1.0), 1.0 / p);
    case NamedRule::trapezoid:
      return std::pow((std::pow(2.0, p + 1.0) - 1.0) / (p + 1.0), 1.0 / p);
    case NamedRule::simpson: {
      const double sign = form == ConstantForm::derived ? 1.0 : -1.0;
      return std::pow((std::pow(2.0, p + 1.0) + sign) / (3.0 * (p + 1.0)), 1.0 / p);
    }
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(MeanKind k) noexcept {
  switch (k) {
    case MeanKind::A: return "A";
    case MeanKind::G: return "G";
    case MeanKind::H: return "H";
    case MeanKind::L: return "L";
    case MeanKind::I: return "I";
    case MeanKind::Lp: return "Lp";
  }
  return "?";
}

MeanValue special_mean(MeanKind kind, double a, double b, std::optional<double> order) {
  check_positive(a, b);
  MeanValue m{kind, a, b, std::nullopt, a};
  if (kind == MeanKind::Lp) {
    if (!order || !std::isfinite(*order) || *order == 0.0 || *order == -1.0) {
      throw ParameterError("the p-logarithmic mean needs a finite order p not in {-1, 0}");
    }
    m.order = order;
  }
  if (a == b) {
    return m;
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  switch (kind) {
    case MeanKind::A: m.value = 0.5 * (a + b); break;
    case MeanKind::G: m.value = std::sqrt(a) * std::sqrt(b); break;
    case MeanKind::H: m.value = 2.0 * a * b / (a + b); break;
    case MeanKind::L: m.value = logarithmic(lo, hi); break;
    case MeanKind::I: m.value = identric(lo, hi); break;
    case MeanKind::Lp: m.value = p_logarithmic(lo, hi, *order); break;
  }
  return m;
}

double mean(MeanKind kind, double a, double b, std::optional<double> order) {
  return special_mean(kind, a, b, order).value;
}

std::string_view to_string(MeanFamily f) noexcept {
  switch (f) {
    case MeanFamily::recip: return "recip";
    case MeanFamily::log: return "log";
    case MeanFamily::pow_n: return "pow_n";
  }
  return "?";
}

MeanFamily parse_mean_family(std::string_view text) {
  for (MeanFamily f : {MeanFamily::recip, MeanFamily::log, MeanFamily::pow_n}) {
    if (text == to_string(f)) return f;
  }
  throw ParameterError("unknown means family '" + std::string(text) + "' (expected recip, log or pow_n)");
}

std::string family_function_name(MeanFamily family, std::optional<int> n) {
  switch (family) {
    case MeanFamily::recip: return "recip";
    case MeanFamily::log: return "log";
    case MeanFamily::pow_n:
      if (!n) throw ParameterError("pow_n needs an exponent n");
      return "pow_n:" + std::to_string(*n);
  }
  return "";
}

MeansReport mean_inequality(MeanFamily family, NamedRule variant, double a, double b, double q,
                            std::optional<int> n, ConstantForm form) {
  check_positive(a, b);
  if (!(a < b)) {
    throw ParameterError("mean inequalities need 0 < a < b");
  }
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw UnsupportedError("the mean inequalities need q > 1");
  }
  if (family == MeanFamily::pow_n) {
    if (!n || *n <= 2) {
      throw ParameterError("pow_n mean inequalities need an integer n > 2");
    }
  } else {
    n.reset();
  }

  MeansReport r;
  r.family = family;
  r.variant = variant;
  r.a = a;
  r.b = b;
  r.q = q;
  r.n = n;
  r.form = form;

  const double p = q / (q - 1.0);
  const double A = mean(MeanKind::A, a, b);
  double lhs = 0.0;
  double K = 1.0;
  double e = 0.0;
  double D = 0.0;
  switch (family) {
    case MeanFamily::recip: {
      const double Linv = 1.0 / mean(MeanKind::L, a, b);
      const double Ainv = 1.0 / A;
      const double Hinv = 1.0 / mean(MeanKind::H, a, b);
      switch (variant) {
        case NamedRule::midpoint: lhs = Ainv - Linv; break;
        case NamedRule::trapezoid: lhs = Hinv - Linv; break;
        case NamedRule::simpson: lhs = Hinv / 3.0 + 2.0 * Ainv / 3.0 - Linv; break;
      }
      e = -3.0;
      D = 8.0;
      break;
    }
    case MeanFamily::log: {
      const double lnI = std::log(mean(MeanKind::I, a, b));
      const double lnA = std::log(A);
      const double lnG = 0.5 * (std::log(a) + std::log(b));
      switch (variant) {
        case NamedRule::midpoint: lhs = lnA - lnI; break;
        case NamedRule::trapezoid: lhs = lnG - lnI; break;
        case NamedRule::simpson: lhs = lnG / 3.0 + 2.0 * lnA / 3.0 - lnI; break;
      }
      e = -2.0;
      D = 16.0;
      break;
    }
    case MeanFamily::pow_n: {
      const double nn = static_cast<double>(*n);
      const double Ln = std::pow(mean(MeanKind::Lp, a, b, nn), nn);
      const double An = std::pow(A, nn);
      const double Apow = mean(MeanKind::A, std::pow(a, nn), std::pow(b, nn));
      switch (variant) {
        case NamedRule::midpoint: lhs = An - Ln; break;
        case NamedRule::trapezoid: lhs = Apow - Ln; break;
        case NamedRule::simpson: lhs = Apow / 3.0 + 2.0 * An / 3.0 - Ln; break;
      }
      K = nn * (nn - 1.0);
      e = nn - 2.0;
      D = 16.0;
      break;
    }
  }
  D *= variant_denominator(variant);

  const double ratio = (q + 3.0) / (q + 1.0);
  const double bq = std::pow(b, e * q);
  const double aq = std::pow(a, e * q);
  const double sum = std::pow(bq + ratio * aq, 1.0 / q) + std::pow(ratio * bq + aq, 1.0 / q);
  const double w = b - a;
  r.rhs = K * w * w / D * variant_constant(variant, p, form) * std::pow(1.0 / (2.0 * (q + 2.0)), 1.0 / q) * sum;
  r.lhs = std::abs(lhs);
  r.slack = r.rhs - r.lhs;

  const TestFunction fn = catalog_lookup(family_function_name(family, n));
  const ConvexityVerdict v = check_abs_f2_convex(fn, Interval(a, b), q);
  r.hypothesis_ok = v.convex_abs_f2_pow_q;
  return r;
}

bool mean_chain_check(double a, double b) {
  check_positive(a, b);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double H = mean(MeanKind::H, lo, hi);
  const double G = mean(MeanKind::G, lo, hi);
  const double L = mean(MeanKind::L, lo, hi);
  const double I = mean(MeanKind::I, lo, hi);
  const double A = mean(MeanKind::A, lo, hi);
  if ((hi - lo) <= 1e-6 * lo) {
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * A;
    return H <= G + slack && G <= L + slack && L <= I + slack && I <= A + slack;
  }
  return H < G && G < L && L < I && I < A;
}

}  // namespace hhb
