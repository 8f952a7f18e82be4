#include "hhbounds/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "hhbounds/errors.hpp"

namespace hhb {
namespace {

void check_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1], got " << value;
    throw ParameterError(msg.str());
  }
}

void check_unit_pair(double alpha, double lambda) {
  check_unit(alpha, "alpha");
  check_unit(lambda, "lambda");
}

double finite_or_throw(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw RangeError(std::string(what) + " is not finite");
  }
  return value;
}

}  // namespace

Params::Params(double alpha, double lambda, double q) : alpha_(alpha), lambda_(lambda), q_(q) {
  check_unit_pair(alpha, lambda);
  if (!(q >= 1.0) || !std::isfinite(q)) {
    std::ostringstream msg;
    msg << "q must be a finite number >= 1, got " << q;
    throw ParameterError(msg.str());
  }
  p_ = q > 1.0 ? q / (q - 1.0) : std::numeric_limits<double>::infinity();
}

std::string_view to_string(RegimeCase c) noexcept {
  switch (c) {
    case RegimeCase::C1: return "C1";
    case RegimeCase::C2: return "C2";
    case RegimeCase::C3: return "C3";
    case RegimeCase::C4: return "C4";
  }
  return "?";
}

Regime classify_regime(double alpha, double lambda) {
  check_unit_pair(alpha, lambda);
  Regime r;
  r.c_left = 2.0 * alpha * lambda;
  r.c_mid = 1.0 - alpha;
  r.c_right = 1.0 - 2.0 * lambda * (1.0 - alpha);
  if (r.c_left <= r.c_mid && r.c_mid <= r.c_right) {
    r.id = RegimeCase::C1;
  } else if (r.c_mid >= std::max(r.c_left, r.c_right)) {
    r.id = RegimeCase::C2;
  } else if (r.c_mid <= std::min(r.c_left, r.c_right)) {
    r.id = RegimeCase::C3;
  } else {
    // Remaining ordering: c_right <= c_mid <= c_left.
    r.id = RegimeCase::C4;
  }
  return r;
}

std::array<double, 4> gamma_coeffs(double alpha, double lambda) {
  check_unit_pair(alpha, lambda);
  const double al = alpha * lambda;
  const double L = 1.0 - alpha;
  const double L2 = L * L;
  const double L3 = L2 * L;
  return {
      8.0 / 3.0 * al * al * al * al + L3 * (L / 4.0 - 2.0 * al / 3.0),
      8.0 / 3.0 * al * al * al * (1.0 - al) + L2 * (L / 3.0 - al - L2 / 4.0 + 2.0 * al * L / 3.0),
      2.0 * al * L3 / 3.0 - L2 * L2 / 4.0,
      L2 * (al - L / 3.0 - 2.0 * al * L / 3.0 + L2 / 4.0),
  };
}

std::array<double, 4> printed_mu_coeffs(double alpha, double lambda) {
  check_unit_pair(alpha, lambda);
  const double L = 1.0 - alpha;
  const double l2 = lambda * lambda;
  const double shift = alpha - 2.0 * lambda * L;
  const double s2 = shift * shift;
  const double odd = alpha * (3.0 * alpha - 4.0) - 4.0 * lambda * L * L * (1.0 - lambda);
  const double even = alpha * alpha * (4.0 * l2 * l2 - 4.0 * lambda + 3.0) +
                      4.0 * alpha * lambda * (1.0 - 2.0 * lambda) + 4.0 * l2;
  const double head_odd = 4.0 / 3.0 * L * L * L * l2 * lambda * (1.0 - lambda * L);
  const double head_even = 4.0 / 3.0 * L * L * L * L * l2 * l2;
  return {
      head_odd - s2 * odd / 12.0,
      head_even + s2 * even / 12.0,
      head_odd + s2 * odd / 12.0,
      head_even - s2 * even / 12.0,
  };
}

std::array<double, 4> mu_coeffs(double alpha, double lambda) {
  std::array<double, 4> mu = printed_mu_coeffs(alpha, lambda);
  // The |f''(a)| weights int_0^alpha |u - d| u^2 du (u = 1 - t, d = 2 lambda (1 - alpha)),
  // mirroring gamma1/gamma3 with (1 - alpha, 2 alpha lambda) -> (alpha, d).
  const double d = 2.0 * lambda * (1.0 - alpha);
  const double a3 = alpha * alpha * alpha;
  const double a4 = a3 * alpha;
  mu[1] = d * d * d * d / 6.0 + a4 / 4.0 - d * a3 / 3.0;
  mu[3] = d * a3 / 3.0 - a4 / 4.0;
  return mu;
}

TauZ tau_z_coeffs(double alpha, double lambda) {
  check_unit_pair(alpha, lambda);
  const double al = alpha * lambda;
  const double L = 1.0 - alpha;
  const double shift = alpha - 2.0 * lambda * L;
  const double head = 4.0 / 3.0 * L * L * L * lambda * lambda * lambda;
  const double tail = shift * shift * (alpha * (1.0 - lambda) + lambda) / 3.0;
  TauZ out;
  out.tau1 = 8.0 / 3.0 * al * al * al + L * L * (L / 3.0 - al);
  out.tau2 = L * L * (al - L / 3.0);
  out.z1 = head + tail;
  out.z2 = head - tail;
  return out;
}

double incomplete_beta(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "incomplete beta argument must lie in [0, 1], got " << x;
    throw ParameterError(msg.str());
  }
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("incomplete beta shape parameters must be positive and finite");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (b == 2.0) {
    return std::pow(x, a) / a - std::pow(x, a + 1.0) / (a + 1.0);
  }
  return boost::math::beta(a, b, x);
}

HolderCoeffs phi_psi_eps(double alpha, double lambda, double p, double q) {
  check_unit_pair(alpha, lambda);
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw UnsupportedError("the Hoelder bound needs q > 1");
  }
  if (!(std::abs(1.0 / p + 1.0 / q - 1.0) <= 1e-12)) {
    throw ParameterError("p and q must be conjugate exponents");
  }
  const double L = 1.0 - alpha;
  const double c = 2.0 * alpha * lambda;
  const double d = 2.0 * lambda * L;  // distance of e = 1 - d from t = 1
  HolderCoeffs h;
  // Variant 1 is the crossing case, variant 2 the one-signed case. Written
  // with |.| both stay finite out of regime for non-integer p, and inside
  // their regime they equal the exact integral of |.|^p.
  const double k = p + 1.0;
  h.phi1 = (std::pow(c, k) + std::pow(std::abs(L - c), k)) / k;
  h.phi2 = (std::pow(c, k) - std::pow(std::abs(c - L), k)) / k;
  h.psi1 = (std::pow(d, k) + std::pow(std::abs(alpha - d), k)) / k;
  h.psi2 = (std::pow(d, k) - std::pow(std::abs(d - alpha), k)) / k;
  h.eps1 = std::pow(L, q + 2.0) / (q + 2.0);
  h.eps2 = std::pow(alpha, q + 2.0) / (q + 2.0);
  h.beta_a = incomplete_beta(L, q + 1.0, 2.0);
  h.beta_b = incomplete_beta(alpha, q + 1.0, 2.0);

  for (double v : {h.phi1, h.phi2, h.psi1, h.psi2, h.eps1, h.eps2, h.beta_a, h.beta_b}) {
    finite_or_throw(v, "Hoelder coefficient");
  }
  return h;
}

std::pair<double, double> CoefficientSet::selected_gamma() const noexcept {
  return regime.left_crossing() ? std::pair{gamma[0], gamma[1]} : std::pair{gamma[2], gamma[3]};
}

std::pair<double, double> CoefficientSet::selected_mu() const noexcept {
  return regime.right_crossing() ? std::pair{mu[0], mu[1]} : std::pair{mu[2], mu[3]};
}

double CoefficientSet::selected_tau() const noexcept {
  return regime.left_crossing() ? tau_z.tau1 : tau_z.tau2;
}

double CoefficientSet::selected_z() const noexcept {
  return regime.right_crossing() ? tau_z.z1 : tau_z.z2;
}

double CoefficientSet::selected_phi() const {
  if (!holder) throw UnsupportedError("Hoelder coefficients need q > 1");
  return regime.left_crossing() ? holder->phi1 : holder->phi2;
}

double CoefficientSet::selected_psi() const {
  if (!holder) throw UnsupportedError("Hoelder coefficients need q > 1");
  return regime.right_crossing() ? holder->psi1 : holder->psi2;
}

CoefficientSet compute_coefficients(const Params& params) {
  const double alpha = params.alpha();
  const double lambda = params.lambda();
  CoefficientSet set{params, classify_regime(alpha, lambda), gamma_coeffs(alpha, lambda),
                     mu_coeffs(alpha, lambda), tau_z_coeffs(alpha, lambda), std::nullopt};
  if (params.has_conjugate()) {
    set.holder = phi_psi_eps(alpha, lambda, params.p(), params.q());
  }
  return set;
}

}  // namespace hhb
