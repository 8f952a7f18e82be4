#ifndef HHBOUNDS_COEFFS_HPP
#define HHBOUNDS_COEFFS_HPP

// Closed-form weights of the (alpha, lambda) error bounds.
//
// With c = 2*alpha*lambda and e = 1 - 2*lambda*(1 - alpha), the kernel splits
// at t = 1 - alpha into a left piece t*|c - t| on [0, 1-alpha] and a right
// piece (1-t)*|e - t| on [1-alpha, 1]. Every coefficient below is an integral
// of one of these pieces against a simple weight. Each formula has two
// variants depending on which side of the split point c (resp. e) lies; the
// Regime records which ones apply.

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace hhb {

/// Rule parameters plus the exponent q of the |f''|^q hypothesis.
class Params {
public:
  /// Throws ParameterError unless alpha, lambda in [0, 1] and q >= 1.
  Params(double alpha, double lambda, double q = 1.0);

  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }
  double q() const noexcept { return q_; }
  /// Hoelder conjugate q/(q-1); +inf when q == 1.
  double p() const noexcept { return p_; }
  bool has_conjugate() const noexcept { return q_ > 1.0; }

private:
  double alpha_;
  double lambda_;
  double q_;
  double p_;
};

enum class RegimeCase { C1, C2, C3, C4 };

std::string_view to_string(RegimeCase c) noexcept;

/// Ordering of c_left = 2*alpha*lambda, c_mid = 1 - alpha and
/// c_right = 1 - 2*lambda*(1 - alpha).
struct Regime {
  RegimeCase id = RegimeCase::C1;
  double c_left = 0.0;
  double c_mid = 0.0;
  double c_right = 0.0;

  /// c_left <= c_mid: the left-piece sign change lies inside [0, 1-alpha].
  bool left_crossing() const noexcept { return id == RegimeCase::C1 || id == RegimeCase::C2; }
  /// c_mid <= c_right: the right-piece sign change lies inside [1-alpha, 1].
  bool right_crossing() const noexcept { return id == RegimeCase::C1 || id == RegimeCase::C3; }
};

/// Ties resolve by precedence C1 > C2 > C3 > C4.
Regime classify_regime(double alpha, double lambda);

/// Left-piece weights: gamma1/gamma3 = int_0^{1-a} |c-t| t^2 dt (weight of |f''(b)|),
/// gamma2/gamma4 = int_0^{1-a} |c-t| t(1-t) dt (weight of |f''(a)|). Pair (1,2)
/// applies when c <= 1-a, pair (3,4) otherwise.
std::array<double, 4> gamma_coeffs(double alpha, double lambda);

/// Right-piece weights: mu1/mu3 = int_{1-a}^1 |e-t| t(1-t) dt (|f''(b)|),
/// mu2/mu4 = int_{1-a}^1 |e-t| (1-t)^2 dt (|f''(a)|). Pair (1,2) applies when
/// 1-a <= e, pair (3,4) otherwise.
std::array<double, 4> mu_coeffs(double alpha, double lambda);

/// The literal published expressions for mu1..mu4. Only mu1 and mu3 agree with
/// their defining integrals; mu2 and mu4 do not and are kept for the
/// discrepancy report only.
std::array<double, 4> printed_mu_coeffs(double alpha, double lambda);

struct TauZ {
  double tau1 = 0.0;  ///< int_0^{1-a} t|c-t| dt, c <= 1-a
  double tau2 = 0.0;  ///< same, c >= 1-a
  double z1 = 0.0;    ///< int_{1-a}^1 (1-t)|e-t| dt, e >= 1-a
  double z2 = 0.0;    ///< same, e <= 1-a
};

TauZ tau_z_coeffs(double alpha, double lambda);

struct HolderCoeffs {
  double phi1 = 0.0;  ///< int_0^{1-a} |c-t|^p dt when c <= 1-a
  double phi2 = 0.0;  ///< same integral when c >= 1-a
  double psi1 = 0.0;  ///< int_{1-a}^1 |e-t|^p dt when e >= 1-a
  double psi2 = 0.0;  ///< same integral when e <= 1-a
  double eps1 = 0.0;  ///< (1-a)^{q+2}/(q+2)
  double eps2 = 0.0;  ///< a^{q+2}/(q+2)
  double beta_a = 0.0;  ///< B(1-a; q+1, 2)
  double beta_b = 0.0;  ///< B(a; q+1, 2)
};

/// Requires q > 1 with p its conjugate (UnsupportedError otherwise). phi2 and
/// psi2 are evaluated as the exact integral of |.|^p, which is defined for
/// non-integer p.
HolderCoeffs phi_psi_eps(double alpha, double lambda, double p, double q);

/// Lower incomplete beta integral int_0^x t^{a-1} (1-t)^{b-1} dt (not regularised).
double incomplete_beta(double x, double a, double b);

/// Every coefficient for one parameter set; selection happens at the call site.
struct CoefficientSet {
  Params params;
  Regime regime;
  std::array<double, 4> gamma{};
  std::array<double, 4> mu{};
  TauZ tau_z;
  std::optional<HolderCoeffs> holder;  ///< absent when q == 1

  /// (weight of |f''(b)|, weight of |f''(a)|) for the left piece.
  std::pair<double, double> selected_gamma() const noexcept;
  /// (weight of |f''(b)|, weight of |f''(a)|) for the right piece.
  std::pair<double, double> selected_mu() const noexcept;
  double selected_tau() const noexcept;
  double selected_z() const noexcept;
  double selected_phi() const;
  double selected_psi() const;
};

CoefficientSet compute_coefficients(const Params& params);

}  // namespace hhb

#endif  // HHBOUNDS_COEFFS_HPP
