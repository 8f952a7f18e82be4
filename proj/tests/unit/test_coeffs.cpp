#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hhbounds/coeffs.hpp"
#include "hhbounds/errors.hpp"
#include "hhbounds/numint.hpp"

using namespace hhb;

namespace {

double oracle(const numint::Integrand& g, double lo, double hi, std::vector<double> breaks = {}) {
  if (!(lo < hi)) return 0.0;
  std::vector<double> inside;
  for (double x : breaks) {
    if (x > lo && x < hi) inside.push_back(x);
  }
  std::sort(inside.begin(), inside.end());
  return numint::integrate_with_breakpoints(g, Interval(lo, hi), inside, 1e-13).value;
}

struct Exact {
  double gamma_b, gamma_a, mu_b, mu_a, tau, z;
};

Exact exact_left_right(double alpha, double lambda) {
  const double c = 2 * alpha * lambda;
  const double e = 1 - 2 * lambda * (1 - alpha);
  const double L = 1 - alpha;
  Exact x{};
  x.gamma_b = oracle([&](double t) { return std::abs(c - t) * t * t; }, 0, L, {c});
  x.gamma_a = oracle([&](double t) { return std::abs(c - t) * t * (1 - t); }, 0, L, {c});
  x.tau = oracle([&](double t) { return std::abs(c - t) * t; }, 0, L, {c});
  x.mu_b = oracle([&](double t) { return std::abs(e - t) * t * (1 - t); }, L, 1, {e});
  x.mu_a = oracle([&](double t) { return std::abs(e - t) * (1 - t) * (1 - t); }, L, 1, {e});
  x.z = oracle([&](double t) { return std::abs(e - t) * (1 - t); }, L, 1, {e});
  return x;
}

}  // namespace

TEST(Params, Conjugate) {
  for (double q : {1.5, 2.0, 3.0, 7.25}) {
    const Params p(0.3, 0.4, q);
    EXPECT_TRUE(p.has_conjugate());
    EXPECT_NEAR(1 / p.p() + 1 / p.q(), 1.0, 1e-15);
  }
  const Params one(0.3, 0.4);
  EXPECT_FALSE(one.has_conjugate());
  EXPECT_TRUE(std::isinf(one.p()));
}

TEST(Params, RejectsOutOfRange) {
  EXPECT_THROW(Params(-0.1, 0.5), ParameterError);
  EXPECT_THROW(Params(0.5, 1.0001), ParameterError);
  EXPECT_THROW(Params(0.5, 0.5, 0.99), ParameterError);
  EXPECT_THROW(Params(NAN, 0.5), ParameterError);
  EXPECT_THROW(Params(0.5, 0.5, INFINITY), ParameterError);
  EXPECT_THROW(classify_regime(1.5, 0.0), ParameterError);
}

TEST(Regime, Examples) {
  EXPECT_EQ(classify_regime(0.5, 1.0 / 3.0).id, RegimeCase::C1);
  EXPECT_EQ(classify_regime(0.5, 1.0).id, RegimeCase::C4);
  EXPECT_EQ(classify_regime(1.0, 0.5).id, RegimeCase::C3);
  EXPECT_EQ(classify_regime(0.2, 0.0).id, RegimeCase::C1);
  EXPECT_EQ(classify_regime(0.2, 1.0).id, RegimeCase::C2);
}

TEST(Regime, PartitionIsTotal) {
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double al = i / 100.0;
      const double la = j / 100.0;
      const Regime r = classify_regime(al, la);
      const bool c1 = r.c_left <= r.c_mid && r.c_mid <= r.c_right;
      const bool c2 = r.c_mid >= std::max(r.c_left, r.c_right);
      const bool c3 = r.c_mid <= std::min(r.c_left, r.c_right);
      const bool c4 = r.c_right <= r.c_mid && r.c_mid <= r.c_left;
      ASSERT_TRUE(c1 || c2 || c3 || c4);
      const RegimeCase expected = c1 ? RegimeCase::C1 : c2 ? RegimeCase::C2 : c3 ? RegimeCase::C3 : RegimeCase::C4;
      ASSERT_EQ(r.id, expected) << al << ' ' << la;
    }
  }
}

TEST(Gamma, Examples) {
  const auto g = gamma_coeffs(0.5, 0.0);
  EXPECT_NEAR(g[0], 1.0 / 64, 1e-15);
  EXPECT_NEAR(g[1], 5.0 / 192, 1e-15);
  for (double la : {0.0, 0.3, 1.0}) {
    const auto h = gamma_coeffs(1.0, la);
    EXPECT_EQ(h[2], 0.0);
    EXPECT_EQ(h[3], 0.0);
  }
  const auto s = gamma_coeffs(0.5, 1.0 / 3.0);
  EXPECT_NEAR(s[0] + s[1], 1.0 / 81, 1e-15);
  EXPECT_NEAR(tau_z_coeffs(0.5, 1.0 / 3.0).tau1, 1.0 / 81, 1e-15);
}

TEST(Mu, Examples) {
  const auto m = mu_coeffs(0.5, 0.0);
  EXPECT_NEAR(m[0], 5.0 / 192, 1e-15);
  EXPECT_NEAR(m[1], 1.0 / 64, 1e-15);

  for (double la : {0.0, 0.4, 1.0}) {
    const CoefficientSet cs = compute_coefficients(Params(0.0, la));
    const auto [mb, ma] = cs.selected_mu();
    EXPECT_NEAR(mb + ma, cs.selected_z(), 1e-15);
    EXPECT_NEAR(cs.selected_z(), 0.0, 1e-15);
  }

  const auto h = mu_coeffs(0.5, 0.5);
  const double z2 = oracle([](double t) { return (1 - t) * std::abs(0.5 - t); }, 0.5, 1.0, {0.5});
  EXPECT_NEAR(h[2] + h[3], tau_z_coeffs(0.5, 0.5).z2, 1e-12);
  EXPECT_NEAR(h[2] + h[3], z2, 1e-12);
}

TEST(Mu, PrintedAWeightsDisagreeWithTheirIntegrals) {
  // mu1 and mu3 are used as printed; the |f''(a)| weights mu2, mu4 are not.
  const double al = 0.3;
  const double la = 0.6;
  const auto printed = printed_mu_coeffs(al, la);
  const auto used = mu_coeffs(al, la);
  EXPECT_EQ(printed[0], used[0]);
  EXPECT_EQ(printed[2], used[2]);
  const Exact x = exact_left_right(al, la);
  const bool crossing = classify_regime(al, la).right_crossing();
  EXPECT_NEAR(crossing ? used[1] : used[3], x.mu_a, 1e-12);
  EXPECT_GT(std::abs(printed[1] - used[1]), 1e-4);
}

TEST(TauZ, Examples) {
  const TauZ tz = tau_z_coeffs(0.5, 0.0);
  EXPECT_NEAR(tz.tau1, 1.0 / 24, 1e-15);
  const double z_oracle = oracle([](double t) { return (1 - t) * std::abs(1 - t); }, 0.5, 1.0);
  EXPECT_NEAR(z_oracle, 1.0 / 24, 1e-15);
  EXPECT_NEAR(tz.z1, z_oracle, 1e-15);
  for (double la : {0.0, 0.5, 1.0}) EXPECT_EQ(tau_z_coeffs(1.0, la).tau2, 0.0);
}

TEST(Holder, MidpointAndTrapezoidValues) {
  const HolderCoeffs m = phi_psi_eps(0.5, 0.0, 2.0, 2.0);
  // int_0^{1/2} t^2 dt; the bound multiplies it by (1/2)^p, giving 1/(2^{2p+1}(p+1)) = 1/96.
  EXPECT_NEAR(m.phi1, 1.0 / 24, 1e-15);
  EXPECT_NEAR(std::pow(0.5, 2.0) * m.phi1, 1.0 / 96, 1e-15);
  EXPECT_NEAR(m.eps1, 1.0 / 64, 1e-15);
  EXPECT_NEAR(m.eps2, 1.0 / 64, 1e-15);

  const CoefficientSet t = compute_coefficients(Params(0.5, 1.0, 2.0));
  EXPECT_NEAR(t.selected_phi(), 7.0 / 24, 1e-15);
  EXPECT_NEAR(std::pow(0.5, 2.0) * t.selected_phi(), 7.0 / 96, 1e-15);
  EXPECT_NEAR(t.selected_psi(), 7.0 / 24, 1e-15);
}

TEST(Holder, PrintedSignFactorFormMatchesForIntegerP) {
  for (double p : {2.0, 3.0}) {
    const double q = p / (p - 1);
    for (auto [al, la] : {std::pair{0.6, 0.9}, std::pair{0.8, 0.5}, std::pair{0.45, 1.0}}) {
      const double k = p + 1;
      const double c = 2 * al * la;
      const double inner = 1 - al * (1 + 2 * la);
      const double printed_phi2 = (std::pow(c, k) - std::pow(-1.0, k) * std::pow(inner, k)) / k;
      const double d = 2 * la * (1 - al);
      const double inner_r = al - d;
      const double printed_psi2 = (std::pow(d, k) - std::pow(-1.0, k) * std::pow(inner_r, k)) / k;
      const HolderCoeffs h = phi_psi_eps(al, la, p, q);
      if (c >= 1 - al) EXPECT_NEAR(h.phi2, printed_phi2, 1e-14);
      if (d >= al) EXPECT_NEAR(h.psi2, printed_psi2, 1e-14);
    }
  }
}

TEST(Holder, Errors) {
  EXPECT_THROW(phi_psi_eps(0.5, 0.5, INFINITY, 1.0), UnsupportedError);
  EXPECT_THROW(phi_psi_eps(0.5, 0.5, 3.0, 2.0), ParameterError);
  const CoefficientSet cs = compute_coefficients(Params(0.5, 0.5));
  EXPECT_FALSE(cs.holder.has_value());
  EXPECT_THROW(cs.selected_phi(), UnsupportedError);
  EXPECT_THROW(cs.selected_psi(), UnsupportedError);
}

TEST(IncompleteBeta, Values) {
  EXPECT_NEAR(incomplete_beta(0.5, 3, 2), 5.0 / 192, 1e-16);
  for (double q : {1.0, 1.5, 2.0, 4.0}) {
    EXPECT_NEAR(incomplete_beta(1.0, q + 1, 2), 1 / ((q + 1) * (q + 2)), 1e-15);
  }
  EXPECT_EQ(incomplete_beta(0.0, 2.5, 3.5), 0.0);
  const double num = oracle([](double t) { return std::pow(t, 1.5) * std::pow(1 - t, 2.5); }, 0.0, 0.3);
  EXPECT_NEAR(incomplete_beta(0.3, 2.5, 3.5), num, 1e-12);
  EXPECT_THROW(incomplete_beta(1.1, 2, 2), ParameterError);
  EXPECT_THROW(incomplete_beta(-0.1, 2, 2), ParameterError);
  EXPECT_THROW(incomplete_beta(0.5, 0, 2), ParameterError);
}

class OracleAgreement : public ::testing::Test {
protected:
  std::vector<std::pair<double, double>> points() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < 200; ++i) out.emplace_back(u(rng), u(rng));
    return out;
  }
};

TEST_F(OracleAgreement, SelectedPowerMeanCoefficients) {
  for (auto [al, la] : points()) {
    SCOPED_TRACE(::testing::Message() << "alpha=" << al << " lambda=" << la);
    const CoefficientSet cs = compute_coefficients(Params(al, la));
    const Exact x = exact_left_right(al, la);
    const auto [gb, ga] = cs.selected_gamma();
    const auto [mb, ma] = cs.selected_mu();
    EXPECT_NEAR(gb, x.gamma_b, 1e-10);
    EXPECT_NEAR(ga, x.gamma_a, 1e-10);
    EXPECT_NEAR(mb, x.mu_b, 1e-10);
    EXPECT_NEAR(ma, x.mu_a, 1e-10);
    EXPECT_NEAR(cs.selected_tau(), x.tau, 1e-10);
    EXPECT_NEAR(cs.selected_z(), x.z, 1e-10);
    for (double v : {gb, ga, mb, ma, cs.selected_tau(), cs.selected_z()}) EXPECT_GE(v, -1e-15);
  }
}

TEST_F(OracleAgreement, SelectedHolderCoefficients) {
  for (double q : {1.5, 2.0, 3.0}) {
    for (auto [al, la] : points()) {
      SCOPED_TRACE(::testing::Message() << "alpha=" << al << " lambda=" << la << " q=" << q);
      const CoefficientSet cs = compute_coefficients(Params(al, la, q));
      const double p = cs.params.p();
      const double c = 2 * al * la;
      const double e = 1 - 2 * la * (1 - al);
      const double L = 1 - al;
      EXPECT_NEAR(cs.selected_phi(), oracle([&](double t) { return std::pow(std::abs(c - t), p); }, 0, L, {c}), 1e-10);
      EXPECT_NEAR(cs.selected_psi(), oracle([&](double t) { return std::pow(std::abs(e - t), p); }, L, 1, {e}), 1e-10);
      const HolderCoeffs& h = *cs.holder;
      EXPECT_NEAR(h.eps1, oracle([&](double t) { return std::pow(t, q + 1); }, 0, L), 1e-10);
      EXPECT_NEAR(h.eps2, oracle([&](double t) { return std::pow(1 - t, q + 1); }, L, 1), 1e-10);
      EXPECT_NEAR(h.beta_a, oracle([&](double t) { return std::pow(t, q) * (1 - t); }, 0, L), 1e-10);
      EXPECT_NEAR(h.beta_b, oracle([&](double t) { return std::pow(1 - t, q) * t; }, L, 1), 1e-10);
    }
  }
}

TEST_F(OracleAgreement, SumIdentities) {
  for (auto [al, la] : points()) {
    const auto g = gamma_coeffs(al, la);
    const auto m = mu_coeffs(al, la);
    const TauZ tz = tau_z_coeffs(al, la);
    EXPECT_NEAR(g[0] + g[1], tz.tau1, 1e-12);
    EXPECT_NEAR(g[2] + g[3], tz.tau2, 1e-12);
    EXPECT_NEAR(m[0] + m[1], tz.z1, 1e-12);
    EXPECT_NEAR(m[2] + m[3], tz.z2, 1e-12);
  }
}

TEST(Continuity, AcrossRegimeBoundaries) {
  for (int i = 0; i <= 50; ++i) {
    // 2 alpha lambda = 1 - alpha with lambda in [0, 1] needs alpha in [1/3, 1].
    const double al = 1.0 / 3 + (2.0 / 3) * i / 50.0;
    const double la = std::min(1.0, (1 - al) / (2 * al));
    const auto g = gamma_coeffs(al, la);
    const TauZ tz = tau_z_coeffs(al, la);
    EXPECT_NEAR(g[0], g[2], 1e-12);
    EXPECT_NEAR(g[1], g[3], 1e-12);
    EXPECT_NEAR(tz.tau1, tz.tau2, 1e-12);
    const HolderCoeffs h = phi_psi_eps(al, la, 2.0, 2.0);
    EXPECT_NEAR(h.phi1, h.phi2, 1e-12);
  }
  for (int i = 0; i <= 50; ++i) {
    // alpha = 2 lambda (1 - alpha) needs alpha in [0, 2/3].
    const double al = (2.0 / 3) * i / 50.0;
    const double la = std::min(1.0, al / (2 * (1 - al)));
    const auto m = mu_coeffs(al, la);
    const TauZ tz = tau_z_coeffs(al, la);
    EXPECT_NEAR(m[0], m[2], 1e-12);
    EXPECT_NEAR(m[1], m[3], 1e-12);
    EXPECT_NEAR(tz.z1, tz.z2, 1e-12);
    const HolderCoeffs h = phi_psi_eps(al, la, 3.0, 1.5);
    EXPECT_NEAR(h.psi1, h.psi2, 1e-12);
  }
}

TEST(CoefficientSet, AllFiniteOnGrid) {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const CoefficientSet cs = compute_coefficients(Params(i / 20.0, j / 20.0, 1.25));
      for (double v : cs.gamma) ASSERT_TRUE(std::isfinite(v));
      for (double v : cs.mu) ASSERT_TRUE(std::isfinite(v));
      for (double v : {cs.tau_z.tau1, cs.tau_z.tau2, cs.tau_z.z1, cs.tau_z.z2, cs.holder->phi1, cs.holder->phi2,
                       cs.holder->psi1, cs.holder->psi2, cs.holder->beta_a, cs.holder->beta_b}) {
        ASSERT_TRUE(std::isfinite(v));
      }
      EXPECT_GE(cs.selected_phi(), 0.0);
      EXPECT_GE(cs.selected_psi(), 0.0);
    }
  }
}

TEST(Holder, HugeConjugateExponentStaysFinite) {
  // q barely above 1 makes p huge; every base is <= 1, so the powers underflow instead of overflowing.
  const HolderCoeffs h = phi_psi_eps(0.5, 0.5, 1.0 / (1.0 - 1.0 / 1.0000001), 1.0000001);
  EXPECT_TRUE(std::isfinite(h.phi1));
}
