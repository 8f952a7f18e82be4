#include "report.hpp"

#include "format.hpp"

namespace hhb::cli {

json to_json(const IdentityReport& r) {
  return {{"function", r.function},         {"alpha", r.params.alpha()}, {"lambda", r.params.lambda()},
          {"a", r.interval.a()},            {"b", r.interval.b()},       {"lhs", r.lhs},
          {"rhs", r.rhs},                   {"residual", r.residual},    {"oracle_error", r.oracle_error}};
}

json to_json(const BoundReport& r) {
  return {{"theorem", to_string(r.theorem)},
          {"function", r.function},
          {"alpha", r.params.alpha()},
          {"lambda", r.params.lambda()},
          {"q", r.params.q()},
          {"a", r.interval.a()},
          {"b", r.interval.b()},
          {"lhs_abs", r.lhs_abs},
          {"bound", r.bound},
          {"slack", r.slack},
          {"regime", to_string(r.regime.id)},
          {"hypothesis_ok", r.hypothesis_ok}};
}

json to_json(const MeansReport& r) {
  json j{{"family", to_string(r.family)}, {"variant", to_string(r.variant)},
         {"a", r.a},
         {"b", r.b},
         {"q", r.q},
         {"n", nullptr},
         {"lhs", r.lhs},
         {"rhs", r.rhs},
         {"slack", r.slack},
         {"hypothesis_ok", r.hypothesis_ok},
         {"constant", to_string(r.form)}};
  if (r.n) j["n"] = *r.n;
  return j;
}

json to_json(const CoefficientSet& cs) {
  json j{{"alpha", cs.params.alpha()},
         {"lambda", cs.params.lambda()},
         {"q", cs.params.q()},
         {"p", nullptr},
         {"regime", to_string(cs.regime.id)},
         {"c_left", cs.regime.c_left},
         {"c_mid", cs.regime.c_mid},
         {"c_right", cs.regime.c_right}};
  for (int i = 0; i < 4; ++i) {
    j["gamma" + std::to_string(i + 1)] = cs.gamma[i];
  }
  for (int i = 0; i < 4; ++i) {
    j["mu" + std::to_string(i + 1)] = cs.mu[i];
  }
  const auto printed = printed_mu_coeffs(cs.params.alpha(), cs.params.lambda());
  j["printed_mu2"] = printed[1];
  j["printed_mu4"] = printed[3];
  j["tau1"] = cs.tau_z.tau1;
  j["tau2"] = cs.tau_z.tau2;
  j["z1"] = cs.tau_z.z1;
  j["z2"] = cs.tau_z.z2;
  for (const char* key : {"phi1", "phi2", "psi1", "psi2", "eps1", "eps2", "beta_a", "beta_b"}) {
    j[key] = nullptr;
  }
  if (cs.holder) {
    const HolderCoeffs& h = *cs.holder;
    j["p"] = cs.params.p();
    j["phi1"] = h.phi1;
    j["phi2"] = h.phi2;
    j["psi1"] = h.psi1;
    j["psi2"] = h.psi2;
    j["eps1"] = h.eps1;
    j["eps2"] = h.eps2;
    j["beta_a"] = h.beta_a;
    j["beta_b"] = h.beta_b;
  }
  return j;
}

const std::vector<std::string>& identity_columns() {
  static const std::vector<std::string> cols{"alpha", "lambda", "a",        "b",           "function",
                                             "lhs",   "rhs",    "residual", "oracle_error"};
  return cols;
}

std::vector<std::string> csv_row(const IdentityReport& r) {
  return {fmt_double(r.params.alpha()), fmt_double(r.params.lambda()), fmt_double(r.interval.a()),
          fmt_double(r.interval.b()),   r.function,                    fmt_double(r.lhs),
          fmt_double(r.rhs),            fmt_double(r.residual),        fmt_double(r.oracle_error)};
}

const std::vector<std::string>& bound_columns() {
  static const std::vector<std::string> cols{"theorem", "alpha",   "lambda", "q",     "a",      "b",
                                             "function", "lhs_abs", "bound",  "slack", "regime", "hypothesis_ok"};
  return cols;
}

std::vector<std::string> csv_row(const BoundReport& r) {
  return {std::string(to_string(r.theorem)), fmt_double(r.params.alpha()), fmt_double(r.params.lambda()),
          fmt_double(r.params.q()),          fmt_double(r.interval.a()),   fmt_double(r.interval.b()),
          r.function,                        fmt_double(r.lhs_abs),        fmt_double(r.bound),
          fmt_double(r.slack),               std::string(to_string(r.regime.id)), fmt_bool(r.hypothesis_ok)};
}

const std::vector<std::string>& means_columns() {
  static const std::vector<std::string> cols{"family", "variant", "a", "b", "q", "n", "lhs", "rhs", "slack"};
  return cols;
}

std::vector<std::string> csv_row(const MeansReport& r) {
  return {std::string(to_string(r.family)), std::string(to_string(r.variant)), fmt_double(r.a), fmt_double(r.b),
          fmt_double(r.q),                  fmt_optional(r.n),                   fmt_double(r.lhs),
          fmt_double(r.rhs),                fmt_double(r.slack)};
}

}  // namespace hhb::cli
