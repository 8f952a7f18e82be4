#include "hhbounds/funcspace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>

#include "hhbounds/errors.hpp"
#include "hhbounds/numint.hpp"

namespace hhb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::vector<TestFunction>& registry() {
  static std::vector<TestFunction> fns;
  return fns;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"recip", "log", "square", "cubic", "exp", "pow_n"};
  return names;
}

TestFunction make_square() {
  return {"square", Domain{},
          [](double x) { return x * x; },
          [](double x) { return 2.0 * x; },
          [](double) { return 2.0; },
          [](double x) { return x * x * x / 3.0; }};
}

TestFunction make_cubic() {
  return {"cubic", Domain{},
          [](double x) { return x * x * x; },
          [](double x) { return 3.0 * x * x; },
          [](double x) { return 6.0 * x; },
          [](double x) { return x * x * x * x / 4.0; }};
}

TestFunction make_exp() {
  auto e = [](double x) { return std::exp(x); };
  return {"exp", Domain{}, e, e, e, e};
}

TestFunction make_recip() {
  return {"recip", Domain{kPositiveDomainFloor, kInf},
          [](double x) { return 1.0 / x; },
          [](double x) { return -1.0 / (x * x); },
          [](double x) { return 2.0 / (x * x * x); },
          [](double x) { return std::log(x); }};
}

TestFunction make_log() {
  return {"log", Domain{kPositiveDomainFloor, kInf},
          [](double x) { return std::log(x); },
          [](double x) { return 1.0 / x; },
          [](double x) { return -1.0 / (x * x); },
          [](double x) { return x * std::log(x) - x; }};
}

bool is_nonnegative_integer(double n) { return n >= 0.0 && std::floor(n) == n; }

std::string format_exponent(double n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

TestFunction make_power(double n) {
  if (!std::isfinite(n)) {
    throw LookupError("pow_n exponent must be finite");
  }
  TestFunction fn;
  fn.name = "pow_n:" + format_exponent(n);
  fn.domain = is_nonnegative_integer(n) ? Domain{} : Domain{kPositiveDomainFloor, kInf};
  fn.f = [n](double x) { return std::pow(x, n); };
  if (n == 0.0) {
    fn.df = [](double) { return 0.0; };
  } else {
    fn.df = [n](double x) { return n * std::pow(x, n - 1.0); };
  }
  if (n == 0.0 || n == 1.0) {
    fn.d2f = [](double) { return 0.0; };
  } else {
    fn.d2f = [n](double x) { return n * (n - 1.0) * std::pow(x, n - 2.0); };
  }
  if (n == -1.0) {
    fn.antiderivative = [](double x) { return std::log(x); };
  } else {
    fn.antiderivative = [n](double x) { return std::pow(x, n + 1.0) / (n + 1.0); };
  }
  return fn;
}

double parse_number(std::string_view text, std::string_view full_name) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw LookupError("cannot parse exponent in '" + std::string(full_name) + "'");
  }
  return value;
}

}  // namespace

void TestFunction::require_domain(const Interval& iv) const {
  if (!domain.contains(iv)) {
    std::ostringstream msg;
    msg << "interval [" << iv.a() << ", " << iv.b() << "] lies outside the domain of '" << name
        << "' [" << domain.lo << ", " << domain.hi << "]";
    throw DomainError(msg.str());
  }
}

std::optional<double> power_exponent(std::string_view name) {
  constexpr std::string_view prefix = "pow_n";
  if (name.substr(0, prefix.size()) != prefix) {
    return std::nullopt;
  }
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == ':') {
    return parse_number(rest.substr(1), name);
  }
  if (rest.size() >= 3 && rest.front() == '(' && rest.back() == ')') {
    return parse_number(rest.substr(1, rest.size() - 2), name);
  }
  throw LookupError("pow_n needs an exponent, e.g. pow_n:4 (got '" + std::string(name) + "')");
}

TestFunction catalog_lookup(std::string_view name) {
  if (name == "square") return make_square();
  if (name == "cubic") return make_cubic();
  if (name == "exp") return make_exp();
  if (name == "recip") return make_recip();
  if (name == "log") return make_log();
  if (auto n = power_exponent(name)) return make_power(*n);

  std::lock_guard lock(registry_mutex());
  for (const TestFunction& fn : registry()) {
    if (fn.name == name) return fn;
  }
  throw LookupError("unknown function '" + std::string(name) + "'");
}

void register_function(TestFunction fn) {
  if (fn.name.empty() || !fn.f || !fn.df || !fn.d2f) {
    throw ParameterError("registered functions need a name and f, f', f'' evaluators");
  }
  const auto& builtins = builtin_names();
  if (std::find(builtins.begin(), builtins.end(), fn.name) != builtins.end() ||
      fn.name.rfind("pow_n", 0) == 0) {
    throw ParameterError("cannot replace built-in function '" + fn.name + "'");
  }
  std::lock_guard lock(registry_mutex());
  auto& fns = registry();
  auto it = std::find_if(fns.begin(), fns.end(), [&](const TestFunction& g) { return g.name == fn.name; });
  if (it != fns.end()) {
    *it = std::move(fn);
  } else {
    fns.push_back(std::move(fn));
  }
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names = builtin_names();
  std::lock_guard lock(registry_mutex());
  for (const TestFunction& fn : registry()) names.push_back(fn.name);
  return names;
}

ConvexityVerdict check_abs_f2_convex(const TestFunction& fn, const Interval& iv, double q,
                                     std::size_t n) {
  if (n < 3) {
    throw ParameterError("convexity check needs at least 3 samples");
  }
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw ParameterError("convexity exponent q must be >= 1");
  }
  fn.require_domain(iv);

  // Half-step grid: the midpoint of full-grid nodes i and j is node i + j.
  const std::size_t m = 2 * (n - 1) + 1;
  const double step = iv.width() / static_cast<double>(m - 1);
  std::vector<double> abs_f2(m);
  std::vector<double> pow_f2(m);
  double max_abs = 0.0;
  double max_pow = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double x = (k + 1 == m) ? iv.b() : iv.a() + step * static_cast<double>(k);
    const double v = fn.d2f(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "f'' of '" << fn.name << "' is not finite at x = " << x;
      throw DomainError(msg.str());
    }
    abs_f2[k] = std::abs(v);
    pow_f2[k] = std::pow(abs_f2[k], q);
    max_abs = std::max(max_abs, abs_f2[k]);
    max_pow = std::max(max_pow, pow_f2[k]);
  }

  auto worst_excess = [n](const std::vector<double>& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double excess = g[i + j] - 0.5 * (g[2 * i] + g[2 * j]);
        worst = std::max(worst, excess);
      }
    }
    return worst;
  };

  const double excess_abs = worst_excess(abs_f2);
  const double excess_pow = worst_excess(pow_f2);
  const double tol_abs = kConvexityRelativeTolerance * max_abs;
  const double tol_pow = kConvexityRelativeTolerance * max_pow;

  ConvexityVerdict v;
  v.q = q;
  v.samples = n;
  v.convex_abs_f2 = excess_abs <= tol_abs;
  v.convex_abs_f2_pow_q = excess_pow <= tol_pow;
  v.worst_violation_abs = v.convex_abs_f2 ? 0.0 : excess_abs;
  v.worst_violation = v.convex_abs_f2_pow_q ? 0.0 : excess_pow;
  return v;
}

DerivativeMismatch derivative_mismatch(const TestFunction& fn, const Interval& iv, double h,
                                       std::size_t samples) {
  fn.require_domain(iv);
  if (samples == 0) {
    throw ParameterError("derivative check needs at least one sample");
  }
  DerivativeMismatch out;
  if (fn.antiderivative) out.antiderivative = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double x = iv.a() + iv.width() * static_cast<double>(k + 1) / static_cast<double>(samples + 1);
    if (!fn.domain.contains(x - h) || !fn.domain.contains(x + h)) {
      throw DomainError("finite-difference stencil leaves the domain of '" + fn.name + "'");
    }
    out.first = std::max(out.first, std::abs(fn.df(x) - numint::finite_diff_first(fn.f, x, h)));
    out.second = std::max(out.second, std::abs(fn.d2f(x) - numint::finite_diff_first(fn.df, x, h)));
    if (fn.antiderivative) {
      const double fd = numint::finite_diff_first(*fn.antiderivative, x, h);
      out.antiderivative = std::max(*out.antiderivative, std::abs(fn.f(x) - fd));
    }
  }
  return out;
}

}  // namespace hhb
