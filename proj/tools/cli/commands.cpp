#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "format.hpp"
#include "hhbounds/errors.hpp"
#include "hhbounds/numint.hpp"
#include "report.hpp"

namespace hhb::cli {
namespace {

struct Output {
  std::string format;
  std::string path;
};

// Writes to --output when given, otherwise to the stream handed to run_command.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("HH_BOUNDS_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const double tol = parse_double(raw);
  if (!(tol >= numint::kMinTolerance) || !std::isfinite(tol)) {
    throw ParameterError("HH_BOUNDS_TOL must be a finite number >= 1e-14");
  }
  return tol;
}

double tolerance_or(double fallback) { return env_tolerance().value_or(fallback); }

void add_output_options(CLI::App* cmd, Output& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", o.path, "Write the report to this file instead of standard output");
}

std::vector<double> unit_grid(std::size_t n) {
  if (n < 2) throw ParameterError("grids need at least 2 points");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json rows_json(const std::vector<json>& rows) {
  if (rows.size() == 1) return rows.front();
  return json(rows);
}

// Runs f(i) for i in [0, n) on up to `threads` workers. Results are written by
// index by the callee; the first exception (by index) is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool slack_violation(const BoundReport& r) { return r.hypothesis_ok && r.slack < -kSlackTolerance; }

void flag(std::ostream& err, const BoundReport& r) {
  err << "violation: " << to_string(r.theorem) << " function=" << r.function
      << " alpha=" << fmt_double(r.params.alpha()) << " lambda=" << fmt_double(r.params.lambda())
      << " q=" << fmt_double(r.params.q()) << " slack=" << fmt_double(r.slack) << '\n';
}

// ---------------------------------------------------------------- identity

struct IdentityArgs {
  std::string function = "square";
  double a = 0.0;
  double b = 1.0;
  double alpha = 0.5;
  double lambda = 0.0;
  std::size_t grid = 0;
  Output out;
};

int run_identity(const IdentityArgs& args, std::ostream& out, std::ostream& err) {
  const TestFunction fn = catalog_lookup(args.function);
  const Interval iv(args.a, args.b);
  const double tol = tolerance_or(numint::kIdentityTolerance);

  std::vector<std::pair<double, double>> points;
  if (args.grid == 0) {
    points.emplace_back(args.alpha, args.lambda);
  } else {
    for (double al : unit_grid(args.grid)) {
      for (double la : unit_grid(args.grid)) points.emplace_back(al, la);
    }
  }

  std::vector<IdentityReport> reports;
  for (auto [al, la] : points) reports.push_back(identity_residual(fn, iv, al, la, tol));

  int status = kExitOk;
  for (const auto& r : reports) {
    if (!(r.residual < kIdentityGate)) {
      err << "violation: identity residual " << fmt_double(r.residual) << " at alpha=" << fmt_double(r.params.alpha())
          << " lambda=" << fmt_double(r.params.lambda()) << '\n';
      status = kExitViolation;
    }
  }

  Sink sink(args.out.path, out);
  if (args.out.format == "json") {
    std::vector<json> rows;
    for (const auto& r : reports) rows.push_back(to_json(r));
    emit_json(sink.get(), rows_json(rows));
  } else {
    CsvWriter csv(sink.get(), identity_columns());
    for (const auto& r : reports) csv.row(csv_row(r));
  }
  return status;
}

// ---------------------------------------------------------------- coeffs

struct CoeffArgs {
  double alpha = 0.5;
  double lambda = 0.0;
  double q = 1.0;
  std::string path;
};

int run_coeffs(const CoeffArgs& args, std::ostream& out) {
  const CoefficientSet cs = compute_coefficients(Params(args.alpha, args.lambda, args.q));
  Sink sink(args.path, out);
  emit_json(sink.get(), to_json(cs));
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundArgs {
  std::string function = "square";
  double a = 0.0;
  double b = 1.0;
  double alpha = 0.5;
  double lambda = 0.0;
  double q = 1.0;
  std::string theorems;
  std::size_t samples = kDefaultConvexitySamples;
  double fault_scale = 1.0;
  Output out;
};

std::vector<Theorem> theorem_list(const std::string& text, bool any_q_above_one) {
  std::vector<Theorem> out;
  if (text.empty()) {
    out = {Theorem::T2, Theorem::T3};
    if (any_q_above_one) out.push_back(Theorem::T4);
    return out;
  }
  for (const std::string& item : split_list(text)) out.push_back(parse_theorem(item));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_bounds(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  const TestFunction fn = catalog_lookup(args.function);
  const Interval iv(args.a, args.b);
  const Params params(args.alpha, args.lambda, args.q);
  BoundOptions options;
  options.coefficient_scale = args.fault_scale;
  options.convexity_samples = args.samples;
  options.tol = tolerance_or(numint::kFormulaTolerance);

  std::vector<BoundReport> reports;
  for (Theorem t : theorem_list(args.theorems, params.has_conjugate())) {
    reports.push_back(verify_bound(fn, iv, params, t, options));
  }

  int status = kExitOk;
  for (const auto& r : reports) {
    if (slack_violation(r)) {
      flag(err, r);
      status = kExitViolation;
    }
  }

  Sink sink(args.out.path, out);
  if (args.out.format == "json") {
    std::vector<json> rows;
    for (const auto& r : reports) rows.push_back(to_json(r));
    emit_json(sink.get(), rows_json(rows));
  } else {
    CsvWriter csv(sink.get(), bound_columns());
    for (const auto& r : reports) csv.row(csv_row(r));
  }
  return status;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::size_t grid = 9;
  std::size_t alpha_grid = 0;
  std::size_t lambda_grid = 0;
  std::string q_values = "1,2";
  std::string functions = "square,recip,log";
  std::string theorems = "T2,T3,T4";
  double a = 1.0;
  double b = 2.0;
  unsigned threads = 0;
  std::size_t samples = kDefaultConvexitySamples;
  double fault_scale = 1.0;
  Output out;
};

struct SweepTask {
  std::size_t function = 0;
  double alpha = 0.0;
  double lambda = 0.0;
  double q = 1.0;
  Theorem theorem = Theorem::T2;
};

int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const Interval iv(args.a, args.b);
  std::vector<std::string> names = split_list(args.functions);
  if (names.empty()) throw ParameterError("sweep needs at least one function");
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<TestFunction> fns;
  for (const auto& n : names) {
    fns.push_back(catalog_lookup(n));
    fns.back().require_domain(iv);
  }

  std::vector<double> qs = parse_double_list(args.q_values);
  for (double q : qs) Params(0.5, 0.0, q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  std::vector<Theorem> theorems = theorem_list(args.theorems, true);
  for (Theorem t : theorems) {
    if (t != Theorem::T2 && t != Theorem::T3 && t != Theorem::T4) {
      throw ParameterError("sweep covers T2, T3 and T4 only");
    }
  }

  const std::vector<double> alphas = unit_grid(args.alpha_grid ? args.alpha_grid : args.grid);
  const std::vector<double> lambdas = unit_grid(args.lambda_grid ? args.lambda_grid : args.grid);

  // Task order is the emission order: function, alpha, lambda, q, theorem.
  std::vector<SweepTask> tasks;
  for (std::size_t f = 0; f < fns.size(); ++f) {
    for (double al : alphas) {
      for (double la : lambdas) {
        for (double q : qs) {
          for (Theorem t : theorems) {
            if (t == Theorem::T4 && !(q > 1.0)) continue;
            tasks.push_back({f, al, la, q, t});
          }
        }
      }
    }
  }

  BoundOptions options;
  options.coefficient_scale = args.fault_scale;
  options.convexity_samples = args.samples;
  options.tol = tolerance_or(numint::kFormulaTolerance);

  std::vector<std::optional<BoundReport>> results(tasks.size());
  const unsigned threads = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const SweepTask& t = tasks[i];
    results[i] = verify_bound(fns[t.function], iv, Params(t.alpha, t.lambda, t.q), t.theorem, options);
  });

  std::size_t violations = 0;
  std::size_t hypothesis_failures = 0;
  const BoundReport* worst = nullptr;
  for (const auto& r : results) {
    if (!r->hypothesis_ok) {
      ++hypothesis_failures;
      continue;
    }
    if (slack_violation(*r)) {
      ++violations;
      flag(err, *r);
    }
    if (worst == nullptr || r->slack < worst->slack) worst = &*r;
  }

  Sink sink(args.out.path, out);
  if (args.out.format == "json") {
    json rows = json::array();
    for (const auto& r : results) rows.push_back(to_json(*r));
    json summary{{"rows", results.size()},
                 {"violations", violations},
                 {"hypothesis_failures", hypothesis_failures},
                 {"min_slack", nullptr}};
    if (worst) {
      summary["min_slack"] = worst->slack;
      summary["argmin"] = to_json(*worst);
    }
    emit_json(sink.get(), json{{"rows", rows}, {"summary", summary}});
  } else {
    CsvWriter csv(sink.get(), bound_columns());
    for (const auto& r : results) csv.row(csv_row(*r));
    std::ostream& s = sink.get();
    s << "# summary rows=" << results.size() << " violations=" << violations
      << " hypothesis_failures=" << hypothesis_failures;
    if (worst) {
      s << " min_slack=" << fmt_double(worst->slack) << " at theorem=" << to_string(worst->theorem)
        << " function=" << worst->function << " alpha=" << fmt_double(worst->params.alpha())
        << " lambda=" << fmt_double(worst->params.lambda()) << " q=" << fmt_double(worst->params.q());
    }
    s << '\n';
  }
  return violations ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- quadrature

struct QuadArgs {
  std::string function = "exp";
  double a = 0.0;
  double b = 1.0;
  std::string rule = "simpson";
  std::size_t cells = 1;
  double q = 2.0;
  std::string theorem = "T4";
  bool oracle = false;
  Output out;
};

int run_quadrature(const QuadArgs& args, std::ostream& out, std::ostream& err) {
  const TestFunction fn = catalog_lookup(args.function);
  const Interval iv(args.a, args.b);
  const RuleSpec rule = RuleSpec::parse(args.rule);
  const Theorem theorem = parse_theorem(args.theorem);
  const CertifiedResult res = composite_certified(fn, iv, args.cells, rule, args.q, theorem);

  int status = kExitOk;
  std::optional<double> true_error;
  if (args.oracle) {
    const double exact = numint::integrate(fn.f, iv, tolerance_or(numint::kFormulaTolerance)).value;
    true_error = std::abs(res.value - exact);
    if (*true_error > res.error_bound + kCertificationSlack) {
      err << "violation: true error " << fmt_double(*true_error) << " exceeds certified bound "
          << fmt_double(res.error_bound) << '\n';
      status = kExitViolation;
    }
  }

  Sink sink(args.out.path, out);
  if (args.out.format == "json") {
    json j{{"function", fn.name},   {"rule", rule.name},         {"alpha", rule.alpha},
           {"lambda", rule.lambda}, {"a", iv.a()},               {"b", iv.b()},
           {"cells", res.cells},    {"q", res.q},                {"theorem", to_string(res.theorem_used)},
           {"value", res.value},    {"error_bound", res.error_bound}};
    if (true_error) j["true_error"] = *true_error;
    emit_json(sink.get(), j);
  } else {
    CsvWriter csv(sink.get(), {"function", "rule", "a", "b", "cells", "q", "theorem", "value", "error_bound",
                               "true_error"});
    csv.row({fn.name, rule.name, fmt_double(iv.a()), fmt_double(iv.b()), std::to_string(res.cells),
             fmt_double(res.q), std::string(to_string(res.theorem_used)), fmt_double(res.value),
             fmt_double(res.error_bound), true_error ? fmt_double(*true_error) : std::string()});
  }
  return status;
}

// ---------------------------------------------------------------- means

struct MeansArgs {
  std::string family = "all";
  std::string variant = "all";
  double a = 1.0;
  double b = 2.0;
  double q = 2.0;
  int n = 3;
  std::string constant = "derived";
  Output out;
};

int run_means(const MeansArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<MeanFamily> families;
  if (args.family == "all") {
    families = {MeanFamily::recip, MeanFamily::log, MeanFamily::pow_n};
  } else {
    for (const auto& f : split_list(args.family)) families.push_back(parse_mean_family(f));
  }
  std::vector<NamedRule> variants;
  if (args.variant == "all") {
    variants = {NamedRule::midpoint, NamedRule::trapezoid, NamedRule::simpson};
  } else {
    for (const auto& v : split_list(args.variant)) variants.push_back(parse_named_rule(v));
  }
  const ConstantForm form = args.constant == "printed" ? ConstantForm::printed : ConstantForm::derived;

  std::vector<MeansReport> reports;
  for (MeanFamily f : families) {
    for (NamedRule v : variants) {
      const std::optional<int> n = f == MeanFamily::pow_n ? std::optional<int>(args.n) : std::nullopt;
      reports.push_back(mean_inequality(f, v, args.a, args.b, args.q, n, form));
    }
  }

  int status = kExitOk;
  for (const auto& r : reports) {
    if (r.slack < -kSlackTolerance) {
      err << "violation: " << to_string(r.family) << '/' << to_string(r.variant) << " slack=" << fmt_double(r.slack)
          << '\n';
      status = kExitViolation;
    }
  }

  Sink sink(args.out.path, out);
  if (args.out.format == "json") {
    std::vector<json> rows;
    for (const auto& r : reports) rows.push_back(to_json(r));
    emit_json(sink.get(), rows_json(rows));
  } else {
    CsvWriter csv(sink.get(), means_columns());
    for (const auto& r : reports) csv.row(csv_row(r));
  }
  return status;
}

// ---------------------------------------------------------------- reduce-check

struct ReduceArgs {
  std::string function = "recip";
  double a = 1.0;
  double b = 2.0;
  std::string lambdas = "0,0.25,0.5,0.75,1";
  std::string q_values = "1,2";
  Output out;
};

bool close(double x, double y) { return std::abs(x - y) <= kReductionTolerance * std::max(1.0, std::abs(y)); }

int run_reduce(const ReduceArgs& args, std::ostream& out, std::ostream& err) {
  const TestFunction fn = catalog_lookup(args.function);
  const Interval iv(args.a, args.b);
  const std::vector<double> lambdas = parse_double_list(args.lambdas);
  const std::vector<double> qs = parse_double_list(args.q_values);
  const EndpointCurvature curv = EndpointCurvature::of(fn, iv);
  const double tol = tolerance_or(numint::kFormulaTolerance);

  struct Row {
    double lambda, q, lhs_new, lhs_ref, t2, g2, t3, g3;
    bool agree;
  };
  std::vector<Row> rows;
  int status = kExitOk;
  for (double la : lambdas) {
    const double lhs_new = lhs_functional(fn, iv, 0.5, la, tol);
    const double lhs_ref = reference_lhs(fn, iv, la, tol);
    for (double q : qs) {
      const ReferenceBounds ref = reference_bounds(curv, iv, la, q);
      Row r{la, q, lhs_new, lhs_ref, bound_t2(curv, iv, 0.5, la), ref.g2, bound_t3(curv, iv, 0.5, la, q), ref.g3,
            false};
      r.agree = close(std::abs(r.lhs_new), std::abs(r.lhs_ref)) && close(r.t2, r.g2) && close(r.t3, r.g3);
      if (!r.agree) {
        err << "discrepancy: lambda=" << fmt_double(la) << " q=" << fmt_double(q) << '\n';
        status = kExitViolation;
      }
      rows.push_back(r);
    }
  }

  Sink sink(args.out.path, out);
  if (args.out.format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back({{"function", fn.name},
                     {"lambda", r.lambda},
                     {"q", r.q},
                     {"lhs_new", r.lhs_new},
                     {"lhs_ref", r.lhs_ref},
                     {"lhs_abs_diff", std::abs(std::abs(r.lhs_new) - std::abs(r.lhs_ref))},
                     {"lhs_sign_flipped", (r.lhs_new < 0) != (r.lhs_ref < 0)},
                     {"t2", r.t2},
                     {"g2", r.g2},
                     {"t3", r.t3},
                     {"g3", r.g3},
                     {"agree", r.agree}});
    }
    emit_json(sink.get(), arr);
  } else {
    CsvWriter csv(sink.get(), {"function", "lambda", "q", "lhs_new", "lhs_ref", "lhs_abs_diff", "t2", "g2",
                               "t2_g2_diff", "t3", "g3", "t3_g3_diff", "agree"});
    for (const Row& r : rows) {
      csv.row({fn.name, fmt_double(r.lambda), fmt_double(r.q), fmt_double(r.lhs_new), fmt_double(r.lhs_ref),
               fmt_double(std::abs(std::abs(r.lhs_new) - std::abs(r.lhs_ref))), fmt_double(r.t2), fmt_double(r.g2),
               fmt_double(r.t2 - r.g2), fmt_double(r.t3), fmt_double(r.g3), fmt_double(r.t3 - r.g3),
               fmt_bool(r.agree)});
    }
  }
  return status;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error bounds for the (alpha, lambda) quadrature family", "hhbounds"};
  app.require_subcommand(1);

  IdentityArgs id;
  auto* cmd_id = app.add_subcommand("identity", "Check the kernel identity at one point or on a grid");
  cmd_id->add_option("--function", id.function, "Catalog function");
  cmd_id->add_option("--a", id.a);
  cmd_id->add_option("--b", id.b);
  cmd_id->add_option("--alpha", id.alpha);
  cmd_id->add_option("--lambda", id.lambda);
  cmd_id->add_option("--grid", id.grid, "Evaluate on an N x N (alpha, lambda) grid instead");
  add_output_options(cmd_id, id.out, "csv");

  CoeffArgs co;
  auto* cmd_co = app.add_subcommand("coeffs", "Print every coefficient for one (alpha, lambda, q)");
  cmd_co->add_option("--alpha", co.alpha);
  cmd_co->add_option("--lambda", co.lambda);
  cmd_co->add_option("--q", co.q);
  cmd_co->add_option("--output,-o", co.path);

  BoundArgs bo;
  auto* cmd_bo = app.add_subcommand("bounds", "Bound reports for one function and parameter set");
  cmd_bo->add_option("--function", bo.function);
  cmd_bo->add_option("--a", bo.a);
  cmd_bo->add_option("--b", bo.b);
  cmd_bo->add_option("--alpha", bo.alpha);
  cmd_bo->add_option("--lambda", bo.lambda);
  cmd_bo->add_option("--q", bo.q);
  cmd_bo->add_option("--theorem,--theorems", bo.theorems, "Comma list of T2, T3, T4, REF_G2, REF_G3");
  cmd_bo->add_option("--samples", bo.samples, "Convexity grid size");
  cmd_bo->add_option("--inject-fault", bo.fault_scale)->group("");
  add_output_options(cmd_bo, bo.out, "json");

  SweepArgs sw;
  auto* cmd_sw = app.add_subcommand("sweep", "Bound reports over an (alpha, lambda, q) grid");
  cmd_sw->add_option("--grid", sw.grid, "Points per axis for alpha and lambda");
  cmd_sw->add_option("--alpha-grid", sw.alpha_grid);
  cmd_sw->add_option("--lambda-grid", sw.lambda_grid);
  cmd_sw->add_option("--q", sw.q_values, "Comma list of q values");
  cmd_sw->add_option("--functions", sw.functions, "Comma list of catalog functions");
  cmd_sw->add_option("--theorems", sw.theorems, "Comma list of T2, T3, T4");
  cmd_sw->add_option("--a", sw.a);
  cmd_sw->add_option("--b", sw.b);
  cmd_sw->add_option("--threads", sw.threads, "Worker threads (0: hardware concurrency)");
  cmd_sw->add_option("--samples", sw.samples, "Convexity grid size");
  cmd_sw->add_option("--inject-fault", sw.fault_scale)->group("");
  add_output_options(cmd_sw, sw.out, "csv");

  QuadArgs qu;
  auto* cmd_qu = app.add_subcommand("quadrature", "Composite rule with a certified error bound");
  cmd_qu->add_option("--function", qu.function);
  cmd_qu->add_option("--a", qu.a);
  cmd_qu->add_option("--b", qu.b);
  cmd_qu->add_option("--rule", qu.rule, "midpoint, trapezoid, simpson or custom:<alpha>,<lambda>");
  cmd_qu->add_option("--cells", qu.cells);
  cmd_qu->add_option("--q", qu.q);
  cmd_qu->add_option("--theorem", qu.theorem);
  cmd_qu->add_flag("--oracle", qu.oracle, "Also report the true error against the reference integrator");
  add_output_options(cmd_qu, qu.out, "json");

  MeansArgs me;
  auto* cmd_me = app.add_subcommand("means", "Special-mean inequalities");
  cmd_me->add_option("--family", me.family, "recip, log, pow_n or all");
  cmd_me->add_option("--variant", me.variant, "midpoint, trapezoid, simpson or all");
  cmd_me->add_option("--a", me.a);
  cmd_me->add_option("--b", me.b);
  cmd_me->add_option("--q", me.q);
  cmd_me->add_option("--n", me.n, "Exponent for pow_n (integer > 2)");
  cmd_me->add_option("--constant", me.constant, "Simpson constant")->check(CLI::IsMember({"derived", "printed"}));
  add_output_options(cmd_me, me.out, "csv");

  ReduceArgs re;
  auto* cmd_re = app.add_subcommand("reduce-check", "Compare alpha = 1/2 with the older midpoint/trapezoid bounds");
  cmd_re->add_option("--function", re.function);
  cmd_re->add_option("--a", re.a);
  cmd_re->add_option("--b", re.b);
  cmd_re->add_option("--lambdas", re.lambdas);
  cmd_re->add_option("--q", re.q_values);
  add_output_options(cmd_re, re.out, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests print to out and exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_id->parsed()) return run_identity(id, out, err);
    if (cmd_co->parsed()) return run_coeffs(co, out);
    if (cmd_bo->parsed()) return run_bounds(bo, out, err);
    if (cmd_sw->parsed()) return run_sweep(sw, out, err);
    if (cmd_qu->parsed()) return run_quadrature(qu, out, err);
    if (cmd_me->parsed()) return run_means(me, out, err);
    if (cmd_re->parsed()) return run_reduce(re, out, err);
  } catch (const HypothesisError& e) {
    err << "hypothesis failure: " << e.what() << '\n';
    return kExitViolation;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitViolation;
  } catch (const numint::OracleFailure& e) {
    err << "oracle failure: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace hhb::cli
