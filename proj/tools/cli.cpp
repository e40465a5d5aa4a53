#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gossamer/discrete_sum.hpp"
#include "gossamer/errors.hpp"
#include "gossamer/poly_calculus.hpp"
#include "gossamer/report.hpp"
#include "gossamer/riemann.hpp"
#include "gossamer/step_smoothing.hpp"

namespace gossamer::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;

  // verify
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  bool timing = false;
  bool verbose = false;

  // riemann / pipeline / ftc
  std::string poly;
  std::string nu_exp = "1";
  bool probe = false;
  std::string base = "0";
  std::string at;
  std::string lower;
  std::string upper;
  std::string h_exp = "-1";

  // sum
  std::string term;
  std::string from;
  std::string to;

  // divergent
  unsigned power = 2;
  std::string n_exp = "1";

  // smooth
  std::string input;
  std::string shape = "linear";
  std::string eps_exp = "-1";
  std::string emit_csv;
  std::size_t samples = 201;
  double standin = 0.0;
};

// Usage-level failure raised while interpreting an option value.
class UsageError : public Error {
 public:
  using Error::Error;
};

GossamerNumber omega_power(const std::string& exponent_text, int required_sign, const char* flag) {
  const Rational q = Rational::parse(exponent_text);
  if (required_sign != 0 && q.sign() != required_sign) {
    throw UsageError(std::string(flag) + " must be " + (required_sign < 0 ? "negative" : "positive"));
  }
  return GossamerNumber::omega(q);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport report = run_suite(o.suite, o.seed, o.cases);
  if (o.json) {
    out << report.to_json(o.timing) << "\n";
  } else {
    out << report.to_text(o.verbose);
  }
  return report.all_passed() ? kExitPass : kExitFailure;
}

int cmd_riemann(const Options& o, std::ostream& out) {
  const Polynomial f = Polynomial::parse(o.poly);
  const GossamerNumber nu = omega_power(o.nu_exp, 1, "--nu-exp");
  const UniformRiemannSum sum = uniform_riemann_sum(f, nu);
  const Rational st = sum.value.standard_part();
  const Rational integral = definite_integral(f, Rational(0), Rational(1));
  const bool limit_ok = st == integral;

  std::optional<RiemannRemainder> remainder;
  if (!sum.value.is_zero() && !integral.is_zero() && nu == GossamerNumber::omega()) remainder = riemann_remainder(f);
  std::optional<bool> integrable;
  try {
    integrable = integrability_check(f, nu);
  } catch (const ZeroMagnitude&) {
  }
  std::vector<ConjectureProbe> probes;
  if (o.probe) {
    const std::vector<Rational> partition = dyadic_partition(10);
    const std::vector<std::size_t> ns{std::size_t{1} << 6, std::size_t{1} << 10, std::size_t{1} << 14};
    for (const std::size_t n : ns) probes.push_back(conjecture_probe(f, partition, n));
  }

  if (o.json) {
    ordered_json doc{{"integrand", f.str()},
                     {"nu", nu.str()},
                     {"sum", sum.value.str()},
                     {"truncated", sum.value.truncated()},
                     {"st", st.str()},
                     {"integral_0_1", integral.str()},
                     {"match", limit_ok}};
    if (remainder) doc["remainder"] = {{"c", remainder->c.str()}, {"valid", remainder->valid}};
    if (integrable) doc["integrable"] = *integrable;
    if (!probes.empty()) {
      doc["conjecture_probe"] = ordered_json::array();
      for (const auto& p : probes) {
        doc["conjecture_probe"].push_back(
            {{"n", p.refinement}, {"uniform", p.uniform_value}, {"tagged", p.tagged_value}, {"gap", p.gap}});
      }
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "sum = " << sum.value << "; st = " << st << "\n";
    out << "integral_0^1 = " << integral << "; match = " << bool_text(limit_ok) << "\n";
    if (remainder) out << "remainder c = " << remainder->c << "; valid = " << bool_text(remainder->valid) << "\n";
    if (integrable) out << "uniformly integrable = " << bool_text(*integrable) << "\n";
    for (const auto& p : probes) {
      out << std::setprecision(12) << "probe n = " << p.refinement << ": uniform = " << p.uniform_value
          << ", tagged = " << p.tagged_value << ", gap = " << p.gap << " (report only)\n";
    }
  }
  const bool ok = limit_ok && (!remainder || remainder->valid);
  return ok ? kExitPass : kExitFailure;
}

int cmd_pipeline(const Options& o, std::ostream& out) {
  const Polynomial f = Polynomial::parse(o.poly);
  const GossamerNumber nu = omega_power(o.nu_exp, 1, "--nu-exp");
  const PipelineTrace trace = definite_to_sum_pipeline(f, nu);
  ordered_json stages = ordered_json::array();
  for (const auto& s : trace.stages) {
    stages.push_back({{"stage", s.stage}, {"expression", s.expression}, {"value", s.value.str()}});
  }
  if (o.json) {
    out << ordered_json{{"stages", stages},
                        {"remainder", trace.remainder.str()},
                        {"stages_equal", trace.stages_equal},
                        {"remainder_negligible", trace.remainder_negligible},
                        {"recovered", trace.recovered.str()}}
               .dump(2)
        << "\n";
  } else {
    out << stages.dump(2) << "\n";
  }
  return trace.stages_equal && trace.remainder_negligible ? kExitPass : kExitFailure;
}

int cmd_ftc(const Options& o, std::ostream& out) {
  const Polynomial p = Polynomial::parse(o.poly);
  const Rational base = Rational::parse(o.base);
  const Rational x = o.at.empty() ? base + Rational(1) : Rational::parse(o.at);
  const GossamerNumber h = omega_power(o.h_exp, -1, "--h-exp");
  const FtcInverseCheck inv = ftc_inverse_check(p, base, x, h);
  const OrderSwap swap = order_swap_demo(p, x, h);

  ordered_json doc{{"integrand", p.str()},
                   {"accumulation", accumulation(p, base).str()},
                   {"h", h.str()},
                   {"x", x.str()},
                   {"difference_quotient", inv.difference_quotient.str()},
                   {"recovered", inv.recovered.str()},
                   {"ftc_inverse", inv.equal},
                   {"order_swap", {{"h_first", swap.h_first.str()}, {"n_first", swap.n_first.str()}, {"differ", swap.differ}}}};
  bool ok = inv.equal;
  if (!o.lower.empty() || !o.upper.empty()) {
    const GossamerNumber a = o.lower.empty() ? GossamerNumber(0) : GossamerNumber::parse(o.lower);
    const GossamerNumber b = o.upper.empty() ? GossamerNumber(1) : GossamerNumber::parse(o.upper);
    // FTC read forwards: p is F', so the integral must equal the difference of the primitive.
    const GossamerNumber integral = definite_integral(p, a, b);
    const Polynomial F = antiderivative(p) + Polynomial::constant(Rational(7));
    const GossamerNumber difference = eval(F, b) - eval(F, a);
    doc["integral"] = {{"from", a.str()}, {"to", b.str()}, {"value", integral.str()}, {"ftc", integral == difference}};
    ok = ok && integral == difference;
  }
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "F(x) = " << doc["accumulation"].get<std::string>() << "\n";
    out << "(F(x+h) - F(x))/h at x = " << x << ", h = " << h << ": " << inv.difference_quotient << "\n";
    out << "st = " << inv.recovered << "; p(x) = " << eval(p, x) << "; equal = " << bool_text(inv.equal) << "\n";
    out << "order swap: h first = " << swap.h_first << ", n first = " << swap.n_first
        << ", differ = " << bool_text(swap.differ) << "\n";
    if (doc.contains("integral")) {
      out << "integral = " << doc["integral"]["value"].get<std::string>()
          << "; F(b) - F(a) agrees = " << bool_text(doc["integral"]["ftc"].get<bool>()) << "\n";
    }
  }
  return ok ? kExitPass : kExitFailure;
}

int cmd_sum(const Options& o, std::ostream& out) {
  const Polynomial g = Polynomial::parse(o.term);
  const GossamerNumber a = GossamerNumber::parse(o.from);
  const GossamerNumber b = GossamerNumber::parse(o.to);
  const ClosedFormSum closed = indefinite_sum(g);
  const SumFtc s = sum_ftc(g, a, b);
  const bool finite = a.is_real() && b.is_real();
  std::optional<Rational> oracle;
  if (finite) {
    oracle = sum_interval_bruteforce(g, a.standard_part().numerator().get_si(), b.standard_part().numerator().get_si());
  }
  if (o.json) {
    ordered_json doc{{"closed_form", closed.point_function.str('n')},
                     {"value", s.value.str()},
                     {"oracle", oracle ? ordered_json(oracle->str()) : ordered_json(nullptr)},
                     {"match", s.oracle_match}};
    if (s.negative_argument) doc["negative_argument"] = true;
    out << doc.dump(2) << "\n";
  } else {
    out << "G(n) = " << closed.point_function.str('n') << "\n";
    out << "sum_{k=" << a << "}^{" << b << "} " << g.str('k') << " = " << s.value << "\n";
    if (oracle) {
      out << "oracle = " << *oracle << "; match = " << bool_text(s.oracle_match) << "\n";
    } else {
      out << "oracle = n/a (infinite endpoint)\n";
    }
  }
  return s.oracle_match ? kExitPass : kExitFailure;
}

int cmd_divergent(const Options& o, std::ostream& out) {
  const GossamerNumber n = omega_power(o.n_exp, 1, "--n-exp");
  const DivergentIntegral d = divergent_integral_via_sum(o.power, n);
  if (o.json) {
    out << ordered_json{{"power", o.power},
                        {"n", n.str()},
                        {"value", d.value.str()},
                        {"scaled", d.scaled.str()},
                        {"exact", d.exact.str()},
                        {"asymptotic", d.asymptotic}}
               .dump(2)
        << "\n";
  } else {
    out << "integral_1^n x^" << o.power << " dx via sum = " << d.value << "\n";
    out << "exact = " << d.exact << "; asymptotic = " << bool_text(d.asymptotic) << "\n";
  }
  return d.asymptotic ? kExitPass : kExitFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_smooth(const Options& o, std::ostream& out) {
  const StepFunction f = StepFunction::from_json(read_file(o.input));
  const auto shape = parse_bridge_shape(o.shape);
  const bool logistic = o.shape == "logistic";
  if (!shape && !logistic) throw UsageError("--shape must be linear, cubic, quintic or logistic");
  const GossamerNumber eps = omega_power(o.eps_exp, -1, "--eps-exp");
  const auto q = f.breakpoints();
  const Rational lo = o.from.empty() ? (q.empty() ? Rational(0) : q.front() - Rational(1)) : Rational::parse(o.from);
  const Rational hi = o.to.empty() ? (q.empty() ? Rational(1) : q.back() + Rational(1)) : Rational::parse(o.to);

  double standin = o.standin;
  if (standin <= 0.0) {
    standin = 0.01 * std::max(1.0, (hi - lo).to_double());
    for (std::size_t i = 1; i < q.size(); ++i) standin = std::min(standin, (q[i] - q[i - 1]).to_double() / 4.0);
  }

  ordered_json doc{{"shape", o.shape}, {"eps", eps.str()}, {"from", lo.str()}, {"to", hi.str()}};
  bool ok = true;
  const Rational step_area = area(f, lo, hi);
  doc["area"] = step_area.str();
  const DiscontinuityBudget budget = trapezoid_discontinuity_budget(f, eps);
  ordered_json per_bridge = ordered_json::array();
  for (const auto& a : budget.per_bridge) per_bridge.push_back(a.str());
  doc["budget"] = {{"per_bridge", per_bridge}, {"total", budget.total.str()}, {"infinitesimal", budget.infinitesimal}};
  ok = ok && budget.infinitesimal;

  std::optional<SmoothedFunction> f2;
  std::optional<AreaDelta> delta;
  if (shape) {
    f2 = smooth(f, *shape, eps);
    delta = area_delta(f, *f2, lo, hi);
    const bool round_trip = transfer_to_real(*f2) == f;
    doc["smoothed_area"] = smoothed_area(*f2, lo, hi).str();
    doc["area_delta"] = delta->delta.str();
    doc["delta_infinitesimal"] = delta->infinitesimal;
    doc["round_trip"] = round_trip;
    ok = ok && delta->infinitesimal && round_trip;
  }

  if (!o.emit_csv.empty()) {
    std::ofstream csv(o.emit_csv);
    if (!csv) throw UsageError("cannot write " + o.emit_csv);
    csv << "# shape=" << o.shape << " halfwidth=" << eps.str() << " rendered at finite stand-in width "
        << std::setprecision(17) << standin << "\n";
    csv << "x,y\n";
    const std::size_t n = std::max<std::size_t>(o.samples, 2);
    const double x0 = lo.to_double();
    const double x1 = hi.to_double();
    for (std::size_t i = 0; i < n; ++i) {
      const double x = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(n - 1);
      const double y = f2 ? f2->sample(x, standin) : logistic_sample(f, x, standin);
      csv << std::setprecision(17) << x << "," << y << "\n";
    }
    doc["csv"] = {{"path", o.emit_csv}, {"samples", n}, {"eps_standin", standin}};
  }

  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    if (delta) {
      out << "area_delta = " << delta->delta << ", budget = " << budget.total << "\n";
      out << "area = " << step_area << "; smoothed area = " << doc["smoothed_area"].get<std::string>()
          << "; round trip = " << bool_text(doc["round_trip"].get<bool>()) << "\n";
    } else {
      out << "budget = " << budget.total << " (logistic bridges are sampled only)\n";
    }
    if (!o.emit_csv.empty()) out << "wrote " << o.emit_csv << "\n";
  }
  return ok ? kExitPass : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact gossamer-number calculus: Riemann sums at infinity, FTC checks, discrete sums and "
               "step-function smoothing."};
  app.name(args.empty() ? "gossamer" : args.front());
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite over random cases");
  verify->add_option("--suite", o.suite, "gossamer-axioms, riemann, ftc, sum-ftc, smoothing or all")->required();
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--cases", o.cases, "Random cases per suite");
  verify->add_flag("--timing", o.timing, "Include wall-clock duration in JSON output");
  verify->add_flag("--verbose", o.verbose, "List passing cases too");
  verify->add_flag("--json", o.json, "JSON report");

  auto* riemann = app.add_subcommand("riemann", "Uniform Riemann sum of a polynomial at nu = w^Q");
  riemann->add_option("--poly", o.poly, "Integrand, e.g. \"3/2*x^2 - x + 5\"")->required();
  riemann->add_option("--nu-exp", o.nu_exp, "Positive rational Q with nu = w^Q");
  riemann->add_flag("--probe", o.probe, "Append the floating-point non-uniform partition probe");
  riemann->add_flag("--json", o.json, "JSON output");

  auto* pipeline = app.add_subcommand("pipeline", "Trace integral_0^1 f through to the uniform Riemann sum");
  pipeline->add_option("--poly", o.poly, "Integrand")->required();
  pipeline->add_option("--nu-exp", o.nu_exp, "Positive rational Q with nu = w^Q");
  pipeline->add_flag("--json", o.json, "Wrap the stages with the remainder analysis");

  auto* ftc = app.add_subcommand("ftc", "Derivative of the accumulation function at an infinitesimal step");
  ftc->add_option("--poly", o.poly, "Integrand")->required();
  ftc->add_option("--base", o.base, "Lower limit a of the accumulation function");
  ftc->add_option("--at", o.at, "Point x (default a + 1)");
  ftc->add_option("--h-exp", o.h_exp, "Negative rational Q with h = w^Q");
  ftc->add_option("--from", o.lower, "Lower bound of a definite integral (gossamer text)");
  ftc->add_option("--to", o.upper, "Upper bound of a definite integral (gossamer text)");
  ftc->add_flag("--json", o.json, "JSON output");

  auto* sum = app.add_subcommand("sum", "Closed-interval sum through summation at a point");
  sum->add_option("--term", o.term, "Summand in k, e.g. \"k^2\"")->required();
  sum->add_option("--from", o.from, "Lower endpoint (integer or gossamer text such as w)")->required();
  sum->add_option("--to", o.to, "Upper endpoint")->required();
  sum->add_flag("--json", o.json, "JSON output");

  auto* divergent = app.add_subcommand("divergent", "integral_1^n x^p dx at infinite n through a Riemann sum");
  divergent->add_option("--power", o.power, "Exponent p");
  divergent->add_option("--n-exp", o.n_exp, "Positive rational Q with n = w^Q");
  divergent->add_flag("--json", o.json, "JSON output");

  auto* smooth_cmd = app.add_subcommand("smooth", "Bridge the jumps of a step function with infinitesimal curves");
  smooth_cmd->add_option("--input", o.input, "Step function JSON file")->required();
  smooth_cmd->add_option("--shape", o.shape, "linear, cubic, quintic or logistic (sampling only)");
  smooth_cmd->add_option("--eps-exp", o.eps_exp, "Negative rational Q with eps = w^Q");
  smooth_cmd->add_option("--from", o.from, "Left end of the area window");
  smooth_cmd->add_option("--to", o.to, "Right end of the area window");
  smooth_cmd->add_option("--emit-csv", o.emit_csv, "Write sampled curve to this CSV file");
  smooth_cmd->add_option("--samples", o.samples, "Number of CSV samples");
  smooth_cmd->add_option("--standin", o.standin, "Finite width standing in for eps when sampling");
  smooth_cmd->add_flag("--json", o.json, "JSON output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (const char* floor = std::getenv("GOSSAMER_TRUNC_FLOOR"); floor != nullptr && *floor != '\0') {
    try {
      if (Rational::parse(floor).sign() >= 0) throw DomainError("must be negative");
    } catch (const Error& e) {
      err << "GOSSAMER_TRUNC_FLOOR='" << floor << "' is not a negative rational (" << e.what() << ")\n";
      return kExitUsage;
    }
  }

  try {
    if (verify->parsed()) {
      if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end()) {
        err << "unknown suite '" << o.suite << "'\n";
        return kExitUsage;
      }
      return cmd_verify(o, out);
    }
    if (riemann->parsed()) return cmd_riemann(o, out);
    if (pipeline->parsed()) return cmd_pipeline(o, out);
    if (ftc->parsed()) return cmd_ftc(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (divergent->parsed()) return cmd_divergent(o, out);
    if (smooth_cmd->parsed()) return cmd_smooth(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gossamer::cli
