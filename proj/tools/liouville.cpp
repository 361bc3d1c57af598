// Command-line front end: classification, region sweeps, witness
// construction/verification, stability ladders, Hardy checks, and rate
// fits.  CSV/JSON output is deterministic: fixed field order, 12
// significant digits, fixed seeds.
//
// Exit codes: 0 success, 1 usage/config error, 2 verification failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "liouville/criteria.hpp"
#include "liouville/quadrature.hpp"
#include "liouville/stability.hpp"
#include "liouville/witness.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;
using namespace liouville;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open output file " + out_path);
  f << text;
}

EquationKind make_eq(const std::string& eq, double p) {
  if (eq == "G") return EquationKind::gelfand();
  if (eq == "L") return EquationKind::lane_emden(p);
  if (eq == "M") return EquationKind::mems(p);
  throw CLI::ValidationError("--eq", "unknown equation " + eq);
}

std::string verdict_tag(const Classification& c) {
  if (c.is_nonexistence()) return "NONEXIST";
  if (c.is_existence()) return "EXIST";
  return "UNDET";
}

std::string certificate_str(const Classification& c) {
  if (!c.is_nonexistence()) return "";
  const auto& ne = std::get<Nonexistence>(c.outcome);
  return ne.certificate_t ? fmt(static_cast<double>(*ne.certificate_t)) : "";
}

struct CommonOpts {
  std::string out;
  std::string format = "csv";
  int jobs = 0;
  unsigned seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--out", c.out, "output path (default: stdout)");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--jobs", c.jobs, "worker threads for sweeps (0 = hardware)");
  cmd->add_option("--seed", c.seed, "random seed for randomized checks")->default_val(0);
}

json classification_record(const EquationKind& eq, double N, double alpha, double beta,
                           const Classification& c) {
  json rec;
  rec["N"] = fmt(N);
  rec["alpha"] = fmt(alpha);
  rec["beta"] = fmt(beta);
  rec["p"] = eq.tag == EquationKind::Tag::G ? "" : fmt(eq.p_double());
  rec["verdict"] = verdict_tag(c);
  rec["certificate_t"] = certificate_str(c);
  rec["threshold"] = fmt(c.threshold.to_double());
  return rec;
}

std::string records_to_csv(const std::vector<json>& recs) {
  std::ostringstream os;
  if (recs.empty()) return "";
  bool first = true;
  for (auto it = recs.front().begin(); it != recs.front().end(); ++it) {
    if (!first) os << ',';
    os << it.key();
    first = false;
  }
  os << '\n';
  for (const auto& r : recs) {
    first = true;
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (!first) os << ',';
      if (it->is_string()) os << it->get<std::string>();
      else os << it->dump();
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string emit(const json& config, const std::vector<json>& results, const json& checks,
                 const std::string& format) {
  if (format == "json") {
    json top;
    top["config"] = config;
    top["results"] = results;
    top["checks"] = checks;
    return top.dump(2) + "\n";
  }
  std::string out = records_to_csv(results);
  for (auto it = checks.begin(); it != checks.end(); ++it) {
    out += "# " + it.key() + "=";
    out += it->is_string() ? it->get<std::string>() : it->dump();
    out += '\n';
  }
  return out;
}

struct AxisRange {
  std::string name;
  double lo = 0, hi = 0, step = 1;

  std::vector<double> values() const {
    std::vector<double> v;
    for (double x = lo; x <= hi + 1e-12 * std::max(1.0, std::fabs(hi)); x += step)
      v.push_back(x);
    return v;
  }
};

AxisRange parse_axis(const std::string& spec) {
  // name=lo:hi:step
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw CLI::ValidationError("axis", "expected name=lo:hi:step");
  AxisRange a;
  a.name = spec.substr(0, eq);
  if (a.name != "N" && a.name != "alpha" && a.name != "beta" && a.name != "p")
    throw CLI::ValidationError("axis", "axis must be one of N, alpha, beta, p");
  const std::string rest = spec.substr(eq + 1);
  if (std::sscanf(rest.c_str(), "%lf:%lf:%lf", &a.lo, &a.hi, &a.step) != 3)
    throw CLI::ValidationError("axis", "expected name=lo:hi:step");
  if (!(a.step > 0) || !(a.lo <= a.hi) || !std::isfinite(a.lo) || !std::isfinite(a.hi))
    throw CLI::ValidationError("axis", "empty or malformed range");
  return a;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& eq_name, double p, double N, double alpha, double beta,
                 const CommonOpts& common) {
  const EquationKind eq = make_eq(eq_name, p);
  const ProblemInstance inst(eq, N, WeightFamily{alpha, beta, GFactor::one()});
  const Classification c = classify(inst);
  json config{{"command", "classify"}, {"eq", eq_name}, {"N", fmt(N)},
              {"alpha", fmt(alpha)}, {"beta", fmt(beta)}};
  std::vector<json> results{classification_record(eq, N, alpha, beta, c)};
  json checks{{"inputs_recognized", c.inputs_recognized}};
  write_output(emit(config, results, checks, common.format), common.out);
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(const std::string& eq_name, double p, double N, double alpha, double beta,
              const std::string& axis1_spec, const std::string& axis2_spec,
              bool gnuplot, const CommonOpts& common) {
  const AxisRange ax1 = parse_axis(axis1_spec);
  const AxisRange ax2 = parse_axis(axis2_spec);
  if (ax1.name == ax2.name) throw CLI::ValidationError("axis", "axes must differ");
  const auto v1 = ax1.values(), v2 = ax2.values();
  if (v1.empty() || v2.empty()) throw CLI::ValidationError("axis", "empty range");

  auto evaluate_row = [&](double a1) {
    std::ostringstream os;
    for (double a2 : v2) {
      double n = N, al = alpha, be = beta, pp = p;
      auto assign = [&](const std::string& name, double v) {
        if (name == "N") n = v;
        else if (name == "alpha") al = v;
        else if (name == "beta") be = v;
        else pp = v;
      };
      assign(ax1.name, a1);
      assign(ax2.name, a2);
      const EquationKind eq = make_eq(eq_name, pp);
      const Classification c =
          classify(ProblemInstance(eq, n, WeightFamily{al, be, GFactor::one()}));
      os << fmt(a1) << ',' << fmt(a2) << ',' << verdict_tag(c) << ','
         << fmt(c.threshold.to_double()) << ',' << certificate_str(c) << '\n';
    }
    return os.str();
  };

  std::vector<std::string> rows(v1.size());
  unsigned jobs = common.jobs > 0 ? static_cast<unsigned>(common.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, v1.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < v1.size(); ++i) rows[i] = evaluate_row(v1[i]);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < v1.size(); i = next.fetch_add(1))
          rows[i] = evaluate_row(v1[i]);
      });
    for (auto& th : pool) th.join();
  }

  std::ostringstream os;
  os << "axis1,axis2,verdict,threshold,certificate_t\n";
  for (const auto& r : rows) os << r;
  write_output(os.str(), common.out);

  if (gnuplot) {
    const std::string data = common.out.empty() ? std::string("sweep.csv") : common.out;
    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set xlabel '" << ax1.name << "'\nset ylabel '" << ax2.name << "'\n"
       << "set palette maxcolors 3\n"
       << "plot '" << data
       << "' using 1:2:($3 eq 'NONEXIST' ? 0 : ($3 eq 'UNDET' ? 1 : 2)) "
          "skip 1 with points pt 5 palette notitle\n";
    std::ofstream f(data + ".gp");
    f << gp.str();
  }
  return kExitOk;
}

// ----------------------------------------------------------------- witness

int cmd_witness(const std::string& eq_name, double p, double N, double alpha, double beta,
                bool verify, const CommonOpts& common) {
  const EquationKind eq = make_eq(eq_name, p);
  const Witness w = construct_witness(eq, N, alpha, beta);

  json rec;
  rec["regime"] = w.expected_exact ? "growth" : "flat";
  rec["role"] = w.role == SolutionRole::SubSolution ? "sub" : "super";
  switch (w.u.kind) {
    case RadialFunction::Kind::Zero: rec["u"] = "0"; break;
    case RadialFunction::Kind::Constant: rec["u"] = fmt(w.u.param); break;
    case RadialFunction::Kind::LogPower:
      rec["u"] = "-" + fmt(w.u.param) + "*ln(1+r^2)"; break;
    case RadialFunction::Kind::Power:
      rec["u"] = "(1+r^2)^" + fmt(w.u.param); break;
  }
  rec["g_infimum"] = fmt(g_positivity(w).infimum);

  json checks;
  bool ok = true;
  if (verify) {
    double max_rel = 0;
    double worst_sign = 0;
    for (int i = 0; i < 200; ++i) {
      const double r = 1e-3 * std::pow(1e6, i / 199.0);
      const double res = residual(w, r);
      const WeightFamily wf = w.weights();
      const double scale = std::fabs(apply_operator(wf, w.N, w.u, r)) +
                           std::fabs(wf.omega2(r) * eq.f(w.u.value(r))) + 1.0;
      if (w.expected_exact) {
        max_rel = std::max(max_rel, std::fabs(res) / scale);
      } else if (w.role == SolutionRole::SubSolution) {
        worst_sign = std::max(worst_sign, res);
      } else {
        worst_sign = std::max(worst_sign, -res);
      }
    }
    const bool g_ok = g_positivity(w).positive;
    const bool res_ok = w.expected_exact ? max_rel <= 1e-10 : worst_sign <= 0.0;
    checks["max_relative_residual"] = fmt(max_rel);
    checks["g_positive"] = g_ok;
    checks["residual_contract"] = res_ok;
    ok = g_ok && res_ok;
  }
  json config{{"command", "witness"}, {"eq", eq_name}, {"N", fmt(N)},
              {"alpha", fmt(alpha)}, {"beta", fmt(beta)}, {"verify", verify}};
  write_output(emit(config, {rec}, checks, common.format == "csv" ? "json" : common.format),
               common.out);
  return ok ? kExitOk : kExitVerification;
}

// --------------------------------------------------------------- stability

int cmd_stability(const std::string& eq_name, double p, double N, double alpha, double beta,
                  std::vector<double> ladder, bool unchecked, const CommonOpts& common) {
  const EquationKind eq = make_eq(eq_name, p);
  if (ladder.empty()) ladder = {10.0, 100.0, 1000.0};
  const Witness w = unchecked ? construct_pair_unchecked(eq, N, alpha, beta)
                              : construct_witness(eq, N, alpha, beta);
  const StabilityReport rep = check_stability(w, ladder);

  std::vector<json> results;
  for (const auto& rung : rep.rungs) {
    json r;
    r["r_max"] = fmt(rung.r_max);
    r["lambda_coarse"] = fmt(rung.lambda_coarse);
    r["lambda_fine"] = fmt(rung.lambda_fine);
    r["mesh_nodes"] = rung.mesh_size;
    results.push_back(std::move(r));
  }
  json checks;
  checks["verdict"] = rep.verdict == StabilityVerdict::StableEvidence
                          ? "StableEvidence"
                          : (rep.verdict == StabilityVerdict::UnstableCertificate
                                 ? "UnstableCertificate"
                                 : "Inconclusive");
  checks["worst_lambda"] = fmt(rep.worst_lambda);
  json config{{"command", "stability"}, {"eq", eq_name}, {"N", fmt(N)},
              {"alpha", fmt(alpha)}, {"beta", fmt(beta)}, {"unchecked", unchecked}};
  write_output(emit(config, results, checks, "json"), common.out);

  // verification contract: anything short of stable evidence is a failure
  // (with --unchecked on the nonexistence side this is the expected outcome)
  return rep.verdict == StabilityVerdict::StableEvidence ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------- hardy

int cmd_hardy(bool corollary, double alpha, double t, double N, double tau, double e_power,
              int bumps, const CommonOpts& common) {
  std::mt19937 rng(common.seed);
  std::uniform_real_distribution<double> center(1.0, 20.0);
  int violations = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < bumps; ++i) {
    const double c = center(rng);
    const SmoothBump phi{c, std::uniform_real_distribution<double>(0.3, c - 0.05)(rng)};
    const HardyResult res = corollary
                                ? hardy_corollary_check(alpha, t, N, phi)
                                : hardy_lemma_check(RadialFunction::power(e_power), tau, N, phi);
    if (!res.holds) ++violations;
    min_gap = std::min(min_gap, res.rhs - res.lhs);
  }
  json config{{"command", "hardy"}, {"form", corollary ? "corollary" : "lemma"},
              {"alpha", fmt(alpha)}, {"t", fmt(t)}, {"tau", fmt(tau)},
              {"N", fmt(N)}, {"bumps", bumps}, {"seed", common.seed}};
  json checks{{"violations", violations}, {"min_gap", fmt(min_gap)}};
  write_output(emit(config, {}, checks, "json"), common.out);
  return violations == 0 ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------- rates

int cmd_rates(const std::string& kind_name, double p, double N, double alpha, double beta,
              double t, double r0, int kmax, const CommonOpts& common) {
  IJKind kind;
  if (kind_name == "IG") kind = {EquationKind::gelfand(), IJQuantity::I};
  else if (kind_name == "JG") kind = {EquationKind::gelfand(), IJQuantity::J};
  else if (kind_name == "IL") kind = {EquationKind::lane_emden(p), IJQuantity::I};
  else if (kind_name == "JL") kind = {EquationKind::lane_emden(p), IJQuantity::J};
  else if (kind_name == "IM") kind = {EquationKind::mems(p), IJQuantity::I};
  else if (kind_name == "JM") kind = {EquationKind::mems(p), IJQuantity::J};
  else throw CLI::ValidationError("--kind", "unknown kind " + kind_name);

  const WeightFamily w{alpha, beta, GFactor::one()};
  const RateReport rep = fit_rate(kind, w, N, t, r0, kmax);

  std::vector<json> results;
  for (std::size_t i = 0; i < rep.radii.size(); ++i)
    results.push_back(json{{"R", fmt(rep.radii[i])}, {"value", fmt(rep.values[i])}});
  json checks;
  checks["degenerate"] = rep.degenerate;
  checks["fitted_slope"] = rep.degenerate ? "" : fmt(rep.fitted_slope);
  checks["predicted_exponent"] = fmt(rep.predicted_exponent);
  checks["max_fit_residual"] = fmt(rep.max_fit_residual);
  json config{{"command", "rates"}, {"kind", kind_name}, {"N", fmt(N)},
              {"alpha", fmt(alpha)}, {"beta", fmt(beta)}, {"t", fmt(t)},
              {"r0", fmt(r0)}, {"kmax", kmax}};
  write_output(emit(config, results, checks, common.format), common.out);

  if (rep.degenerate) return kExitOk;  // reported as degenerate, not a failure
  return std::fabs(rep.fitted_slope - rep.predicted_exponent) <= 0.05 ? kExitOk
                                                                      : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouville-type classifier and numerical verifier for weighted "
               "semilinear elliptic equations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value config file; flags win on conflict");

  std::string eq_name = "G", kind_name = "IG", axis1, axis2;
  double p = 2.0, N = 3.0, alpha = 0.0, beta = 0.0;
  double t = 1.0, tau = 1.0, e_power = 0.5, r0 = 16.0;
  int kmax = 6, bumps = 100;
  bool verify = false, unchecked = false, gnuplot = false, corollary = false, lemma = false;
  std::vector<double> ladder;
  CommonOpts common;

  auto add_instance_opts = [&](CLI::App* cmd) {
    cmd->add_option("--eq", eq_name, "equation kind")->check(CLI::IsMember({"G", "L", "M"}));
    cmd->add_option("--p", p, "nonlinearity exponent (L: p>1, M: p>0)");
    cmd->add_option("--N", N, "dimension (real, >= 1)");
    cmd->add_option("--alpha", alpha, "omega_1 exponent");
    cmd->add_option("--beta", beta, "omega_2 exponent");
  };

  auto* c_classify = app.add_subcommand("classify", "classify one instance");
  add_instance_opts(c_classify);
  add_common(c_classify, common);

  auto* c_sweep = app.add_subcommand("sweep", "tabulate verdicts over two axes");
  add_instance_opts(c_sweep);
  c_sweep->add_option("--axis1", axis1, "first axis, name=lo:hi:step")->required();
  c_sweep->add_option("--axis2", axis2, "second axis, name=lo:hi:step")->required();
  c_sweep->add_flag("--gnuplot", gnuplot, "also emit a gnuplot script");
  add_common(c_sweep, common);

  auto* c_witness = app.add_subcommand("witness", "construct (and verify) a witness");
  add_instance_opts(c_witness);
  c_witness->add_flag("--verify", verify, "check residual contract and g positivity");
  add_common(c_witness, common);

  auto* c_stab = app.add_subcommand("stability", "eigenvalue ladder for a witness");
  add_instance_opts(c_stab);
  c_stab->add_option("--ladder", ladder, "truncation radii")->delimiter(',');
  c_stab->add_flag("--unchecked", unchecked,
                   "construct the pair even on the nonexistence side");
  add_common(c_stab, common);

  auto* c_hardy = app.add_subcommand("hardy", "randomized Hardy-inequality checks");
  c_hardy->add_flag("--corollary", corollary, "check the weighted corollary form");
  c_hardy->add_flag("--lemma", lemma, "check the general lemma form");
  c_hardy->add_option("--alpha", alpha, "corollary alpha");
  c_hardy->add_option("--t", t, "corollary t");
  c_hardy->add_option("--N", N, "dimension");
  c_hardy->add_option("--tau", tau, "lemma tau");
  c_hardy->add_option("--E-power", e_power, "lemma E = (1+r^2)^m exponent m");
  c_hardy->add_option("--bumps", bumps, "number of random test bumps");
  add_common(c_hardy, common);

  auto* c_rates = app.add_subcommand("rates", "fit annulus-quantity growth rates");
  c_rates->add_option("--kind", kind_name, "IG|JG|IL|JL|IM|JM")->required();
  c_rates->add_option("--p", p, "nonlinearity exponent");
  c_rates->add_option("--N", N, "dimension");
  c_rates->add_option("--alpha", alpha, "omega_1 exponent");
  c_rates->add_option("--beta", beta, "omega_2 exponent");
  c_rates->add_option("--t", t, "test exponent t");
  c_rates->add_option("--r0", r0, "first radius");
  c_rates->add_option("--kmax", kmax, "number of doublings");
  add_common(c_rates, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(eq_name, p, N, alpha, beta, common);
    if (c_sweep->parsed())
      return cmd_sweep(eq_name, p, N, alpha, beta, axis1, axis2, gnuplot, common);
    if (c_witness->parsed()) return cmd_witness(eq_name, p, N, alpha, beta, verify, common);
    if (c_stab->parsed())
      return cmd_stability(eq_name, p, N, alpha, beta, ladder, unchecked, common);
    if (c_hardy->parsed()) {
      if (corollary == lemma)
        throw CLI::ValidationError("hardy", "pick exactly one of --corollary / --lemma");
      return cmd_hardy(corollary, alpha, t, N, tau, e_power, bumps, common);
    }
    if (c_rates->parsed())
      return cmd_rates(kind_name, p, N, alpha, beta, t, r0, kmax, common);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
