#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "qcap/qcap.hpp"

namespace qcap::cli {

namespace {

const std::vector<std::string> kParams = {"kappa", "p", "epsilon"};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text << "\n";
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct SweepArgs {
  std::string bound;
  std::string spec_path;
  std::string out_path;
  std::string h_sign;
  std::string epsilon_mode;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  double step = 0.0;
  double epsilon_fraction = 0.5;
  std::map<std::string, double> fixed;
  std::map<std::string, double> mins, maxs, steps;
};

struct PointArgs {
  std::string bound;
  std::size_t d = 2;
  std::string h_sign = "conservative";
  std::map<std::string, double> params;
};

struct ChannelArgs {
  std::string channel = "erasure";
  double p = 0.5;
  std::size_t d = 2;
};

QuantumChannel build_channel(const ChannelArgs& a) {
  if (a.channel == "identity") return identity_channel(a.d);
  if (a.channel == "erasure") return erasure_channel(a.p, a.d);
  if (a.channel == "depolarizing") return depolarizing_channel(a.p, a.d);
  throw std::invalid_argument("unknown channel '" + a.channel +
                              "' (expected identity, erasure, depolarizing)");
}

struct PditArgs {
  std::string twisting = "controlled-swap";
  std::size_t side = 2;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
};

PditState build_pdit(const PditArgs& a) {
  const SystemLayout shield{{"A'", a.side}, {"B'", a.side}};
  const std::size_t n = a.side * a.side;
  if (a.twisting == "identity")
    return make_pdit(2, DensityOperator::maximally_mixed(shield), identity_twists(2, n));
  if (a.twisting == "controlled-swap") return make_pdit(2, swap_shield(a.side), controlled_swap_twists(a.side));
  if (a.twisting == "random") return random_private_pbit(a.side, a.seed);
  if (a.twisting == "haar") {
    std::vector<UnitaryOperator> twists;
    for (std::uint64_t k = 0; k < 4; ++k) twists.push_back(random_unitary(n, a.seed * 4 + k));
    return make_pdit(2, DensityOperator::maximally_mixed(shield), twists);
  }
  throw std::invalid_argument("unknown twisting '" + a.twisting +
                              "' (expected identity, controlled-swap, random, haar)");
}

SweepSpec build_sweep_spec(const SweepArgs& a, const CLI::App& cmd) {
  const bool bound_flag = cmd.count("--bound") > 0;
  SweepSpec spec = SweepSpec::defaults(bound_flag ? parse_bound_kind(a.bound) : BoundKind::Nonconvexity);
  if (!a.spec_path.empty()) {
    spec = spec_from_json(read_file(a.spec_path), spec);
    if (bound_flag && spec.bound != parse_bound_kind(a.bound)) spec = SweepSpec::defaults(parse_bound_kind(a.bound));
  }
  if (cmd.count("--d")) spec.d = a.d;
  if (cmd.count("--seed")) spec.seed = a.seed;
  if (cmd.count("--h-sign")) spec.h_sign = parse_h_sign(a.h_sign);
  if (cmd.count("--step"))
    for (auto& [name, r] : spec.ranges) r.step = a.step;
  for (const auto& name : kParams) {
    if (cmd.count("--" + name)) {
      spec.set_fixed(name, a.fixed.at(name));
      continue;
    }
    const bool lo = cmd.count("--" + name + "-min") > 0;
    const bool hi = cmd.count("--" + name + "-max") > 0;
    const bool st = cmd.count("--" + name + "-step") > 0;
    if (!lo && !hi && !st) continue;
    Range r = spec.range(name) ? *spec.range(name) : Range{};
    if (lo) r.min = a.mins.at(name);
    if (hi) r.max = a.maxs.at(name);
    if (st) r.step = a.steps.at(name);
    spec.set_range(name, r);
  }
  if (cmd.count("--epsilon-mode")) {
    if (a.epsilon_mode == "tied") {
      spec.epsilon_mode = EpsilonMode::Tied;
      std::erase_if(spec.ranges, [](const auto& e) { return e.first == "epsilon"; });
      spec.fixed.erase("epsilon");
    } else if (a.epsilon_mode == "swept") {
      spec.epsilon_mode = EpsilonMode::Swept;
    } else {
      throw std::invalid_argument("unknown epsilon mode '" + a.epsilon_mode + "' (expected swept, tied)");
    }
  }
  if (cmd.count("--epsilon-fraction")) spec.epsilon_fraction = a.epsilon_fraction;
  return spec;
}

int cmd_sweep(const SweepArgs& a, const CLI::App& cmd, std::ostream& out) {
  const auto result = run_sweep(build_sweep_spec(a, cmd));
  if (a.out_path.empty() || a.out_path == "-") {
    out << to_csv(result);
    return kOk;
  }
  write_csv(result, a.out_path);
  const auto& s = result.summary;
  out << "bound: " << to_string(result.spec.bound) << "\n";
  out << "rows: " << result.points.size() << "\n";
  out << "max value: " << fmt12(s.max_value) << " at";
  for (const auto& [name, v] : s.argmax) out << " " << name << "=" << format_number(v);
  out << "\n";
  out << "positive fraction: " << fmt12(s.positive_fraction) << " (" << s.positive_count << " points)\n";
  out << "wrote " << a.out_path << "\n";
  return kOk;
}

int cmd_eval(const PointArgs& a, std::ostream& out) {
  const auto kind = parse_bound_kind(a.bound);
  out << fmt12(evaluate_bound(kind, a.params, a.d, parse_h_sign(a.h_sign))) << "\n";
  return kOk;
}

int cmd_verify_table(double kappa, double p, std::size_t d, std::ostream& out) {
  const auto table = branch_table(kappa, p, d);
  for (const auto& row : table.rows) out << row.channels << ": " << fmt12(row.value) << "\n";
  const double closed = nonconvexity_bound(kappa, p, d);
  const double diff = std::abs(table.rate() - closed);
  const bool ok = diff <= 1e-12;
  out << "sum/2: " << fmt12(table.rate()) << "\n";
  out << "closed form: " << fmt12(closed) << "\n";
  out << verdict(ok) << " identity |sum/2 - closed form| = " << fmt12(diff) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_certify_ppt(const std::string& state, std::size_t d, double p, std::ostream& out) {
  std::optional<DensityOperator> rho;
  if (state == "phi+") rho = DensityOperator::max_entangled("A", "B", d);
  else if (state == "classical") rho = DensityOperator::classically_correlated("A", "B", d);
  else if (state == "mixed") rho = DensityOperator::maximally_mixed(SystemLayout{{"A", d}, {"B", d}});
  else if (state == "depolarizing-choi") rho = choi_state(depolarizing_channel(p, d)).state();
  else if (state == "erasure-choi") rho = choi_state(erasure_channel(p, d)).state();
  else
    throw std::invalid_argument("unknown state '" + state +
                                "' (expected phi+, classical, mixed, depolarizing-choi, erasure-choi)");
  const auto rep = is_ppt(*rho, {"B"});
  out << "state: " << state << " on " << rho->layout().describe() << "\n";
  out << "partial transpose min eigenvalue: " << fmt12(rep.min_eigenvalue) << "\n";
  out << verdict(rep.ppt) << (rep.ppt ? " PPT" : " not PPT") << "\n";
  return rep.ppt ? kOk : kFailed;
}

int cmd_certify_symext(double p, std::size_t r, std::ostream& out) {
  const auto rep = verify_two_symmetric_extension(p, r);
  out << "extension min eigenvalue: " << fmt12(rep.min_eigenvalue) << "\n";
  out << "marginal error: " << fmt12(rep.marginal_error) << "\n";
  out << "swap error: " << fmt12(rep.swap_error) << "\n";
  out << verdict(rep.passed()) << " two-symmetric extension (p=" << fmt12(p) << ", r=" << r << ")\n";
  return rep.passed() ? kOk : kFailed;
}

int cmd_certify_pdit(const PditArgs& a, std::ostream& out) {
  const auto gamma = build_pdit(a);
  const auto approx = make_approx_pdit(gamma, a.epsilon, a.seed);
  const double untwist_dist = trace_distance(untwist(approx), untwisted_reference(approx.d(), approx.shield()));
  const double attack = key_attack_epsilon(approx);
  const auto ppt = pdit_ppt(approx.state(), gamma.shield_b());
  const bool ok = untwist_dist <= a.epsilon + 1e-10 && attack <= a.epsilon + 1e-9;
  out << "twisting: " << a.twisting << ", shield " << gamma.shield_layout().describe() << "\n";
  out << "untwisting distance: " << fmt12(untwist_dist) << " (target " << fmt12(a.epsilon) << ")\n";
  out << "key attack distance: " << fmt12(attack) << "\n";
  out << "partial transpose min eigenvalue (AA'|BB'): " << fmt12(ppt.min_eigenvalue)
      << (ppt.ppt ? " (PPT)" : " (not PPT)") << "\n";
  out << verdict(ok) << " " << (a.epsilon > 0.0 ? "approximate pdit" : "pdit") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_certify_alicki_fannes(std::size_t dim, double eps, std::size_t seeds, std::uint64_t seed,
                              std::ostream& out) {
  if (dim < 2) throw std::invalid_argument("dim must be >= 2");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("epsilon must lie within [0,1]");
  const SystemLayout layout{{"A", dim}, {"B", dim}};
  const double envelope = alicki_fannes_envelope(dim, eps);
  std::size_t violations = 0;
  double worst_gap = 0.0;
  for (std::size_t k = 0; k < seeds; ++k) {
    const auto rho = random_density(layout, seed + 2 * k);
    const auto other = random_density(layout, seed + 2 * k + 1);
    const double full = trace_distance(rho, other);
    const auto rho2 = mix(rho, other, full > 0.0 ? std::min(1.0, eps / full) : 0.0);
    const double gap = std::abs(conditional_entropy(rho, {"B"}) - conditional_entropy(rho2, {"B"}));
    worst_gap = std::max(worst_gap, gap);
    if (gap > envelope + 1e-9) ++violations;
  }
  out << "pairs: " << seeds << " on " << layout.describe() << ", epsilon " << fmt12(eps) << "\n";
  out << "envelope: " << fmt12(envelope) << "\n";
  out << "largest |S(A|B) difference|: " << fmt12(worst_gap) << "\n";
  out << "violations: " << violations << "\n";
  out << verdict(violations == 0) << " continuity bound\n";
  return violations == 0 ? kOk : kFailed;
}

int cmd_eval_channel(const ChannelArgs& a, bool optimize, const HillClimbOptions& opts, std::ostream& out) {
  const auto ch = build_channel(a);
  const auto mixed = DensityOperator::maximally_mixed(SystemLayout::single("A", ch.in_dim()));
  out << "channel: " << ch.name() << " (" << ch.in_dim() << " -> " << ch.out_dim() << ")\n";
  out << "coherent information at I/d: " << fmt12(channel_coherent_info_at(ch, mixed).value) << "\n";
  if (optimize)
    out << "optimized coherent information (lower bound): "
        << fmt12(channel_coherent_info_max(ch, opts).value) << "\n";
  return kOk;
}

void add_param_options(CLI::App* cmd, std::map<std::string, double>& params) {
  for (const auto& name : kParams)
    cmd->add_option_function<double>("--" + name, [&params, name](double v) { params[name] = v; },
                                     "value of " + name);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent-information bounds for superactivation and nonconvexity of quantum capacity", "qcap"};
  app.require_subcommand(1);

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "evaluate a bound over a parameter grid and write CSV");
  sweep->add_option("--bound", sw.bound, "nonconvexity | noisy-erasure | depolarizing");
  sweep->add_option("--spec", sw.spec_path, "JSON sweep spec; flags override its fields");
  sweep->add_option("--out", sw.out_path, "CSV path (stdout when omitted)");
  sweep->add_option("--d", sw.d, "key dimension");
  sweep->add_option("--seed", sw.seed, "seed recorded with the spec");
  sweep->add_option("--h-sign", sw.h_sign, "paper | conservative");
  sweep->add_option("--step", sw.step, "step for every swept parameter");
  sweep->add_option("--epsilon-mode", sw.epsilon_mode, "swept | tied");
  sweep->add_option("--epsilon-fraction", sw.epsilon_fraction, "tied mode: epsilon = fraction * eps*(p)");
  for (const auto& name : kParams) {
    sweep->add_option_function<double>("--" + name, [&sw, name](double v) { sw.fixed[name] = v; },
                                       "pin " + name);
    sweep->add_option_function<double>("--" + name + "-min", [&sw, name](double v) { sw.mins[name] = v; });
    sweep->add_option_function<double>("--" + name + "-max", [&sw, name](double v) { sw.maxs[name] = v; });
    sweep->add_option_function<double>("--" + name + "-step", [&sw, name](double v) { sw.steps[name] = v; });
  }

  PointArgs pt;
  auto* eval = app.add_subcommand("eval", "evaluate a bound at one point");
  eval->add_option("--bound", pt.bound, "nonconvexity | noisy-erasure | depolarizing")->required();
  eval->add_option("--d", pt.d, "key dimension");
  eval->add_option("--h-sign", pt.h_sign, "paper | conservative");
  add_param_options(eval, pt.params);

  double t_kappa = 0.5, t_p = 0.5;
  std::size_t t_d = 2;
  auto* table = app.add_subcommand("verify-table", "print the nine branch rows and check sum/2 against the closed form");
  table->add_option("--kappa", t_kappa)->required();
  table->add_option("--p", t_p)->required();
  table->add_option("--d", t_d);

  auto* certify = app.add_subcommand("certify", "run a certification check");
  certify->require_subcommand(1);

  std::string ppt_state = "phi+";
  std::size_t ppt_d = 2;
  double ppt_p = 0.5;
  auto* ppt = certify->add_subcommand("ppt", "Peres test across the A|B cut");
  ppt->add_option("--state", ppt_state, "phi+ | classical | mixed | depolarizing-choi | erasure-choi");
  ppt->add_option("--d", ppt_d, "local dimension");
  ppt->add_option("--p", ppt_p, "channel parameter for Choi states");

  double se_p = 0.5;
  std::size_t se_r = 2;
  auto* symext = certify->add_subcommand("symext", "two-symmetric extension of the depolarizing Choi state");
  symext->add_option("--p", se_p, "depolarizing parameter (witness exists at 1/2)");
  symext->add_option("--r", se_r, "local dimension");

  PditArgs pd;
  auto* pdit = certify->add_subcommand("pdit", "build a pbit and check untwisting and key attack distances");
  pdit->add_option("--twisting", pd.twisting, "identity | controlled-swap | random | haar");
  pdit->add_option("--side", pd.side, "dimension of each shield factor");
  pdit->add_option("--epsilon", pd.epsilon, "target untwisting distance");
  pdit->add_option("--seed", pd.seed);

  std::size_t af_dim = 4, af_seeds = 200;
  double af_eps = 0.1;
  std::uint64_t af_seed = 0;
  auto* af = certify->add_subcommand("alicki-fannes", "sampled check of the conditional-entropy continuity bound");
  af->add_option("--dim", af_dim, "dimension of each of A and B");
  af->add_option("--epsilon", af_eps, "trace distance of each pair");
  af->add_option("--seeds", af_seeds, "number of pairs");
  af->add_option("--seed", af_seed, "first seed");

  ChannelArgs ca;
  bool optimize = false;
  HillClimbOptions hc;
  auto* eval_channel = app.add_subcommand("eval-channel", "coherent information of a channel");
  eval_channel->add_option("--channel", ca.channel, "identity | erasure | depolarizing");
  eval_channel->add_option("--p", ca.p);
  eval_channel->add_option("--d", ca.d);
  eval_channel->add_flag("--optimize", optimize, "hill-climb over inputs");
  eval_channel->add_option("--restarts", hc.restarts);
  eval_channel->add_option("--iters", hc.max_iters, "objective evaluations per restart");
  eval_channel->add_option("--seed", hc.seed);

  ChannelArgs ea;
  std::string export_out;
  auto* export_channel = app.add_subcommand("export-channel", "write a channel as JSON");
  export_channel->add_option("--channel", ea.channel, "identity | erasure | depolarizing");
  export_channel->add_option("--p", ea.p);
  export_channel->add_option("--d", ea.d);
  export_channel->add_option("--out", export_out, "JSON path (stdout when omitted)");

  PditArgs ep;
  auto* export_pdit = app.add_subcommand("export-pdit", "write an exact pbit as JSON");
  export_pdit->add_option("--twisting", ep.twisting, "identity | controlled-swap | random | haar");
  export_pdit->add_option("--side", ep.side);
  export_pdit->add_option("--seed", ep.seed);
  export_pdit->add_option("--out", export_out, "JSON path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*sweep) return cmd_sweep(sw, *sweep, out);
    if (*eval) return cmd_eval(pt, out);
    if (*table) return cmd_verify_table(t_kappa, t_p, t_d, out);
    if (*ppt) return cmd_certify_ppt(ppt_state, ppt_d, ppt_p, out);
    if (*symext) return cmd_certify_symext(se_p, se_r, out);
    if (*pdit) return cmd_certify_pdit(pd, out);
    if (*af) return cmd_certify_alicki_fannes(af_dim, af_eps, af_seeds, af_seed, out);
    if (*eval_channel) return cmd_eval_channel(ca, optimize, hc, out);
    if (*export_channel) {
      write_text(export_out, channel_to_json(build_channel(ea)), out);
      return kOk;
    }
    if (*export_pdit) {
      write_text(export_out, pdit_to_json(build_pdit(ep)), out);
      return kOk;
    }
  } catch (const InvariantViolation& e) {
    err << "qcap: invariant violated: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    err << "qcap: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "qcap: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qcap::cli
