#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"

#include "nqs/bounds.hpp"
#include "nqs/codes.hpp"
#include "nqs/errors.hpp"
#include "nqs/io.hpp"
#include "nqs/protocols.hpp"
#include "verify.hpp"

namespace nqs::cli {

namespace {

enum class Format { kDefault, kText, kCsv, kJson };

struct RunConfig {
  // storage and shared bound parameters
  double n = 0.0;
  double delta = 0.0;
  double r = 0.0;
  double nu = 1.0;
  int dim = 2;
  double threshold = 1e-8;
  // robust
  double p1_sent = 1.0;
  double ph_noclick = 0.0;
  double pd_noclick = 0.0;
  double ph_err = 0.0;
  std::string ec_term = "remaining";
  // identification
  double m = 2.0;
  double d_code = 0.0;
  double ell = -1.0;
  // curve / region
  int points = 200;
  double r_max = 1.0;
  int steps = 100;
  int nu_steps = 0;
  double nu_max = 1.0;
  // simulation
  int sim_n = 16;
  int sim_ell = 4;
  int choice = 0;
  std::uint64_t seed = 1;
  int trials = 1;
  std::string adversary = "none";
  double eps = 1e-3;
  double zeta = -1.0;
  std::string code = "rep3";
  int extra_missing = 0;
  int passwords = 16;
  int code_length = 7;
  int w_a = 1;
  int w_b = 1;
  int samples = 200;
  // output
  std::string out_path;
  Format format = Format::kDefault;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Emitter {
 public:
  void line(const std::string& key, double v) { text_ << key << ": " << format_real(v) << '\n'; json_[key] = v; }
  void line(const std::string& key, std::int64_t v) { text_ << key << ": " << v << '\n'; json_[key] = v; }
  void line(const std::string& key, const std::string& v) { text_ << key << ": " << v << '\n'; json_[key] = v; }
  void flag(const std::string& key, bool v) { text_ << key << ": " << yes_no(v) << '\n'; json_[key] = v; }
  std::string render(Format f) const { return f == Format::kJson ? json_.dump(2) + "\n" : text_.str(); }

 private:
  std::ostringstream text_;
  Json json_ = Json::object();
};

StorageModel storage_of(const RunConfig& c) { return StorageModel{c.dim, c.r, c.nu}; }

std::string bounds_ot(const RunConfig& c) {
  const OtLength res = ot_length(OtParams{c.n, c.delta, storage_of(c)});
  Emitter e;
  e.line("capacity", res.capacity);
  e.line("rate_argument", res.rate);
  e.line("gamma", res.gamma);
  e.line("ell", res.ell);
  e.line("ot_rate", static_cast<double>(res.ell) / c.n);
  e.line("eps", res.epsilon);
  e.line("two_eps", res.two_epsilon);
  e.line("threshold", c.threshold);
  e.flag("eps_within_threshold", res.epsilon <= c.threshold);
  e.flag("two_eps_within_threshold", res.two_epsilon <= c.threshold);
  e.line("threshold_compared_against", std::string("eps"));
  return e.render(c.format);
}

std::string bounds_robust(const RunConfig& c) {
  require(c.ec_term == "remaining" || c.ec_term == "complement", "--ec-term must be remaining or complement");
  const RobustParams p{c.n, c.delta, storage_of(c), c.p1_sent, c.ph_noclick, c.pd_noclick, c.ph_err};
  const auto term = c.ec_term == "remaining" ? ErrorCorrectionTerm::kRemainingRounds : ErrorCorrectionTerm::kErrorComplement;
  const OtLength res = robust_ot_length(p, term);
  Emitter e;
  e.line("m_total", p.m_total());
  e.line("m1", p.m1());
  e.line("capacity", res.capacity);
  e.line("rate_argument", res.rate);
  e.line("gamma", res.gamma);
  e.line("error_correction_term", c.ec_term);
  e.line("ell", res.ell);
  e.line("ot_rate", static_cast<double>(res.ell) / c.n);
  e.line("eps", res.epsilon);
  e.line("two_eps", res.two_epsilon);
  e.line("threshold", c.threshold);
  e.flag("eps_within_threshold", res.epsilon <= c.threshold);
  e.flag("two_eps_within_threshold", res.two_epsilon <= c.threshold);
  e.line("threshold_compared_against", std::string("eps"));
  return e.render(c.format);
}

std::string bounds_qid(const RunConfig& c) {
  QidParams p{c.n, c.m, c.d_code, c.delta, c.ell, storage_of(c)};
  if (c.ell < 0.0) {
    storage_of(c).validate();
    require(c.delta > 0.0 && c.delta < 0.25, "delta must lie in (0, 1/4) [identification bound]");
    const double gamma = strong_converse_exponent((0.25 - c.delta) / c.nu, storage_of(c));
    p.ell = std::floor(gamma * c.nu * c.d_code / 3.0);
  }
  const QidError res = qid_error(p);
  Emitter e;
  e.line("ell", p.ell);
  e.line("pa_term", res.pa_term);
  e.line("uncertainty_term", res.uncertainty_term);
  e.line("epsilon", res.epsilon);
  e.flag("saturated", res.saturated);
  return e.render(c.format);
}

std::string bounds_impersonation(const RunConfig& c) {
  const ImpersonationError res = impersonation_error(QidParams{c.n, c.m, 0.0, c.delta, 0.0, storage_of(c)});
  Emitter e;
  e.line("mu", res.mu);
  e.line("d", res.d);
  e.line("gamma", res.gamma);
  e.line("ell", res.ell);
  e.line("ell_real", res.ell_real);
  e.line("bob_term", res.bob_term);
  e.line("uncertainty_term", res.uncertainty_term);
  e.line("epsilon", res.epsilon);
  e.line("alice_error", res.alice_error);
  e.flag("insecure", res.insecure);
  return e.render(c.format);
}

std::string curve(const RunConfig& c) {
  require(c.points >= 2, "--points must be >= 2");
  require(c.r_max > 0.0 && c.r_max <= 1.0, "--r-max must lie in (0, 1]");
  require(c.n >= 1.0, "n must be >= 1");
  std::vector<double> grid(static_cast<std::size_t>(c.points));
  for (int i = 0; i < c.points; ++i) grid[static_cast<std::size_t>(i)] = c.r_max * i / (c.points - 1);
  const auto rows = rate_curve(c.n, c.delta, c.nu, grid, c.dim);
  if (c.format == Format::kJson) return to_json(rows).dump(2) + "\n";
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

std::string region(const RunConfig& c) {
  const auto rows = feasible_region(c.steps, c.nu_steps > 0 ? c.nu_steps : c.steps, c.nu_max, c.dim);
  if (c.format == Format::kJson) return to_json(rows).dump(2) + "\n";
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

std::string simulate_rot(const RunConfig& c) {
  require(c.trials >= 1, "--trials must be >= 1");
  require(c.choice == 0 || c.choice == 1, "--c must be 0 or 1");
  require(c.adversary == "none" || c.adversary == "individual", "--adversary must be none or individual");
  Rng rng(c.seed);
  if (c.adversary == "individual") {
    const LeakageReport rep = estimate_leakage(LeakageConfig{c.sim_n, c.sim_ell, c.r, c.delta > 0 ? c.delta : 0.1, c.trials}, rng);
    Json j;
    j["trials"] = rep.trials;
    j["bits"] = rep.bits;
    j["correct"] = rep.correct;
    j["guess_rate"] = rep.guess_rate;
    j["guess_std_error"] = rep.guess_std_error;
    j["expected_rate"] = rep.expected_rate;
    j["mean_nonuniformity"] = rep.mean_nonuniformity;
    j["max_nonuniformity"] = rep.max_nonuniformity;
    j["nonuniformity_std_error"] = rep.nonuniformity_std_error;
    j["ot_bound"] = rep.ot_bound;
    j["mean_pa_bound"] = rep.mean_pa_bound;
    j["within_ot_bound"] = rep.within_ot_bound;
    j["within_pa_bound"] = rep.within_pa_bound;
    return j.dump(2) + "\n";
  }
  const auto choice = static_cast<std::uint8_t>(c.choice);
  if (c.trials == 1) return to_json(run_rot(c.sim_n, c.sim_ell, choice, rng)).dump(2) + "\n";
  std::int64_t failures = 0;
  std::int64_t empty = 0;
  for (int t = 0; t < c.trials; ++t) {
    const RotTranscript tr = run_rot(c.sim_n, c.sim_ell, choice, rng);
    const BitVector& expected = choice == 0 ? tr.s0 : tr.s1;
    if (tr.y != expected) ++failures;
    if (tr.choice_set_empty) ++empty;
  }
  Json j;
  j["trials"] = c.trials;
  j["failures"] = failures;
  j["empty_choice_set"] = empty;
  j["failure_rate"] = static_cast<double>(failures) / c.trials;
  j["expected_empty_rate"] = std::exp2(-c.sim_n);
  return j.dump(2) + "\n";
}

LinearCode named_code(const std::string& name) {
  if (name == "rep3") return LinearCode::repetition(3);
  if (name == "rep5") return LinearCode::repetition(5);
  if (name == "hamming74") return LinearCode::hamming74();
  if (name == "hamming84") return LinearCode::extended_hamming84();
  std::ifstream in(name);
  require(static_cast<bool>(in), "--code must be rep3, rep5, hamming74, hamming84 or a code JSON file");
  return code_from_json(Json::parse(in));
}

std::string simulate_robust(const RunConfig& c, std::ostream& err) {
  require(c.trials >= 1, "--trials must be >= 1");
  require(c.choice == 0 || c.choice == 1, "--c must be 0 or 1");
  require(c.adversary == "none" || c.adversary == "erasure", "--adversary must be none or erasure");
  RobustConfig cfg;
  cfg.n = c.sim_n;
  cfg.ell = c.sim_ell;
  cfg.p1_sent = c.p1_sent;
  cfg.ph_noclick = c.ph_noclick;
  cfg.pd_noclick = c.pd_noclick;
  cfg.ph_err = c.ph_err;
  cfg.eps = c.eps;
  if (c.zeta >= 0.0) cfg.zeta = c.zeta;
  const LinearCode code = named_code(c.code);
  RobustBob bob;
  if (c.adversary == "erasure") {
    bob.kind = RobustBobKind::kErasureReporting;
    bob.extra_missing = c.extra_missing;
    bob.storage_r = c.r;
  }
  const auto choice = static_cast<std::uint8_t>(c.choice);
  Rng rng(c.seed);
  if (c.trials == 1) return to_json(run_robust_rot(cfg, code, choice, bob, rng)).dump(2) + "\n";
  std::int64_t aborts = 0;
  std::int64_t decode_failures = 0;
  std::int64_t output_mismatches = 0;
  for (int t = 0; t < c.trials; ++t) {
    const RobustTranscript tr = run_robust_rot(cfg, code, choice, bob, rng);
    if (tr.aborted) {
      ++aborts;
      continue;
    }
    if (!tr.decoded) ++decode_failures;
    if (tr.rot.y != (choice == 0 ? tr.rot.s0 : tr.rot.s1)) ++output_mismatches;
  }
  const SyndromeBudget budget = syndrome_budget(code, c.ph_err);
  if (!budget.within_budget) {
    err << "warning: code sends " << format_real(budget.syndrome_bits) << " syndrome bits per block, above the "
        << format_real(budget.budget_bits) << "-bit one-way reconciliation budget\n";
  }
  Json j;
  j["trials"] = c.trials;
  j["aborts"] = aborts;
  j["abort_rate"] = static_cast<double>(aborts) / c.trials;
  j["eps"] = c.eps;
  j["zeta"] = cfg.zeta_value();
  if (bob.kind == RobustBobKind::kHonest) j["decode_failures"] = decode_failures;
  j["output_mismatches"] = output_mismatches;
  j["syndrome_bits_per_block"] = budget.syndrome_bits;
  j["syndrome_budget_per_block"] = budget.budget_bits;
  j["within_syndrome_budget"] = budget.within_budget;
  return j.dump(2) + "\n";
}

std::string simulate_qid(const RunConfig& c, std::ostream& err) {
  require(c.trials >= 1, "--trials must be >= 1");
  const QidCode code = qid_code(c.passwords, c.code_length);
  int ell = static_cast<int>(c.ell);
  if (c.ell < 0.0) {
    ell = default_qid_ell(code, storage_of(c), c.delta > 0 ? c.delta : 0.1);
    err << "note: ell defaults to " << ell << " from the impersonation analysis\n";
  }
  Rng rng(c.seed);
  if (c.trials == 1) return to_json(run_qid(c.w_a, c.w_b, code, ell, rng)).dump(2) + "\n";
  std::int64_t accepts = 0;
  for (int t = 0; t < c.trials; ++t) accepts += run_qid(c.w_a, c.w_b, code, ell, rng).accept ? 1 : 0;
  Json j;
  j["trials"] = c.trials;
  j["code"] = to_json(code.code);
  j["ell"] = ell;
  j["accepts"] = accepts;
  j["accept_rate"] = static_cast<double>(accepts) / c.trials;
  j["collision_bound"] = std::exp2(-ell);
  return j.dump(2) + "\n";
}

std::string run_verify(const std::string& suite, const RunConfig& c, int& exit_code) {
  Rng rng(c.seed);
  verify::Report rep;
  if (suite == "split") rep = verify::split(c.trials, rng);
  else if (suite == "hashing") rep = verify::hashing(6, 3);
  else if (suite == "pa") rep = verify::pa(c.trials, c.samples, rng);
  else if (suite == "lemma4") rep = verify::lemma4(c.trials, rng);
  else rep = verify::codes(c.trials, rng);
  if (rep.violations > 0) exit_code = 3;
  return verify::to_json(rep).dump(2) + "\n";
}

void write_output(const std::string& text, const RunConfig& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  require(static_cast<bool>(file), "cannot open output file " + c.out_path);
  file << text;
}

std::string with_source(const std::string& what, const std::string& source) {
  return what.find('[') == std::string::npos ? what + " [" + source + "]" : what;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Noisy-storage two-party protocols: bounds, simulations and checks", "nqs"};
  app.require_subcommand(1);

  std::function<std::string()> action;
  std::string source = "command line";
  int exit_code = 0;

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  Format default_format = Format::kText;
  auto add_output = [&](CLI::App* sub, Format fallback) {
    sub->preparse_callback([&, fallback](std::size_t) { default_format = fallback; });
    sub->add_option("--out", c.out_path, "output file (default stdout)");
    sub->add_option("--format", c.format, "text|csv|json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_storage = [&](CLI::App* sub, bool need_r) {
    auto* r = sub->add_option("--r", c.r, "depolarizing retention r");
    if (need_r) r->required();
    sub->add_option("--nu", c.nu, "storage rate nu");
    sub->add_option("--dim", c.dim, "storage dimension");
  };

  auto* bounds = app.add_subcommand("bounds", "security bound calculators");
  bounds->require_subcommand(1);
  {
    auto* ot = bounds->add_subcommand("ot", "ROT string length and error");
    ot->add_option("--n", c.n, "number of qubits (scientific notation allowed)")->required();
    ot->add_option("--delta", c.delta, "delta in (0, 1/4)")->required();
    ot->add_option("--threshold", c.threshold, "security threshold compared against eps");
    add_storage(ot, true);
    ot->callback([&] {
      source = "OT security bound";
      action = [&] { return bounds_ot(c); };
    });

    auto* robust = bounds->add_subcommand("robust", "robust ROT string length and error");
    robust->add_option("--n", c.n, "number of pulses")->required();
    robust->add_option("--delta", c.delta, "delta in (0, 1/4)")->required();
    robust->add_option("--p1", c.p1_sent, "single-photon emission probability")->required();
    robust->add_option("--ph-noclick", c.ph_noclick, "honest no-click probability")->required();
    robust->add_option("--pd-noclick", c.pd_noclick, "no-click probability for a perfect detector")->required();
    robust->add_option("--ph-err", c.ph_err, "honest bit-error probability")->required();
    robust->add_option("--ec-term", c.ec_term, "remaining|complement error-correction deduction");
    robust->add_option("--threshold", c.threshold, "security threshold compared against eps");
    add_storage(robust, true);
    robust->callback([&] {
      source = "robust OT bound";
      action = [&] { return bounds_robust(c); };
    });

    auto* qid = bounds->add_subcommand("qid", "identification error against a dishonest server");
    qid->add_option("--n", c.n, "code length")->required();
    qid->add_option("--m", c.m, "number of passwords")->required();
    qid->add_option("--d", c.d_code, "code minimum distance")->required();
    qid->add_option("--delta", c.delta, "delta in (0, 1/4)")->required();
    qid->add_option("--ell", c.ell, "hash output length (default: gamma nu d / 3)");
    add_storage(qid, true);
    qid->callback([&] {
      source = "identification bound";
      action = [&] { return bounds_qid(c); };
    });

    auto* imp = bounds->add_subcommand("impersonation", "identification error against impersonation");
    imp->add_option("--n", c.n, "code length")->required();
    imp->add_option("--m", c.m, "number of passwords")->required();
    imp->add_option("--delta", c.delta, "delta in (0, 1/4)")->required();
    add_storage(imp, true);
    imp->callback([&] {
      source = "impersonation bound";
      action = [&] { return bounds_impersonation(c); };
    });
    for (auto* sub : {ot, robust, qid, imp}) add_output(sub, Format::kText);
  }

  auto* curve_cmd = app.add_subcommand("curve", "OT rate over a grid of storage noise r");
  curve_cmd->add_option("--n", c.n, "number of qubits")->required();
  curve_cmd->add_option("--delta", c.delta, "delta in (0, 1/4)")->required();
  curve_cmd->add_option("--nu", c.nu, "storage rate nu");
  curve_cmd->add_option("--dim", c.dim, "storage dimension");
  curve_cmd->add_option("--points", c.points, "grid points over [0, r-max]");
  curve_cmd->add_option("--r-max", c.r_max, "largest r on the grid");
  add_output(curve_cmd, Format::kCsv);
  curve_cmd->callback([&] {
    source = "rate curve";
    action = [&] { return curve(c); };
  });

  auto* region_cmd = app.add_subcommand("region", "feasible (r, nu) region");
  region_cmd->add_option("--steps", c.steps, "grid points over r in [0, 1]");
  region_cmd->add_option("--nu-steps", c.nu_steps, "grid points over nu (default: --steps)");
  region_cmd->add_option("--nu-max", c.nu_max, "largest nu");
  region_cmd->add_option("--dim", c.dim, "storage dimension");
  add_output(region_cmd, Format::kCsv);
  region_cmd->callback([&] {
    source = "feasible region";
    action = [&] { return region(c); };
  });

  auto* sim = app.add_subcommand("simulate", "protocol simulations");
  sim->require_subcommand(1);
  {
    auto common = [&](CLI::App* sub) {
      sub->add_option("--seed", c.seed, "RNG seed");
      sub->add_option("--trials", c.trials, "number of runs (1 prints the transcript)");
      add_output(sub, Format::kJson);
    };
    auto* rot = sim->add_subcommand("rot", "1-2 randomized oblivious transfer");
    rot->add_option("--n", c.sim_n, "number of qubits");
    rot->add_option("--ell", c.sim_ell, "output string length");
    rot->add_option("--c", c.choice, "choice bit");
    rot->add_option("--adversary", c.adversary, "none|individual");
    rot->add_option("--r", c.r, "storage noise for the adversary");
    rot->add_option("--delta", c.delta, "delta for the reported security bound");
    common(rot);
    rot->callback([&] {
      source = "ROT simulation";
      action = [&] { return simulate_rot(c); };
    });

    auto* robust = sim->add_subcommand("robust", "robust ROT over a lossy, noisy link");
    robust->add_option("--n", c.sim_n, "number of pulses");
    robust->add_option("--ell", c.sim_ell, "output string length");
    robust->add_option("--c", c.choice, "choice bit");
    robust->add_option("--p1", c.p1_sent, "single-photon emission probability");
    robust->add_option("--ph-noclick", c.ph_noclick, "honest no-click probability");
    robust->add_option("--pd-noclick", c.pd_noclick, "vacuum probability");
    robust->add_option("--ph-err", c.ph_err, "honest bit-error probability");
    robust->add_option("--eps", c.eps, "security target setting the abort window");
    robust->add_option("--zeta", c.zeta, "abort window half-width (default from --eps)");
    robust->add_option("--code", c.code, "rep3|rep5|hamming74|hamming84|code JSON file");
    robust->add_option("--adversary", c.adversary, "none|erasure");
    robust->add_option("--extra-missing", c.extra_missing, "single-photon rounds falsely reported missing");
    robust->add_option("--r", c.r, "storage noise for the adversary");
    common(robust);
    robust->callback([&] {
      source = "robust ROT simulation";
      action = [&] { return simulate_robust(c, err); };
    });

    auto* qid = sim->add_subcommand("qid", "password-based identification");
    qid->add_option("--m", c.passwords, "number of passwords");
    qid->add_option("--n", c.code_length, "code length");
    qid->add_option("--ell", c.ell, "hash output length (default from the impersonation analysis)");
    qid->add_option("--wa", c.w_a, "user password");
    qid->add_option("--wb", c.w_b, "server's stored password");
    qid->add_option("--r", c.r, "storage noise assumed for the default ell");
    qid->add_option("--nu", c.nu, "storage rate assumed for the default ell");
    qid->add_option("--delta", c.delta, "delta assumed for the default ell");
    common(qid);
    qid->callback([&] {
      source = "identification simulation";
      action = [&] { return simulate_qid(c, err); };
    });
  }

  auto* ver = app.add_subcommand("verify", "self-checks against exhaustive or sampled oracles");
  ver->require_subcommand(1);
  for (const char* suite : {"split", "hashing", "pa", "lemma4", "codes"}) {
    auto* sub = ver->add_subcommand(suite, std::string("verification suite: ") + suite);
    sub->add_option("--trials", c.trials, "random instances");
    sub->add_option("--seed", c.seed, "RNG seed");
    if (std::string(suite) == "pa") sub->add_option("--samples", c.samples, "hash seeds per instance");
    add_output(sub, Format::kJson);
    const std::string name = suite;
    sub->callback([&, name] {
      source = "verify " + name;
      if (c.trials < 1) c.trials = 1;
      action = [&, name] { return run_verify(name, c, exit_code); };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << " [command line]\n";
    return 1;
  }

  try {
    if (c.format == Format::kDefault) c.format = default_format;
    if (c.format == Format::kCsv && source.find("curve") == std::string::npos &&
        source.find("region") == std::string::npos) {
      throw InvalidParameter("--format csv is only available for curve and region");
    }
    if (c.format == Format::kText && (source == "rate curve" || source == "feasible region")) {
      throw InvalidParameter("--format must be csv or json for this command");
    }
    const std::string text = action();
    write_output(text, c, out);
    if (exit_code != 0) err << "error: verification reported violations [" << source << "]\n";
    return exit_code;
  } catch (const InvalidParameter& e) {
    err << "error: " << with_source(e.what(), source) << '\n';
    return 1;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << with_source(e.what(), source) << '\n';
    return 1;
  } catch (const Infeasible& e) {
    err << "error: " << with_source(e.what(), source) << '\n';
    return 2;
  } catch (const NumericFailure& e) {
    err << "error: " << with_source(e.what(), source) << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << " [" << source << "]\n";
    return 1;
  }
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace nqs::cli
