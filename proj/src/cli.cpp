#include "ebi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ebi/constructor.hpp"
#include "ebi/descent.hpp"
#include "ebi/formula.hpp"
#include "ebi/graph_core.hpp"
#include "ebi/oracle.hpp"

namespace ebi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string subcommand;
  int m = 0;
  int n = 0;
  std::optional<int> target;
  std::string out_path;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
};

std::uint64_t resolve_budget(const Options& opt) {
  if (opt.budget) return *opt.budget;
  if (const char* env = std::getenv("EBI_ORACLE_BUDGET")) {
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0') {
      throw Error(std::string("EBI_ORACLE_BUDGET is not a valid integer: ") + env);
    }
    return value;
  }
  return kDefaultOracleBudget;
}

// Payload goes to --out when given, otherwise to stdout; in the latter case
// the summary line moves to stderr.
void emit_payload(const Options& opt, std::ostream& out, const std::string& payload) {
  if (opt.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + opt.out_path);
  file << payload;
  if (!file) throw Error("failed writing output file: " + opt.out_path);
}

std::string join_values(const std::vector<int>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s.push_back(sep);
    s += std::to_string(values[i]);
  }
  return s;
}

std::string summary_prefix(const EbiParams& p) {
  return "m=" + std::to_string(p.instance.m) + " n=" + std::to_string(p.instance.n) +
         " k=" + std::to_string(p.k) + " j=" + std::to_string(p.j) +
         " max=" + std::to_string(p.max_index);
}

std::string counts_line(const Counts& c) {
  return "e1=" + std::to_string(c.e1) + " e0=" + std::to_string(c.e0) +
         " v1=" + std::to_string(c.v1) + " v0=" + std::to_string(c.v0) +
         " index=" + std::to_string(c.index);
}

int cmd_params(const Options& opt, std::ostream& out) {
  const EbiParams p = compute_params(Instance(opt.m, opt.n));
  if (opt.format == "summary") {
    out << summary_prefix(p) << "\n";
  } else {
    out << "k=" << p.k << " j=" << p.j << " max=" << p.max_index << "\n";
  }
  return kExitOk;
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  const Instance inst(opt.m, opt.n);
  const Labeling labeling = construct_max(inst);
  const Counts c = counts(labeling);
  emit_payload(opt, out, to_text(labeling));
  std::ostream& info = opt.out_path.empty() ? err : out;
  if (opt.format == "summary") {
    info << summary_prefix(compute_params(inst)) << " index=" << c.index << "\n";
  } else {
    info << counts_line(c) << "\n";
  }
  return kExitOk;
}

int cmd_descend(const Options& opt, std::ostream& out, std::ostream& err) {
  const Instance inst(opt.m, opt.n);
  if (!opt.target) throw Error("descend: --target is required");
  const DescentTrace trace = descend_to(construct_max(inst), *opt.target);
  emit_payload(opt, out, to_text(trace));
  std::vector<int> checkpoint_indices;
  for (const auto& [index, labeling] : trace.checkpoints) checkpoint_indices.push_back(index);
  std::ostream& info = opt.out_path.empty() ? err : out;
  if (opt.format == "summary") {
    info << summary_prefix(compute_params(inst)) << " index=" << *opt.target
         << " checkpoints=" << join_values(checkpoint_indices, ',') << "\n";
  } else {
    info << "checkpoints: " << join_values(checkpoint_indices, ' ') << "\n";
  }
  return kExitOk;
}

int cmd_set(const Options& opt, std::ostream& out) {
  const Instance inst(opt.m, opt.n);
  const IndexSet set = ebi_set(inst);
  if (opt.format == "summary") {
    out << summary_prefix(compute_params(inst))
        << " values=" << join_values(set.values, ',') << "\n";
  } else {
    out << join_values(set.values, ' ') << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Instance inst(opt.m, opt.n);
  if (opt.sample.has_value() != opt.seed.has_value()) {
    throw Error("verify: --sample and --seed must be given together");
  }
  const VerifyResult result = opt.sample
                                  ? verify_sampled(inst, SampleSpec{*opt.sample, *opt.seed})
                                  : verify_instance(inst, resolve_budget(opt));
  std::string verdict = result.ok ? "PASS" : "FAIL";
  if (!result.ok) {
    if (!result.missing.empty()) verdict += " missing=" + join_values(result.missing, ',');
    if (!result.extra.empty()) verdict += " extra=" + join_values(result.extra, ',');
  }
  if (opt.format == "summary") {
    const std::set<int> observed_set = result.report.observed();
    const std::vector<int> observed(observed_set.begin(), observed_set.end());
    out << summary_prefix(compute_params(inst)) << " observed=" << join_values(observed, ',')
        << " verdict=" << verdict << "\n";
  } else {
    emit_payload(opt, out, to_text(result.report));
    out << verdict << "\n";
  }
  return result.ok ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"edge-balanced index sets of complete odd bipartite graphs"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("m", opt.m, "size of part A (odd, m >= n)")->required();
    sub->add_option("n", opt.n, "size of part B (odd)")->required();
    sub->add_option("--format", opt.format, "output format: text | summary")
        ->check(CLI::IsMember({"text", "summary"}));
    if (with_out) sub->add_option("--out", opt.out_path, "write the payload to this file");
  };

  add_common(app.add_subcommand("params", "print k, j and the maximum index"), false);
  add_common(app.add_subcommand("construct", "emit the maximum-index labeling"), true);
  CLI::App* descend = app.add_subcommand("descend", "emit a descent trace of witnesses");
  add_common(descend, true);
  descend->add_option("--target", opt.target, "even index to descend to")->required();
  add_common(app.add_subcommand("set", "print the edge-balanced index set"), false);
  CLI::App* verify = app.add_subcommand("verify", "check the closed form against enumeration");
  add_common(verify, true);
  verify->add_option("--budget", opt.budget,
                     "max exhaustive enumeration size (default 22000000, or "
                     "EBI_ORACLE_BUDGET)");
  verify->add_option("--sample", opt.sample, "sample this many labelings instead");
  verify->add_option("--seed", opt.seed, "seed for sampled mode");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::stringstream help;
    help << app.help();
    out << help.str();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("params")) return cmd_params(opt, out);
    if (app.got_subcommand("construct")) return cmd_construct(opt, out, err);
    if (app.got_subcommand("descend")) return cmd_descend(opt, out, err);
    if (app.got_subcommand("set")) return cmd_set(opt, out);
    return cmd_verify(opt, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const AssertionBreach& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const NoMixedPart& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace ebi
