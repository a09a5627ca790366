// Command-line front end. Exit codes: 0 success, 1 validation or property
// failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ccs/core/enumerate.hpp"
#include "ccs/workbench/ccs_format.hpp"
#include "ccs/workbench/generators.hpp"
#include "ccs/workbench/json_report.hpp"
#include "ccs/workbench/verify_small.hpp"

namespace {

using namespace ccs;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

PseudoConfiguration load(const std::string& path, bool unchecked = false) {
  return parse_ccs(read_input(path), unchecked);
}

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad label list: " + text);
    }
  }
  return out;
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

bool is_usage_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::RepeatedLabel:
    case ErrorCode::NTooLarge:
    case ErrorCode::NTooSmall:
    case ErrorCode::SubsetTooSmall:
    case ErrorCode::NTooLargeForBrute:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CC-system toolkit: validation, convex position search, spike decompositions, bounds"};
  app.require_subcommand(1);

  std::string file;
  bool unchecked = false;
  auto* validate = app.add_subcommand("validate", "check the CC-system axioms of a .ccs file");
  validate->add_option("file", file, ".ccs file or - for stdin")->required();

  std::string kind_text = "random";
  int n = 0;
  std::uint64_t seed = 1;
  int flips = 0;
  auto* gen = app.add_subcommand("gen", "generate a configuration as .ccs");
  gen->add_option("--kind", kind_text, "random | grid | mutated")->capture_default_str();
  gen->add_option("--n", n, "number of points")->required();
  gen->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  gen->add_option("--flips", flips, "sign flips for mutated")->capture_default_str();

  std::string subset;
  auto* hull = app.add_subcommand("hull", "hull certificate of a subset (default: all points)");
  hull->add_option("file", file)->required();
  hull->add_option("--subset", subset, "comma-separated labels");

  std::string mode = "dp";
  auto* largest = app.add_subcommand("largest", "largest subset in convex position");
  largest->add_option("file", file)->required();
  largest->add_option("--mode", mode, "brute | dp")->capture_default_str();

  std::string x_text;
  auto* decompose_cmd = app.add_subcommand("decompose", "spike decomposition and chain statistics");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--x", x_text, "convex subset X, comma-separated, at least 4 labels")->required();

  int k = 4;
  std::string strategy_text;
  std::uint64_t samples = 0;
  int target = 0;
  auto* pipeline = app.add_subcommand("pipeline", "clustering, chain statistics and convex assembly");
  pipeline->add_option("file", file)->required();
  pipeline->add_option("--k", k, "even k >= 4")->capture_default_str();
  pipeline->add_option("--strategy", strategy_text, "exhaustive | sampled (default: exhaustive when allowed)");
  pipeline->add_option("--seed", seed, "sampling seed")->capture_default_str();
  pipeline->add_option("--samples", samples, "number of sampled 2k-subsets");
  pipeline->add_option("--target", target, "n known to have no convex n-subset; evaluates the remaining inequalities");

  auto* bound = app.add_subcommand("bound", "evaluate the bound exponent for n");
  bound->add_option("--n", n, "polygon size")->required();

  bool canonical = false, mirror = false, count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "all CC-systems on n points (n <= 6)");
  enumerate->add_option("--n", n, "number of points")->required();
  enumerate->add_flag("--canonical", canonical, "one system per relabeling class");
  enumerate->add_flag("--mirror", mirror, "with --canonical, identify reflections too");
  enumerate->add_flag("--count", count_only, "print the count only");

  std::string task_text;
  std::uint64_t trials = 100;
  auto* verify = app.add_subcommand("verify-small", "small exhaustive and randomized property checks");
  verify->add_option("--task", task_text, "b4 | caratheodory | trichotomy | joins")->required();
  verify->add_option("--trials", trials, "random trials")->capture_default_str();
  verify->add_option("--seed", seed, "seed")->capture_default_str();

  std::uint64_t budget = kDefaultRealizabilityBudget;
  auto* realize = app.add_subcommand("realize", "search for coordinates realizing a system (n <= 6)");
  realize->add_option("file", file)->required();
  realize->add_option("--budget", budget, "random point sets to try")->capture_default_str();
  realize->add_option("--seed", seed, "seed")->capture_default_str();

  for (auto* cmd : {validate, hull, largest, decompose_cmd, pipeline}) {
    cmd->add_flag("--unchecked", unchecked, "skip axiom validation when loading");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) {
      const PseudoConfiguration cfg = load(file, true);
      const ValidationReport report = validate_axioms(cfg);
      print(to_json(report));
      return report.pass() ? 0 : kExitFailure;
    }
    if (*gen) {
      const auto kind = parse_generator_kind(kind_text);
      if (!kind) throw UsageError("unknown generator kind: " + kind_text);
      std::cout << serialize_ccs(generate({*kind, n, seed, flips}));
      return 0;
    }
    if (*hull) {
      const PseudoConfiguration cfg = load(file, unchecked);
      std::vector<Label> q = parse_labels(subset);
      if (subset.empty())
        for (Label p = 0; p < cfg.size(); ++p) q.push_back(p);
      print(to_json(hull_cycle(cfg, q)));
      return 0;
    }
    if (*largest) {
      if (mode != "brute" && mode != "dp") throw UsageError("mode must be brute or dp");
      const PseudoConfiguration cfg = load(file, unchecked);
      print(to_json(largest_convex_subset(cfg, mode == "brute" ? SearchMode::Brute : SearchMode::ChainDp)));
      return 0;
    }
    if (*decompose_cmd) {
      const PseudoConfiguration cfg = load(file, unchecked);
      const std::vector<Label> x = parse_labels(x_text);
      const ConvexCertificate cert = hull_cycle(cfg, x);
      if (cert.size() != x.size()) throw Error(ErrorCode::NotConvex, "X is not in convex position", x);
      print(to_json(cfg, decompose(cfg, cert)));
      return 0;
    }
    if (*pipeline) {
      const PseudoConfiguration cfg = load(file, unchecked);
      PipelineOptions options;
      if (!strategy_text.empty()) {
        if (strategy_text == "exhaustive") options.strategy = ClusteringStrategy::Exhaustive;
        else if (strategy_text == "sampled") options.strategy = ClusteringStrategy::Sampled;
        else throw UsageError("strategy must be exhaustive or sampled");
      }
      options.clustering.seed = seed;
      if (samples > 0) options.clustering.samples = samples;
      if (target > 0) options.target = target;
      print(to_json(suk_pipeline(cfg, k, options)));
      return 0;
    }
    if (*bound) {
      print(to_json(bound_b(n)));
      return 0;
    }
    if (*enumerate) {
      if (mirror && !canonical) throw UsageError("--mirror requires --canonical");
      std::size_t count = 0;
      bool first = true;
      for_each_system(
          n,
          [&](const PseudoConfiguration& cfg) {
            ++count;
            if (count_only) return;
            if (!first) std::cout << "\n";
            first = false;
            std::cout << serialize_ccs(cfg);
          },
          {canonical, mirror});
      if (count_only) std::cout << count << "\n";
      return 0;
    }
    if (*verify) {
      const auto task = parse_small_task(task_text);
      if (!task) throw UsageError("unknown task: " + task_text);
      const VerifyReport r = verify_small(*task, trials, seed);
      std::cout << (r.pass() ? "PASS" : "FAIL") << " " << to_string(r.task) << ": " << r.checks << " checks over "
                << r.trials << " trials, " << r.failures << " failures\n";
      for (const auto& f : r.failure_samples) std::cout << "  " << f << "\n";
      return r.pass() ? 0 : kExitFailure;
    }
    if (*realize) {
      const PseudoConfiguration cfg = load(file);
      const RealizabilityHint hint = realizability_hint(cfg, budget, seed);
      print(to_json(hint));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_code(e.code()) ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
