#include "bkvc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "bkvc/config_io.hpp"
#include "bkvc/covers.hpp"
#include "bkvc/exact.hpp"
#include "bkvc/optimizer.hpp"
#include "bkvc/report.hpp"
#include "bkvc/verify.hpp"

namespace bkvc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

struct OptimizerFlags {
  double pi = 1e-5;
  double lambda = 1e-5;
  int restarts = 1000;
  std::uint64_t seed = 1;
  int fractions = 6;
  bool ablate = false;
  int threads = 0;
  int max_iters = 400;
  bool literal = false;

  void attach(CLI::App* app, bool with_pair) {
    if (with_pair) {
      app->add_option("--pi", pi, "Vertical separation fraction on the first side")
          ->check(CLI::Range(1e-12, 0.5));
      app->add_option("--lambda", lambda, "Vertical separation fraction on the second side")
          ->check(CLI::PositiveNumber);
      app->add_flag("--ablate-vertical", ablate, "Minimize over r1..r4 only");
    }
    app->add_option("--restarts", restarts, "Number of multistart descents")
        ->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Seed of the start-point generator");
    app->add_option("--fractions", fractions, "Separation fractions per side (5 pins pi6, lambda6 to 0)")
        ->check(CLI::IsMember({5, 6}));
    app->add_option("--threads", threads, "Worker threads (0 = all cores)");
    app->add_option("--max-iters", max_iters, "Iterations per inner descent");
    app->add_flag("--literal", literal, "Do not cap completion fractions at 1");
  }

  OptimizerSettings settings() const {
    OptimizerSettings s;
    s.pi = pi;
    s.lambda = lambda;
    s.restarts = restarts;
    s.seed = seed;
    s.fraction_vars = fractions;
    s.ratio_count = ablate ? 4 : 6;
    s.threads = threads;
    s.max_iters = max_iters;
    s.fractions = literal ? FractionMode::kLiteral : FractionMode::kCapped;
    return s;
  }
};

std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("pair '" + item + "' is not pi:lambda");
    out.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  if (out.empty()) throw UsageError("no pairs given");
  return out;
}

double to_number(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("'" + s + "' is not a number");
  return x;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max k-vertex cover in bipartite graphs: algorithms and worst-case ratio analysis"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // gen
  std::string kind = "random", gen_out;
  int n1 = 4, n2 = 4, d1 = 2, d2 = 2;
  double p = 0.5;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a bipartite graph");
  gen->add_option("--kind", kind, "random or semiregular")->check(CLI::IsMember({"random", "semiregular"}));
  gen->add_option("--n1", n1, "Size of the first color class")->check(CLI::NonNegativeNumber);
  gen->add_option("--n2", n2, "Size of the second color class")->check(CLI::NonNegativeNumber);
  gen->add_option("--p", p, "Edge probability (random)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--d1", d1, "Degree of first-class vertices (semiregular)");
  gen->add_option("--d2", d2, "Degree of second-class vertices (semiregular)");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // solve
  std::string graph_path, alg = "kvc";
  int k = 1;
  double solve_pi = 1e-5, solve_lambda = 1e-5;
  bool with_oracle = false;
  auto* solve = app.add_subcommand("solve", "Run one algorithm on a graph");
  solve->add_option("--graph", graph_path, "Graph file")->required();
  solve->add_option("--k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--alg", alg, "greedy, two-thirds, nu-xi-zero, kvc or exact")
      ->check(CLI::IsMember({"greedy", "two-thirds", "nu-xi-zero", "kvc", "exact"}));
  solve->add_option("--pi", solve_pi, "kvc separation fraction, first side")->check(CLI::Range(1e-12, 0.5));
  solve->add_option("--lambda", solve_lambda, "kvc separation fraction, second side")->check(CLI::PositiveNumber);
  solve->add_flag("--oracle", with_oracle, "Also compute the exact optimum and the achieved ratio");

  // extract-config
  std::string extract_graph, extract_out, extract_norm;
  int extract_k = 1;
  auto* extract = app.add_subcommand("extract-config", "Cut configuration of a graph's optimum");
  extract->add_option("--graph", extract_graph, "Graph file")->required();
  extract->add_option("--k", extract_k, "Budget")->required()->check(CLI::PositiveNumber);
  extract->add_option("--out", extract_out, "Write the raw (integer) configuration here");
  extract->add_option("--normalized-out", extract_norm, "Write the normalized configuration here");

  // eval-ratios
  std::string config_path, eval_format = "text";
  std::optional<double> eval_pi, eval_lambda;
  bool eval_literal = false, eval_details = false, eval_ablate = false;
  auto* eval = app.add_subcommand("eval-ratios", "Evaluate r1..r6 on a configuration file");
  eval->add_option("--config", config_path, "Configuration file")->required();
  eval->add_option("--pi", eval_pi, "Override the file's pi");
  eval->add_option("--lambda", eval_lambda, "Override the file's lambda");
  eval->add_flag("--literal", eval_literal, "Do not cap completion fractions at 1");
  eval->add_flag("--details", eval_details, "Print every intermediate and the constraint slacks");
  eval->add_flag("--ablate-vertical", eval_ablate, "Best over r1..r4 only");
  eval->add_option("--format", eval_format, "text or dump")->check(CLI::IsMember({"text", "dump"}));

  // analyze
  OptimizerFlags analyze_flags;
  std::string analyze_init, analyze_out, analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "Multistart search for the worst-case configuration");
  analyze_flags.attach(analyze, true);
  analyze->add_option("--init", analyze_init, "Configuration file used as the first start");
  analyze->add_option("--out", analyze_out, "Write the best configuration here");
  analyze->add_option("--format", analyze_format, "text or dump")->check(CLI::IsMember({"text", "dump"}));

  // sweep
  OptimizerFlags sweep_flags;
  sweep_flags.restarts = 200;
  std::string pairs =
      "-:-,0.4:0.4,0.2:0.00001,0.1:0.1,0.05:0.1,0.0001:0.5,0.0001:0.0001,0.00001:0.00001";
  auto* sweep = app.add_subcommand("sweep", "Worst-case value for several (pi, lambda) pairs");
  sweep_flags.attach(sweep, false);
  sweep->add_option("--pairs", pairs, "Comma separated pi:lambda pairs; '-:-' is the r1..r4 ablation");

  // verify
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the oracle-based invariant suites");
  verify->add_option("--max-n", vopt.max_n, "Largest n1 + n2 of random instances")->check(CLI::Range(2, 16));
  verify->add_option("--exhaustive-side", vopt.exhaustive_side, "Every graph with n1, n2 up to this")
      ->check(CLI::Range(0, 3));
  verify->add_option("--random", vopt.random_instances, "Number of random instances")->check(CLI::NonNegativeNumber);
  verify->add_option("--disjoint", vopt.disjoint_instances, "Number of planted disjoint-optimum instances")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed, "Instance seed");
  verify->add_option("--pi", vopt.pi, "kvc separation fraction, first side")->check(CLI::Range(1e-12, 0.5));
  verify->add_option("--lambda", vopt.lambda, "kvc separation fraction, second side")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return 2;
  }

  try {
    if (*gen) {
      const BipartiteGraph g = kind == "random" ? generate_random(n1, n2, p, gen_seed)
                                                : generate_semiregular(n1, n2, d1, d2, gen_seed);
      if (gen_out.empty()) {
        out << serialize_graph(g);
      } else {
        write_graph_file(gen_out, g);
        out << "wrote " << gen_out << ": n1=" << g.n1() << " n2=" << g.n2()
            << " m=" << g.num_edges() << "\n";
      }
      return 0;
    }

    if (*solve) {
      const BipartiteGraph g = read_graph_file(graph_path);
      CoverSolution s;
      if (alg == "greedy") s = greedy(g, k);
      else if (alg == "two-thirds") s = two_thirds(g, k);
      else if (alg == "nu-xi-zero") s = nu_xi_zero(g, k);
      else if (alg == "kvc") s = kvc_algorithm(g, k, solve_pi, solve_lambda);
      else {
        const ExactResult r = brute_force_opt(g, k);
        s.chosen = r.opt_set;
        s.value = r.opt_value;
        s.algorithm = "exact";
      }
      out << "algorithm: " << s.algorithm << "\n";
      out << "value: " << s.value << "\n";
      out << "chosen: " << join(s.chosen) << "\n";
      if (s.guess) {
        out << "guess: k1=" << s.guess->k1 << " k2=" << s.guess->k2 << " k1'=" << s.guess->k1p
            << " k2'=" << s.guess->k2p << (s.guess->swapped ? " (sides swapped)" : "") << "\n";
      }
      if (s.sol_index) out << "solution: SOL" << *s.sol_index << "\n";
      if (with_oracle) {
        const ExactResult r = brute_force_opt(g, k);
        out << "opt: " << r.opt_value << "\n";
        out << "ratio: "
            << (r.opt_value > 0 ? fmt("%.6f", static_cast<double>(s.value) / r.opt_value)
                                : std::string("1 (empty optimum)"))
            << "\n";
      }
      return 0;
    }

    if (*extract) {
      const BipartiteGraph g = read_graph_file(extract_graph);
      const ExactResult r = brute_force_opt(g, extract_k);
      const ExtractedConfig e = extract_config(g, extract_k, r);
      const Guess& q = e.layout.guess;
      out << "opt: " << r.opt_value << "\n";
      out << "guess: k1=" << q.k1 << " k2=" << q.k2 << " k1'=" << q.k1p << " k2'=" << q.k2p
          << (e.swapped ? " (sides swapped)" : "") << "\n";
      out << "cuts:";
      for (int i = 0; i < kNumCuts; ++i) {
        if (e.counts[i] != 0) out << ' ' << kCutNames[i] << '=' << e.counts[i];
      }
      out << "\n\n";
      out << format_configuration_table(e.normalized, eval_ratios(e.normalized));
      if (!extract_out.empty()) write_config_file(extract_out, e.raw);
      if (!extract_norm.empty()) write_config_file(extract_norm, e.normalized);
      return 0;
    }

    if (*eval) {
      Configuration c = read_config_file(config_path);
      if (eval_pi) c.pi = *eval_pi;
      if (eval_lambda) c.lambda = *eval_lambda;
      RatioOptions o;
      o.fractions = eval_literal ? FractionMode::kLiteral : FractionMode::kCapped;
      o.ratio_count = eval_ablate ? 4 : 6;
      const RatioReport r = eval_ratios(c, o);
      if (eval_format == "dump") {
        out << dump_config(c);
        for (int i = 0; i < 6; ++i) out << "# r" << i + 1 << " = " << fmt("%.17g", r.r[i]) << "\n";
        out << "# best = " << fmt("%.17g", r.best) << "\n# argbest = " << r.argbest << "\n";
        return 0;
      }
      out << format_configuration_table(c, r);
      if (eval_details) {
        out << "\n" << format_intermediates(r) << "\n" << format_constraints(check_constraints(c, 1e-6));
      }
      return 0;
    }

    if (*analyze) {
      OptimizerSettings s = analyze_flags.settings();
      if (!analyze_init.empty()) s.initial_points.push_back(read_config_file(analyze_init));
      const auto t0 = std::chrono::steady_clock::now();
      const OptimizerRun run = minimize_max_ratio(s);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (analyze_format == "dump") {
        out << dump_config(run.best_config);
        out << "# best_value = " << fmt("%.17g", run.best_value) << "\n";
      } else {
        out << format_run(run);
        out << "\nelapsed: " << fmt("%.1f", secs) << " s\n";
      }
      if (!analyze_out.empty()) write_config_file(analyze_out, run.best_config);
      return 0;
    }

    if (*sweep) {
      std::vector<SweepRow> rows;
      for (const auto& [a, b] : split_pairs(pairs)) {
        OptimizerSettings s = sweep_flags.settings();
        SweepRow row;
        if (a == "-" && b == "-") {
          row.ablation = true;
          s.ratio_count = 4;
        } else {
          s.pi = to_number(a);
          s.lambda = to_number(b);
          row.pi = s.pi;
          row.lambda = s.lambda;
        }
        const OptimizerRun run = minimize_max_ratio(s);
        row.best_value = run.best_value;
        row.feasible = run.best_feasible;
        RatioOptions o;
        o.fractions = s.fractions;
        o.ratio_count = s.ratio_count;
        row.argbest = eval_ratios(run.best_config, s.pi, s.lambda, o).argbest;
        rows.push_back(row);
      }
      out << format_sweep(rows);
      return 0;
    }

    if (*verify) {
      const auto instances = verification_instances(vopt);
      out << "instances: " << instances.size() << "\n";
      const auto results = run_checks(instances, vopt);
      out << format_checks(results);
      for (const auto& r : results) {
        if (!r.ok()) return 1;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bkvc
