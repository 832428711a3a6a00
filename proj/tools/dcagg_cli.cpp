// dcagg: generate duty-cycled sensor networks, build aggregation trees,
// schedule and verify convergecasts, and run delay sweeps.
//
// Exit codes: 0 success, 1 verifier violations, 2 usage error, 3 runtime
// failure (e.g. no connected placement for the requested density).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcagg/experiments.hpp"
#include "dcagg/netgen.hpp"
#include "dcagg/oracle.hpp"
#include "dcagg/scheduler.hpp"
#include "dcagg/tree.hpp"
#include "dcagg/verify.hpp"

namespace {

using namespace dcagg;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NetworkOptions {
  Params params;
  std::string sink = "random";
  std::string load;
  std::string dump;

  void attach(CLI::App* cmd) {
    cmd->add_option("--nodes", params.node_count, "number of nodes including the sink");
    cmd->add_option("--area", params.area_side, "side of the square deployment area (m)");
    cmd->add_option("--range", params.comm_range, "communication range d (m)");
    cmd->add_option("--irange", params.interference_range, "interference range dI (m), default d");
    cmd->add_option("--period", params.period_length, "working period length T (slots)");
    cmd->add_option("--active", params.active_slot_count, "active slots per period");
    cmd->add_option("--channels", params.channel_count, "number of channels m");
    cmd->add_option("--seed", params.rng_seed, "RNG seed");
    cmd->add_option("--sink", sink, "sink placement: random|center|corner");
    cmd->add_option("--load-topology", load, "read the network from a topology file");
    cmd->add_option("--dump-topology", dump, "also write the network to this file");
  }

  bool irange_given(CLI::App* cmd) const { return cmd->count("--irange") > 0; }

  Network resolve(CLI::App* cmd) {
    Network net;
    if (!load.empty()) {
      std::ifstream in(load);
      if (!in) throw UsageError("cannot open topology file " + load);
      net = read_topology(in);
    } else {
      if (!irange_given(cmd)) params.interference_range = params.comm_range;
      params.sink_placement = parse_sink_placement(sink);
      net = generate_network(params);
    }
    if (!dump.empty()) {
      std::ofstream out(dump);
      write_topology(out, net);
    }
    return net;
  }
};

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  fn(out);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Duty-cycled multichannel aggregation scheduling"};
  app.require_subcommand(1);

  NetworkOptions net_opts;
  std::string method = "ddas";
  std::string policy = "all-leaves";
  std::string out_path;
  std::string tree_path;

  auto* gen = app.add_subcommand("gen", "generate a connected topology");
  net_opts.attach(gen);
  bool show_stats = false;
  gen->add_option("-o,--out", out_path, "topology output file (default stdout)");
  gen->add_flag("--stats", show_stats, "print node/edge/degree/eccentricity counts to stderr");

  auto* tree = app.add_subcommand("tree", "build an aggregation tree and dump it");
  net_opts.attach(tree);
  tree->add_option("--method", method, "ddas|spt")->check(CLI::IsMember({"ddas", "spt"}));
  tree->add_option("--dump-tree,-o,--out", tree_path, "tree output file (default stdout)");

  auto* sched = app.add_subcommand("sched", "schedule a convergecast over a tree");
  net_opts.attach(sched);
  sched->add_option("--method", method, "ddas|spt")->check(CLI::IsMember({"ddas", "spt"}));
  sched->add_option("--policy", policy, "all-leaves|layered")
      ->check(CLI::IsMember({"all-leaves", "layered"}));
  sched->add_option("--dump-tree", tree_path, "also write the tree to this file");
  sched->add_option("-o,--out", out_path, "schedule output file (default stdout)");

  std::string verify_topology, verify_tree, verify_schedule_path;
  auto* verify = app.add_subcommand("verify", "check a schedule against topology and tree");
  verify->add_option("--topology", verify_topology, "topology file")->required();
  verify->add_option("--tree", verify_tree, "tree dump file")->required();
  verify->add_option("--schedule", verify_schedule_path, "schedule dump file")->required();

  std::string config_path, preset, out_dir = ".", prefix;
  int jobs = 1;
  int trials_override = 0;
  bool extended = false;
  bool plotdata = false;
  auto* sweep = app.add_subcommand("sweep", "run a delay sweep and write CSVs");
  auto* config_opt = sweep->add_option("--config", config_path, "key=value sweep config file");
  sweep->add_option("--preset", preset, "fig2a|fig2b|fig3a|fig3b")->excludes(config_opt);
  sweep->add_flag("--extended", extended, "fig3a: also run N=800");
  sweep->add_option("--trials", trials_override, "override the number of trials");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out-dir", out_dir, "directory for output files");
  sweep->add_option("--prefix", prefix, "output file prefix (default: preset or 'sweep')");
  sweep->add_flag("--emit-plotdata", plotdata, "write a whitespace-separated plot file");

  Slot horizon = 0;
  auto* oracle = app.add_subcommand("oracle", "exhaustive optimal delay on a tiny instance");
  net_opts.attach(oracle);
  oracle->add_option("--method", method, "ddas|spt")->check(CLI::IsMember({"ddas", "spt"}));
  oracle->add_option("--horizon", horizon, "search horizon in slots (default 3T)");
  oracle->add_option("-o,--out", out_path, "optimal schedule output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      const Network net = net_opts.resolve(gen);
      with_output(out_path, [&](std::ostream& os) { write_topology(os, net); });
      if (show_stats) {
        const NetworkStats s = network_stats(net);
        std::cerr << "nodes " << s.node_count << " edges " << s.edge_count << " max_degree "
                  << s.max_degree << " sink_eccentricity " << s.sink_eccentricity << '\n';
      }
    } else if (*tree) {
      const Network net = net_opts.resolve(tree);
      const Layering lay = compute_layers(net);
      const AggregationTree t = build_tree(net, lay, parse_tree_method(method));
      with_output(tree_path, [&](std::ostream& os) { write_tree(os, t, lay); });
    } else if (*sched) {
      const Network net = net_opts.resolve(sched);
      const Layering lay = compute_layers(net);
      const AggregationTree t = build_tree(net, lay, parse_tree_method(method));
      if (!tree_path.empty()) with_output(tree_path, [&](std::ostream& os) { write_tree(os, t, lay); });
      const Schedule s = schedule(net, t, parse_candidate_policy(policy));
      with_output(out_path, [&](std::ostream& os) { write_schedule(os, s); });
      std::cerr << "delay_slots " << s.delay << '\n';
    } else if (*verify) {
      auto topo_in = open_input(verify_topology);
      const Network net = read_topology(topo_in);
      auto tree_in = open_input(verify_tree);
      const AggregationTree t = read_tree(tree_in, net.size());
      auto sched_in = open_input(verify_schedule_path);
      const Schedule s = read_schedule(sched_in);
      const auto violations = verify_schedule(net, t, s);
      for (const auto& v : violations) std::cout << describe(v) << '\n';
      if (!violations.empty()) {
        std::cout << violations.size() << " violation(s)\n";
        return 1;
      }
      std::cout << "ok delay_slots " << aggregation_delay(s) << '\n';
    } else if (*sweep) {
      SweepSpec spec;
      if (!config_path.empty()) {
        auto in = open_input(config_path);
        spec = parse_sweep_config(in);
      } else if (!preset.empty()) {
        spec = preset_sweep(preset, extended);
      } else {
        throw UsageError("sweep needs --config or --preset");
      }
      if (trials_override > 0) spec.trials = trials_override;
      if (prefix.empty()) prefix = preset.empty() ? "sweep" : preset;
      const ExperimentResult result = run_sweep(spec, jobs);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      with_output((dir / (prefix + "_trials.csv")).string(),
                  [&](std::ostream& os) { write_trials_csv(os, result); });
      with_output((dir / (prefix + "_summary.csv")).string(),
                  [&](std::ostream& os) { write_summary_csv(os, result); });
      if (plotdata)
        with_output((dir / (prefix + ".dat")).string(),
                    [&](std::ostream& os) { write_plotdata(os, result); });
      write_summary_csv(std::cout, result);
      const auto has = [&](Scheme s) {
        for (Scheme x : spec.schemes)
          if (x == s) return true;
        return false;
      };
      if (has(Scheme::kNdas) && has(Scheme::kDdas)) {
        std::cout << "\n" << to_string(spec.field) << " improvement_of_DDAS_over_NDAS\n";
        for (const auto& imp : summarize(result)) std::cout << imp.value << ' ' << imp.relative << '\n';
      }
    } else if (*oracle) {
      const Network net = net_opts.resolve(oracle);
      const Layering lay = compute_layers(net);
      const AggregationTree t = build_tree(net, lay, parse_tree_method(method));
      if (horizon == 0) horizon = Slot{3} * net.params.period_length;
      const auto best = brute_force_optimal(net, t, horizon);
      const Schedule greedy = schedule(net, t, CandidatePolicy::kAllLeaves);
      if (best) {
        std::cout << "optimal_delay " << best->delay << '\n';
        if (!out_path.empty()) with_output(out_path, [&](std::ostream& os) { write_schedule(os, *best); });
      } else {
        std::cout << "optimal_delay none (horizon " << horizon << ")\n";
      }
      std::cout << "greedy_delay " << greedy.delay << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
