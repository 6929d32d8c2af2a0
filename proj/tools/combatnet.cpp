#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "combatnet/baseline.hpp"
#include "combatnet/experiment.hpp"
#include "combatnet/svg.hpp"

namespace fs = std::filesystem;
using namespace combatnet;

namespace {

// Every model flag is optional so that family defaults survive unless the
// user (or the config file) sets the value.
struct Flags {
  std::optional<std::string> family;
  std::vector<std::size_t> sizes;
  std::vector<double> er_probs;
  std::optional<std::size_t> ba_m0, ba_m;
  std::optional<double> goh_beta, goh_k_mean, inter_prob;
  std::optional<std::uint64_t> network_seed;

  std::optional<std::size_t> n_pop, gen, n_seeded, crossover_loc_max, mutation_loc_max, potential_cutoff;
  std::optional<double> p_c, p_m, penalty, sigma;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> ga_seed;

  std::optional<double> gamma, rho, alpha;
  std::vector<double> lambdas;

  std::uint64_t seed = 1;
  std::optional<std::size_t> replicates, max_retries;
  std::optional<std::string> l_range;
  std::vector<double> betas, gammas, rhos;
  std::vector<std::size_t> ns, gens;
  bool no_networks = false;
  bool plots = false;
  bool quiet = false;
  std::string out = "out";
};

void add_model_flags(CLI::App& app, Flags& f) {
  const std::string net = "Network", ga = "Optimizer", cost = "Cost and damage", run = "Run";
  app.add_option("--family", f.family, "ER, BA or GOH")->group(net);
  app.add_option("--sizes", f.sizes, "layer sizes O,P,D,A")->expected(4)->delimiter(',')->group(net);
  app.add_option("--er-probs", f.er_probs, "ER link probability per layer O,P,D,A")
      ->expected(4)
      ->delimiter(',')
      ->group(net);
  app.add_option("--ba-m0", f.ba_m0, "BA seed clique size")->group(net);
  app.add_option("--ba-m", f.ba_m, "BA links per new node")->group(net);
  app.add_option("--goh-beta", f.goh_beta, "Goh degree exponent (> 2)")->group(net);
  app.add_option("--goh-k-mean", f.goh_k_mean, "Goh mean degree")->group(net);
  app.add_option("--inter-prob", f.inter_prob, "cross-layer link probability")->group(net);
  app.add_option("--network-seed", f.network_seed, "fixed generator seed; disables degenerate retries")->group(net);

  app.add_option("--n-pop", f.n_pop, "population size (even)")->group(ga);
  app.add_option("--gen", f.gen, "generations")->group(ga);
  app.add_option("--p-c", f.p_c, "crossover probability")->group(ga);
  app.add_option("--p-m", f.p_m, "mutation probability")->group(ga);
  app.add_option("--n-seeded", f.n_seeded, "seeded chromosomes per prior indicator")->group(ga);
  app.add_option("--penalty", f.penalty, "fitness of budget-violating members (< 0)")->group(ga);
  app.add_option("--mode", f.mode, "fixed-l or budget")->group(ga);
  app.add_option("--crossover-loc-max", f.crossover_loc_max, "max crossover span, 0 = ceil(n/4)")->group(ga);
  app.add_option("--mutation-loc-max", f.mutation_loc_max, "max mutation span, 0 = max(1, L-1)")->group(ga);
  app.add_option("--sigma", f.sigma, "topological potential influence factor")->group(ga);
  app.add_option("--potential-cutoff", f.potential_cutoff, "potential hop cutoff, 0 = ceil(3 sigma)")->group(ga);
  app.add_option("--ga-seed", f.ga_seed, "optimizer seed (single runs)")->group(ga);

  app.add_option("--gamma", f.gamma, "cost exponent")->group(cost);
  app.add_option("--rho", f.rho, "budget fraction of total cost")->group(cost);
  app.add_option("--lambdas", f.lambdas, "kind cost factors O,P,D,A")->expected(4)->delimiter(',')->group(cost);
  app.add_option("--alpha", f.alpha, "weight of kill-chain loss in the damage ratio")->group(cost);

  app.add_option("--seed", f.seed, "master seed")->group(run);
  app.add_option("--replicates", f.replicates, "replicates per sweep point")->group(run);
  app.add_option("--max-retries", f.max_retries, "regenerations of a network without kill chains")->group(run);
  app.add_option("--l-range", f.l_range, "attack sizes: from:to[:step] or a comma list")->group(run);
  app.add_option("--betas", f.betas, "beta-sweep grid")->delimiter(',')->group(run);
  app.add_option("--ns", f.ns, "size-sweep totals")->delimiter(',')->group(run);
  app.add_option("--gammas", f.gammas, "attack-law gamma grid")->delimiter(',')->group(run);
  app.add_option("--rhos", f.rhos, "attack-law rho grid")->delimiter(',')->group(run);
  app.add_option("--gens", f.gens, "runtime generation grid")->delimiter(',')->group(run);
  app.add_flag("--no-networks", f.no_networks, "skip networks/*.txt")->group(run);
  app.add_flag("--plots", f.plots, "write plots/*.svg")->group(run);
  app.add_flag("--quiet", f.quiet, "no progress on stderr")->group(run);
  app.add_option("--out", f.out, "output directory")->group(run);

  // A repeated scalar flag overrides the earlier one (and the config file).
  for (auto* opt : app.get_options())
    if (opt->get_items_expected_max() == 1) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

std::vector<std::size_t> parse_l_range(const std::string& text) {
  auto to_size = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParameterError("bad --l-range value '" + text + "'");
    }
  };
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    detail::require(parts.size() == 2 || parts.size() == 3, "--l-range wants from:to or from:to:step");
    const auto step = parts.size() == 3 ? to_size(parts[2]) : 1;
    detail::require(step >= 1, "--l-range step must be positive");
    return l_sequence(to_size(parts[0]), to_size(parts[1]), step);
  }
  std::vector<std::size_t> out;
  for (const auto& p : split(text, ',')) out.push_back(to_size(p));
  return out;
}

template <class T, class U>
void set_if(const std::optional<T>& v, U& target) {
  if (v) target = *v;
}

ExperimentSpec build_spec(const Flags& f, ExperimentFamily family) {
  auto s = default_spec(family);
  if (f.family) s.network.family = parse_family(*f.family);
  if (!f.sizes.empty()) std::copy_n(f.sizes.begin(), 4, s.network.sizes.begin());
  if (!f.er_probs.empty()) std::copy_n(f.er_probs.begin(), 4, s.network.er_probs.begin());
  set_if(f.ba_m0, s.network.ba_m0);
  set_if(f.ba_m, s.network.ba_m);
  set_if(f.goh_beta, s.network.goh_beta);
  set_if(f.goh_k_mean, s.network.goh_k_mean);
  set_if(f.inter_prob, s.network.inter_prob);

  set_if(f.n_pop, s.ga.n_pop);
  set_if(f.gen, s.ga.gen);
  set_if(f.p_c, s.ga.p_c);
  set_if(f.p_m, s.ga.p_m);
  if (f.n_seeded) s.ga.n_seeded = *f.n_seeded;
  set_if(f.penalty, s.ga.penalty);
  if (f.mode) {
    if (*f.mode == "fixed-l" || *f.mode == "fixed")
      s.ga.mode = GaMode::FixedL;
    else if (*f.mode == "budget")
      s.ga.mode = GaMode::BudgetOnly;
    else
      throw ParameterError("unknown --mode '" + *f.mode + "' (fixed-l or budget)");
  }
  set_if(f.crossover_loc_max, s.ga.crossover_loc_max);
  set_if(f.mutation_loc_max, s.ga.mutation_loc_max);
  set_if(f.sigma, s.ga.potential.sigma);
  set_if(f.potential_cutoff, s.ga.potential.cutoff);

  set_if(f.gamma, s.gamma);
  set_if(f.rho, s.rho);
  if (!f.lambdas.empty()) std::copy_n(f.lambdas.begin(), 4, s.lambdas.begin());
  set_if(f.alpha, s.damage.alpha);

  s.seed = f.seed;
  set_if(f.replicates, s.replicates);
  set_if(f.max_retries, s.max_retries);
  if (f.l_range) s.l_range = parse_l_range(*f.l_range);
  if (!f.betas.empty()) s.betas = f.betas;
  if (!f.ns.empty()) s.sizes = f.ns;
  if (!f.gammas.empty()) s.gammas = f.gammas;
  if (!f.rhos.empty()) s.rhos = f.rhos;
  if (!f.gens.empty()) s.gens = f.gens;
  s.keep_networks = !f.no_networks;
  s.validate();
  return s;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw ParameterError("cannot write " + path.string());
  return os;
}

CombatNetwork load_network(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot read network file " + path);
  return read_network(is);
}

// A network file when given, else the replicate-0 network of the experiment
// harness (or a single draw with --network-seed).
CombatNetwork obtain_network(const Flags& f, const ExperimentSpec& spec, const std::optional<std::string>& file) {
  if (file) return load_network(*file);
  if (f.network_seed) {
    auto cfg = spec.network;
    cfg.seed = *f.network_seed;
    return assemble_combat_network(cfg);
  }
  return detail::make_instance(spec, spec.network, spec.gamma, spec.rho, 0).net;
}

std::vector<std::size_t> parse_nodes(const std::string& text, std::size_t n) {
  std::vector<std::size_t> nodes;
  for (auto& tok : split(text, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      nodes.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError("bad node index '" + tok + "' in --attack");
    }
  }
  for (auto v : nodes) detail::require(v < n, "attacked node " + std::to_string(v) + " is out of range");
  return nodes;
}

void write_single_result(const fs::path& dir, const std::string& algorithm, const ExperimentSpec& spec,
                         std::size_t n, std::size_t L, const DamageReport& rep) {
  ResultTable t;
  ResultRow base;
  base.experiment = "single";
  base.algorithm = algorithm;
  base.network = spec.network.family;
  base.n = n;
  base.gamma = spec.gamma;
  base.rho = spec.rho;
  base.L = L;
  for (auto [metric, value] : {std::pair<const char*, double>{"r", rep.r},
                               {"s_huge", static_cast<double>(rep.s_huge)},
                               {"s_links", static_cast<double>(rep.s_links)},
                               {"total_cost", rep.total_cost}}) {
    auto row = base;
    row.metric = metric;
    row.value = value;
    t.add(row);
  }
  auto os = open_out(dir / "results.csv");
  write_results_csv(os, t);
  auto rs = open_out(dir / "report.csv");
  rs << kDamageReportHeader << '\n' << to_csv_row(rep) << '\n';
}

int cmd_generate(const Flags& f) {
  const auto spec = build_spec(f, ExperimentFamily::Compare);
  const auto net = obtain_network(f, spec, std::nullopt);
  const auto costs = make_cost_model(net, spec.gamma, spec.rho, spec.lambdas);
  const fs::path dir(f.out);
  auto ns = open_out(dir / "networks" / "network.txt");
  write_network(ns, net);
  auto cs = open_out(dir / "costs.csv");
  write_costs_csv(cs, net, costs);
  for (auto kind : kAllCentralities) {
    auto hs = open_out(dir / ("centrality_" + to_string(kind) + ".csv"));
    write_centrality_csv(hs, net, compute_centrality(net, kind, spec.ga.potential));
  }
  std::cout << "n " << net.size() << "\nedges " << net.edges().size() << "\nc_max " << format_number(costs.c_max)
            << '\n';
  return 0;
}

int cmd_evaluate(const Flags& f, const std::string& network_file, const std::string& attack) {
  const auto spec = build_spec(f, ExperimentFamily::Compare);
  const auto net = load_network(network_file);
  const auto costs = make_cost_model(net, spec.gamma, spec.rho, spec.lambdas);
  const auto nodes = parse_nodes(attack, net.size());
  const auto rep = evaluate_attack(net, encode(net, nodes), costs, spec.damage);
  std::cout << kDamageReportHeader << '\n' << to_csv_row(rep) << '\n';
  return rep.feasible ? 0 : 3;
}

// Sum of the L cheapest costs; more than the budget means no feasible set.
void require_feasible(const CostModel& costs, std::size_t L) {
  auto c = costs.costs;
  detail::require(L <= c.size(), "damage intensity L exceeds the node count");
  std::partial_sort(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(L), c.end());
  const double cheapest = std::accumulate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(L), 0.0);
  if (!costs.within_budget(cheapest))
    throw InfeasibleError("no " + std::to_string(L) + "-node attack fits the budget " +
                          format_number(costs.c_max));
}

int cmd_optimize(const Flags& f, const std::optional<std::string>& network_file, std::optional<std::size_t> L) {
  const auto spec = build_spec(f, ExperimentFamily::Compare);
  const auto net = obtain_network(f, spec, network_file);
  const auto costs = make_cost_model(net, spec.gamma, spec.rho, spec.lambdas);
  auto ga = spec.ga;
  const fs::path dir(f.out);
  std::vector<std::size_t> nodes;
  DamageReport rep;
  std::vector<double> history;
  double seconds = 0.0;
  if (ga.mode == GaMode::FixedL) {
    detail::require(L.has_value(), "--L is required in fixed-l mode");
    require_feasible(costs, *L);
    ga.seed = f.ga_seed.value_or(derive_seed(spec.seed, {stream::kOptimizer, 0, *L}));
    const auto res = run_ipga(net, costs, spec.damage, *L, ga);
    nodes = res.nodes;
    rep = res.report;
    history = res.history;
    seconds = res.seconds;
  } else {
    ga.seed = f.ga_seed.value_or(derive_seed(spec.seed, {stream::kOptimizer, 0}));
    const auto res = run_ipga_budget_mode(net, costs, spec.damage, ga);
    nodes = res.nodes;
    rep = res.report;
    history = res.history;
    seconds = res.seconds;
  }
  {
    auto rs = open_out(dir / "run.txt");
    write_run_record(rs, nodes, rep, costs.c_max, ga.gen, seconds);
    auto hs = open_out(dir / "history.csv");
    write_history_csv(hs, history);
    auto ns = open_out(dir / "networks" / "network.txt");
    write_network(ns, net);
    write_single_result(dir, "ipga", spec, net.size(), nodes.size(), rep);
  }
  write_run_record(std::cout, nodes, rep, costs.c_max, ga.gen, seconds);
  if (!rep.feasible) {
    std::cerr << "error: optimizer found no attack within the budget\n";
    return 3;
  }
  return 0;
}

int cmd_baseline(const Flags& f, const std::optional<std::string>& network_file, std::size_t L,
                 const std::string& indicator) {
  const auto spec = build_spec(f, ExperimentFamily::Compare);
  const auto kind = parse_centrality(indicator);
  const auto net = obtain_network(f, spec, network_file);
  const auto costs = make_cost_model(net, spec.gamma, spec.rho, spec.lambdas);
  const auto nodes = baseline_select(compute_centrality(net, kind, spec.ga.potential), costs, L);
  const auto rep = evaluate_attack(net, encode(net, nodes), costs, spec.damage);
  const fs::path dir(f.out);
  {
    auto rs = open_out(dir / "run.txt");
    write_run_record(rs, nodes, rep, costs.c_max, 0, 0.0);
    auto ns = open_out(dir / "networks" / "network.txt");
    write_network(ns, net);
    write_single_result(dir, to_string(kind), spec, net.size(), L, rep);
  }
  write_run_record(std::cout, nodes, rep, costs.c_max, 0, 0.0);
  return 0;
}

void write_svg(const fs::path& path, const std::string& title, const std::string& xlabel, const std::string& ylabel,
               const std::vector<Series>& series) {
  auto os = open_out(path);
  write_line_chart(os, title, xlabel, ylabel, series);
}

std::string point_label(const SummaryRow& s) {
  std::string label = to_string(s.key.network) + "_n" + std::to_string(s.key.n);
  if (s.key.beta) label += "_beta" + format_number(*s.key.beta);
  return label;
}

// Mean r against L, one chart per network point, one series per algorithm.
void plot_r_vs_l(const fs::path& dir, const std::string& experiment, const std::vector<SummaryRow>& summary) {
  std::map<std::string, std::map<std::string, Series>> charts;
  std::vector<std::string> order;
  for (const auto& s : summary) {
    if (s.key.metric != "r" || !s.key.L || !s.mean) continue;
    const auto label = point_label(s);
    if (!charts.count(label)) order.push_back(label);
    auto& series = charts[label][s.key.algorithm];
    series.label = s.key.algorithm;
    series.points.emplace_back(static_cast<double>(*s.key.L), *s.mean);
  }
  for (const auto& label : order) {
    std::vector<Series> series;
    for (const auto& name : algorithm_names())
      if (charts[label].count(name)) series.push_back(charts[label][name]);
    write_svg(dir / (experiment + "_" + label + ".svg"), experiment + " " + label, "L", "mean r", series);
  }
}

void write_beta_table(std::ostream& os, const std::vector<SummaryRow>& summary) {
  os << "beta,L,mean_r,ci90\n";
  for (const auto& s : summary)
    if (s.key.algorithm == "ipga" && s.key.metric == "r" && s.key.beta && s.key.L)
      os << format_number(*s.key.beta) << ',' << *s.key.L << ',' << format_number(s.mean) << ','
         << format_number(s.ci90) << '\n';
}

int cmd_experiment(const Flags& f, const std::string& family_name) {
  const auto family = parse_experiment(family_name);
  const auto spec = build_spec(f, family);
  ProgressFn progress;
  if (!f.quiet) progress = [](const std::string& msg) { std::cerr << msg << '\n'; };
  const auto out = run_experiment(spec, progress);
  const auto summary = out.table.summarize();
  const auto name = to_string(family);
  const fs::path dir(f.out);

  {
    auto os = open_out(dir / "results.csv");
    write_results_csv(os, out.table);
  }
  {
    auto os = open_out(dir / "summary.csv");
    write_summary_csv(os, summary);
  }
  for (const auto& [file, net] : out.networks) {
    auto os = open_out(dir / "networks" / (file + ".txt"));
    write_network(os, net);
  }
  const fs::path plots = dir / "plots";
  switch (family) {
    case ExperimentFamily::Compare:
    case ExperimentFamily::BetaSweep:
    case ExperimentFamily::SizeSweep: {
      auto os = open_out(dir / "gap.csv");
      write_gap_csv(os, gap_table(summary));
      if (family == ExperimentFamily::BetaSweep) {
        auto bs = open_out(dir / "ipga_by_beta.csv");
        write_beta_table(bs, summary);
      }
      if (f.plots) plot_r_vs_l(plots, name, summary);
      break;
    }
    case ExperimentFamily::AttackLaw: {
      const auto cells = attack_law_table(summary);
      auto os = open_out(dir / "attack_law.csv");
      write_attack_law_csv(os, cells);
      if (f.plots) {
        std::map<double, Series> by_gamma;
        for (const auto& c : cells) {
          if (!c.d_hat) continue;
          by_gamma[c.gamma].label = "gamma " + format_number(c.gamma);
          by_gamma[c.gamma].points.emplace_back(c.rho, *c.d_hat);
        }
        std::vector<Series> series;
        for (auto& [g, s] : by_gamma) series.push_back(s);
        write_svg(plots / "attack_law_degree.svg", "mean attacked degree", "rho", "d_hat", series);
      }
      break;
    }
    case ExperimentFamily::Convergence: {
      auto os = open_out(dir / "history.csv");
      write_mean_history_csv(os, out.histories);
      auto rs = open_out(dir / "history_replicates.csv");
      write_replicate_histories_csv(rs, out.histories);
      if (f.plots) {
        Series s{"mean best fitness", {}};
        const auto curve = mean_curve(out.histories);
        for (std::size_t g = 0; g < curve.size(); ++g) s.points.emplace_back(static_cast<double>(g), curve[g]);
        write_svg(plots / "convergence.svg", "convergence", "generation", "best fitness", {s});
      }
      break;
    }
    case ExperimentFamily::Runtime: {
      auto os = open_out(dir / "timing.csv");
      write_timing_csv(os, out.timing);
      if (f.plots) {
        std::map<std::size_t, std::map<std::size_t, std::vector<double>>> cells;
        for (const auto& t : out.timing) cells[t.gen][t.L].push_back(t.seconds);
        std::vector<Series> series;
        for (const auto& [gen, by_l] : cells) {
          Series s{"gen " + std::to_string(gen), {}};
          for (const auto& [L, xs] : by_l) s.points.emplace_back(static_cast<double>(L), *aggregate(xs).mean);
          series.push_back(s);
        }
        write_svg(plots / "runtime.svg", "runtime", "L", "seconds", series);
      }
      break;
    }
  }
  std::cout << "wrote " << out.table.rows.size() << " rows to " << (dir / "results.csv").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed combat network damage modelling and attack optimization"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file supplying any long flag");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Flags flags;
  add_model_flags(app, flags);

  auto* generate = app.add_subcommand("generate", "draw a network; write it with its costs and centralities");
  generate->fallthrough();

  std::string eval_network, eval_attack;
  auto* evaluate = app.add_subcommand("evaluate", "score one attack set on a network file");
  evaluate->add_option("--network", eval_network, "network file")->required();
  evaluate->add_option("--attack", eval_attack, "comma-separated node indices")->required();
  evaluate->fallthrough();

  std::optional<std::string> opt_network;
  std::optional<std::size_t> opt_l;
  auto* optimize = app.add_subcommand("optimize", "run the genetic optimizer on one network");
  optimize->add_option("--network", opt_network, "network file (default: generated)");
  optimize->add_option("--L", opt_l, "damage intensity (fixed-l mode)");
  optimize->fallthrough();

  std::optional<std::string> base_network;
  std::size_t base_l = 0;
  std::string indicator = "degree";
  auto* baseline = app.add_subcommand("baseline", "pick L nodes by one centrality under the budget");
  baseline->add_option("--network", base_network, "network file (default: generated)");
  baseline->add_option("--L", base_l, "damage intensity")->required();
  baseline->add_option("--indicator", indicator, "degree, betweenness, eigenvector, closeness or potential");
  baseline->fallthrough();

  std::string family;
  auto* experiment = app.add_subcommand("experiment", "run a Monte Carlo experiment family");
  experiment
      ->add_option("family", family,
                   "compare-algorithms, beta-sweep, size-sweep, attack-law, convergence or runtime")
      ->required();
  experiment->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) return cmd_generate(flags);
    if (*evaluate) return cmd_evaluate(flags, eval_network, eval_attack);
    if (*optimize) return cmd_optimize(flags, opt_network, opt_l);
    if (*baseline) return cmd_baseline(flags, base_network, base_l, indicator);
    if (*experiment) return cmd_experiment(flags, family);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
