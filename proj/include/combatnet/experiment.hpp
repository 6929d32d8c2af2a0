#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combatnet/baseline.hpp"
#include "combatnet/centrality.hpp"
#include "combatnet/cost.hpp"
#include "combatnet/csv.hpp"
#include "combatnet/error.hpp"
#include "combatnet/generators.hpp"
#include "combatnet/ipga.hpp"
#include "combatnet/metrics.hpp"
#include "combatnet/random.hpp"

namespace combatnet {

enum class ExperimentFamily { Compare, BetaSweep, SizeSweep, AttackLaw, Convergence, Runtime };

inline std::string to_string(ExperimentFamily f) {
  switch (f) {
    case ExperimentFamily::Compare: return "compare-algorithms";
    case ExperimentFamily::BetaSweep: return "beta-sweep";
    case ExperimentFamily::SizeSweep: return "size-sweep";
    case ExperimentFamily::AttackLaw: return "attack-law";
    case ExperimentFamily::Convergence: return "convergence";
    case ExperimentFamily::Runtime: return "runtime";
  }
  return "?";
}

inline ExperimentFamily parse_experiment(std::string_view s) {
  if (s == "compare-algorithms" || s == "compare") return ExperimentFamily::Compare;
  if (s == "beta-sweep" || s == "beta") return ExperimentFamily::BetaSweep;
  if (s == "size-sweep" || s == "size") return ExperimentFamily::SizeSweep;
  if (s == "attack-law") return ExperimentFamily::AttackLaw;
  if (s == "convergence") return ExperimentFamily::Convergence;
  if (s == "runtime") return ExperimentFamily::Runtime;
  throw ParameterError("unknown experiment family '" + std::string(s) + "'");
}

inline std::vector<std::size_t> l_sequence(std::size_t from, std::size_t to, std::size_t step = 1) {
  std::vector<std::size_t> out;
  for (std::size_t l = from; l <= to; l += step) out.push_back(l);
  return out;
}

inline std::vector<double> grid(double from, double to, double step) {
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::llround((to - from) / step));
  for (std::size_t i = 0; i <= count; ++i) out.push_back(from + step * static_cast<double>(i));
  return out;
}

struct ExperimentSpec {
  ExperimentFamily family = ExperimentFamily::Compare;
  GeneratorConfig network;
  DamageConfig damage;
  double gamma = 1.0;
  double rho = 0.3;
  LambdaTable lambdas = kDefaultLambdas;
  GAConfig ga;
  std::vector<std::size_t> l_range;
  std::size_t replicates = 20;
  std::uint64_t seed = 1;
  std::size_t max_retries = 20;  // regenerations of a degenerate network
  std::vector<double> betas = {2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
  std::vector<std::size_t> sizes = {150, 70, 50};
  std::vector<double> gammas = grid(0.0, 2.0, 0.25);
  std::vector<double> rhos = grid(0.1, 0.9, 0.1);
  std::vector<std::size_t> gens = {100, 300, 500};
  bool keep_networks = true;

  void validate() const {
    detail::require(replicates >= 1, "at least one replicate is required");
    const bool sweeps_l = family != ExperimentFamily::AttackLaw;
    detail::require(!sweeps_l || !l_range.empty(), "damage intensity range is empty");
    detail::require(family != ExperimentFamily::BetaSweep || !betas.empty(), "beta grid is empty");
    detail::require(family != ExperimentFamily::SizeSweep || !sizes.empty(), "size grid is empty");
    detail::require(family != ExperimentFamily::AttackLaw || (!gammas.empty() && !rhos.empty()),
                    "gamma/rho grid is empty");
    detail::require(family != ExperimentFamily::Runtime || !gens.empty(), "generation grid is empty");
    for (auto g : gammas) detail::require(g >= 0.0, "cost exponent must be non-negative");
    for (auto r : rhos) detail::require(r >= 0.0 && r <= 1.0, "budget ratio outside [0,1]");
    detail::require(gamma >= 0.0, "cost exponent must be non-negative");
    detail::require(rho >= 0.0 && rho <= 1.0, "budget ratio outside [0,1]");
    for (auto l : lambdas) detail::require(l > 0.0, "kind cost factors must be positive");
    network.validate();
    damage.validate();
    ga.validate();
  }
};

// Family defaults: Goh networks, L = 1..20 for the comparison studies,
// L = 18 for convergence, even L = 2..20 for runtime.
inline ExperimentSpec default_spec(ExperimentFamily family) {
  ExperimentSpec s;
  s.family = family;
  s.network.family = NetworkFamily::GOH;
  switch (family) {
    case ExperimentFamily::Convergence: s.l_range = {18}; break;
    case ExperimentFamily::Runtime: s.l_range = l_sequence(2, 20, 2); break;
    case ExperimentFamily::AttackLaw: s.ga.mode = GaMode::BudgetOnly; break;
    default: s.l_range = l_sequence(1, 20); break;
  }
  return s;
}

// One measurement in long format. Empty optionals print as blank cells,
// except `value`, which prints "null" when undefined.
struct ResultRow {
  std::string experiment;
  std::size_t replicate = 0;
  std::string algorithm;
  NetworkFamily network = NetworkFamily::GOH;
  std::size_t n = 0;
  std::optional<double> beta;
  double gamma = 0.0;
  double rho = 0.0;
  std::optional<std::size_t> L;
  std::optional<std::size_t> gen;
  std::string metric;
  std::optional<double> value;
};

struct SummaryRow {
  ResultRow key;  // replicate and value unused
  std::size_t k = 0;
  std::optional<double> mean;
  double ci90 = 0.0;
  double variance = 0.0;
};

inline constexpr double kZ90 = 1.645;

struct Aggregate {
  std::size_t k = 0;
  std::optional<double> mean;
  double ci90 = 0.0;
  double variance = 0.0;
};

// Mean, sample variance and 90% normal half-width over the defined samples.
inline Aggregate aggregate(const std::vector<double>& xs) {
  Aggregate a;
  a.k = xs.size();
  if (xs.empty()) return a;
  double sum = 0.0;
  for (auto x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  a.mean = mean;
  if (xs.size() < 2) return a;
  double ss = 0.0;
  for (auto x : xs) ss += (x - mean) * (x - mean);
  a.variance = ss / static_cast<double>(xs.size() - 1);
  a.ci90 = kZ90 * std::sqrt(a.variance) / std::sqrt(static_cast<double>(xs.size()));
  return a;
}

namespace detail {

inline std::string opt_cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }
inline std::string opt_cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); }

inline std::string key_cells(const ResultRow& r) {
  return r.experiment + ',' + r.algorithm + ',' + to_string(r.network) + ',' + std::to_string(r.n) + ',' +
         opt_cell(r.beta) + ',' + format_number(r.gamma) + ',' + format_number(r.rho) + ',' + opt_cell(r.L) + ',' +
         opt_cell(r.gen) + ',' + r.metric;
}

}  // namespace detail

struct ResultTable {
  std::vector<ResultRow> rows;

  void add(ResultRow row) { rows.push_back(std::move(row)); }

  // Groups by every column except replicate and value, in first-seen order.
  std::vector<SummaryRow> summarize() const {
    std::vector<SummaryRow> out;
    std::vector<std::vector<double>> samples;
    std::map<std::string, std::size_t> index;
    for (const auto& r : rows) {
      const auto key = detail::key_cells(r);
      auto [it, fresh] = index.emplace(key, out.size());
      if (fresh) {
        out.push_back({r, 0, std::nullopt, 0.0, 0.0});
        samples.emplace_back();
      }
      if (r.value) samples[it->second].push_back(*r.value);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto a = aggregate(samples[i]);
      out[i].k = a.k;
      out[i].mean = a.mean;
      out[i].ci90 = a.ci90;
      out[i].variance = a.variance;
    }
    return out;
  }

  // Mean of one metric for rows matching `pred`; nullopt when nothing matches.
  std::optional<double> mean(const std::function<bool(const ResultRow&)>& pred) const {
    std::vector<double> xs;
    for (const auto& r : rows)
      if (r.value && pred(r)) xs.push_back(*r.value);
    return aggregate(xs).mean;
  }
};

inline constexpr std::string_view kResultsHeader = "experiment,replicate,algorithm,network,n,beta,gamma,rho,L,gen,metric,value";
inline constexpr std::string_view kSummaryHeader =
    "experiment,algorithm,network,n,beta,gamma,rho,L,gen,metric,k,mean,ci90,variance";

inline void write_results_csv(std::ostream& os, const ResultTable& t) {
  os << kResultsHeader << '\n';
  for (const auto& r : t.rows) {
    os << r.experiment << ',' << r.replicate << ',' << r.algorithm << ',' << to_string(r.network) << ',' << r.n
       << ',' << detail::opt_cell(r.beta) << ',' << format_number(r.gamma) << ',' << format_number(r.rho) << ','
       << detail::opt_cell(r.L) << ',' << detail::opt_cell(r.gen) << ',' << r.metric << ','
       << format_number(r.value) << '\n';
  }
}

inline void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << kSummaryHeader << '\n';
  for (const auto& s : rows) {
    os << detail::key_cells(s.key) << ',' << s.k << ',' << format_number(s.mean) << ',' << format_number(s.ci90)
       << ',' << format_number(s.variance) << '\n';
  }
}

struct TimingRow {
  std::size_t L = 0;
  std::size_t gen = 0;
  std::size_t replicate = 0;
  double seconds = 0.0;
};

struct ExperimentOutput {
  ResultTable table;
  std::vector<std::vector<double>> histories;  // convergence: one curve per replicate
  std::vector<TimingRow> timing;               // runtime: wall-clock, not reproducible
  std::vector<std::pair<std::string, CombatNetwork>> networks;
};

using ProgressFn = std::function<void(const std::string&)>;

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"ipga",      "degree",    "betweenness",
                                                 "eigenvector", "closeness", "potential"};
  return names;
}

namespace detail {

struct Instance {
  CombatNetwork net;
  CostModel costs;
};

// Network for one replicate. The seed depends on the replicate and retry
// counter only, so every sweep point sees the same random stream.
inline Instance make_instance(const ExperimentSpec& spec, const GeneratorConfig& gen, double gamma, double rho,
                              std::size_t rep) {
  for (std::size_t attempt = 0; attempt <= spec.max_retries; ++attempt) {
    Rng rng(derive_seed(spec.seed, {stream::kNetwork, rep, attempt}));
    auto net = assemble_combat_network(gen, rng);
    auto costs = make_cost_model(net, gamma, rho, spec.lambdas);
    try {
      DamageEvaluator probe(net, costs, spec.damage);
      return {std::move(net), std::move(costs)};
    } catch (const DegenerateNetworkError&) {
    }
  }
  throw DegenerateNetworkError("no network with kill chains after " + std::to_string(spec.max_retries + 1) +
                               " attempts");
}

inline std::string network_name(const std::string& experiment, const GeneratorConfig& gen, std::size_t rep) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "rep%03zu", rep);
  std::string name = experiment + '_' + to_string(gen.family) + "_n" + std::to_string(gen.total());
  if (gen.family == NetworkFamily::GOH) name += "_beta" + format_number(gen.goh_beta);
  return name + '_' + buf;
}

inline ResultRow row_base(const std::string& experiment, const GeneratorConfig& gen, double gamma, double rho,
                          std::size_t rep) {
  ResultRow r;
  r.experiment = experiment;
  r.replicate = rep;
  r.network = gen.family;
  r.n = gen.total();
  if (gen.family == NetworkFamily::GOH) r.beta = gen.goh_beta;
  r.gamma = gamma;
  r.rho = rho;
  return r;
}

inline std::optional<double> feasible_r(const DamageReport& rep) {
  return rep.feasible ? std::optional<double>(rep.r) : std::nullopt;
}

// The comparison pipeline for one network configuration: every replicate, every
// L, IPGA plus the five indicator baselines.
inline void compare_point(const ExperimentSpec& spec, const std::string& experiment, const GeneratorConfig& gen,
                          ExperimentOutput& out, const ProgressFn& progress) {
  const auto& names = algorithm_names();
  for (std::size_t rep = 0; rep < spec.replicates; ++rep) {
    auto inst = make_instance(spec, gen, spec.gamma, spec.rho, rep);
    if (spec.keep_networks) out.networks.emplace_back(network_name(experiment, gen, rep), inst.net);
    const auto priors = compute_priors(inst.net, spec.ga.potential);
    std::vector<CentralityVector> indicators;
    for (auto kind : kAllCentralities) indicators.push_back(compute_centrality(inst.net, kind, spec.ga.potential));
    DamageEvaluator ev(inst.net, inst.costs, spec.damage);
    for (auto L : spec.l_range) {
      detail::require(L <= inst.net.size(), "damage intensity L exceeds the node count");
      GAConfig ga = spec.ga;
      ga.seed = derive_seed(spec.seed, {stream::kOptimizer, rep, L});
      std::vector<DamageReport> reports;
      reports.push_back(run_ipga(inst.net, inst.costs, spec.damage, L, ga, priors).report);
      for (const auto& h : indicators) {
        try {
          reports.push_back(ev.evaluate(encode(inst.net, baseline_select(h, inst.costs, L))));
        } catch (const InfeasibleError&) {
          reports.push_back(DamageReport{0, 0, 0.0, 0.0, false});
        }
      }
      for (std::size_t a = 0; a < reports.size(); ++a) {
        auto row = row_base(experiment, gen, spec.gamma, spec.rho, rep);
        row.algorithm = names[a];
        row.L = L;
        row.metric = "r";
        row.value = feasible_r(reports[a]);
        out.table.add(row);
      }
    }
    if (progress) progress(experiment + ": replicate " + std::to_string(rep + 1) + "/" + std::to_string(spec.replicates));
  }
}

}  // namespace detail

inline ExperimentOutput run_compare(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  spec.validate();
  ExperimentOutput out;
  detail::compare_point(spec, to_string(ExperimentFamily::Compare), spec.network, out, progress);
  return out;
}

inline ExperimentOutput run_beta_sweep(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  spec.validate();
  ExperimentOutput out;
  for (auto beta : spec.betas) {
    GeneratorConfig gen = spec.network;
    gen.family = NetworkFamily::GOH;
    gen.goh_beta = beta;
    detail::compare_point(spec, to_string(ExperimentFamily::BetaSweep), gen, out, progress);
  }
  return out;
}

inline ExperimentOutput run_size_sweep(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  spec.validate();
  ExperimentOutput out;
  for (auto n : spec.sizes) {
    GeneratorConfig gen = spec.network;
    gen.sizes = scale_sizes(spec.network.sizes, n);
    detail::compare_point(spec, to_string(ExperimentFamily::SizeSweep), gen, out, progress);
  }
  return out;
}

// Budget-only optimization over the gamma x rho grid. Each replicate network
// is shared by all grid cells. Per run: mean degree of the attacked set
// (null when empty), realized L and r.
inline ExperimentOutput run_attack_law(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  spec.validate();
  ExperimentOutput out;
  const std::string experiment = to_string(ExperimentFamily::AttackLaw);
  for (std::size_t rep = 0; rep < spec.replicates; ++rep) {
    auto base = detail::make_instance(spec, spec.network, 1.0, 0.0, rep);
    if (spec.keep_networks) out.networks.emplace_back(detail::network_name(experiment, spec.network, rep), base.net);
    const auto priors = compute_priors(base.net, spec.ga.potential);
    GAConfig ga = spec.ga;
    ga.mode = GaMode::BudgetOnly;
    ga.seed = derive_seed(spec.seed, {stream::kOptimizer, rep});
    for (auto gamma : spec.gammas) {
      for (auto rho : spec.rhos) {
        const auto costs = make_cost_model(base.net, gamma, rho, spec.lambdas);
        const auto res = run_ipga_budget_mode(base.net, costs, spec.damage, ga, priors);
        std::optional<double> d_hat;
        if (!res.nodes.empty()) {
          double s = 0.0;
          for (auto v : res.nodes) s += static_cast<double>(base.net.degree(v));
          d_hat = s / static_cast<double>(res.nodes.size());
        }
        auto row = detail::row_base(experiment, spec.network, gamma, rho, rep);
        row.algorithm = "ipga";
        row.metric = "d_hat";
        row.value = d_hat;
        out.table.add(row);
        row.metric = "L";
        row.value = static_cast<double>(res.realized_l);
        out.table.add(row);
        row.metric = "r";
        row.value = detail::feasible_r(res.report);
        out.table.add(row);
      }
    }
    if (progress) progress(experiment + ": replicate " + std::to_string(rep + 1) + "/" + std::to_string(spec.replicates));
  }
  return out;
}

// Best-fitness history per replicate at the first L of the range.
inline ExperimentOutput run_convergence(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  spec.validate();
  ExperimentOutput out;
  const std::string experiment = to_string(ExperimentFamily::Convergence);
  const std::size_t L = spec.l_range.front();
  for (std::size_t rep = 0; rep < spec.replicates; ++rep) {
    auto inst = detail::make_instance(spec, spec.network, spec.gamma, spec.rho, rep);
    if (spec.keep_networks) out.networks.emplace_back(detail::network_name(experiment, spec.network, rep), inst.net);
    GAConfig ga = spec.ga;
    ga.seed = derive_seed(spec.seed, {stream::kOptimizer, rep, L});
    const auto res = run_ipga(inst.net, inst.costs, spec.damage, L, ga);
    auto row = detail::row_base(experiment, spec.network, spec.gamma, spec.rho, rep);
    row.algorithm = "ipga";
    row.L = L;
    row.gen = ga.gen;
    row.metric = "r";
    row.value = detail::feasible_r(res.report);
    out.table.add(row);
    out.histories.push_back(res.history);
    if (progress) progress(experiment + ": replicate " + std::to_string(rep + 1) + "/" + std::to_string(spec.replicates));
  }
  return out;
}

// Pointwise mean over equally long curves.
inline std::vector<double> mean_curve(const std::vector<std::vector<double>>& curves) {
  if (curves.empty()) return {};
  std::vector<double> m(curves.front().size(), 0.0);
  for (const auto& c : curves)
    for (std::size_t g = 0; g < m.size(); ++g) m[g] += c[g];
  for (auto& v : m) v /= static_cast<double>(curves.size());
  return m;
}

// Wall time of run_ipga per (L, gen). results.csv keeps the reproducible r
// values; the times go to the separate timing table.
inline ExperimentOutput run_runtime(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  spec.validate();
  ExperimentOutput out;
  const std::string experiment = to_string(ExperimentFamily::Runtime);
  for (std::size_t rep = 0; rep < spec.replicates; ++rep) {
    auto inst = detail::make_instance(spec, spec.network, spec.gamma, spec.rho, rep);
    if (spec.keep_networks) out.networks.emplace_back(detail::network_name(experiment, spec.network, rep), inst.net);
    const auto priors = compute_priors(inst.net, spec.ga.potential);
    for (auto gen : spec.gens) {
      for (auto L : spec.l_range) {
        detail::require(L <= inst.net.size(), "damage intensity L exceeds the node count");
        GAConfig ga = spec.ga;
        ga.gen = gen;
        ga.seed = derive_seed(spec.seed, {stream::kTiming, rep, L, gen});
        const auto res = run_ipga(inst.net, inst.costs, spec.damage, L, ga, priors);
        auto row = detail::row_base(experiment, spec.network, spec.gamma, spec.rho, rep);
        row.algorithm = "ipga";
        row.L = L;
        row.gen = gen;
        row.metric = "r";
        row.value = detail::feasible_r(res.report);
        out.table.add(row);
        out.timing.push_back({L, gen, rep, res.seconds});
      }
    }
    if (progress) progress(experiment + ": replicate " + std::to_string(rep + 1) + "/" + std::to_string(spec.replicates));
  }
  return out;
}

inline ExperimentOutput run_experiment(const ExperimentSpec& spec, const ProgressFn& progress = {}) {
  switch (spec.family) {
    case ExperimentFamily::Compare: return run_compare(spec, progress);
    case ExperimentFamily::BetaSweep: return run_beta_sweep(spec, progress);
    case ExperimentFamily::SizeSweep: return run_size_sweep(spec, progress);
    case ExperimentFamily::AttackLaw: return run_attack_law(spec, progress);
    case ExperimentFamily::Convergence: return run_convergence(spec, progress);
    case ExperimentFamily::Runtime: return run_runtime(spec, progress);
  }
  throw ParameterError("unknown experiment family");
}

// Mean r(ipga) minus the largest baseline mean r, per (n, L). Rows with no
// feasible baseline are skipped.
struct GapRow {
  std::size_t n = 0;
  std::size_t L = 0;
  double ipga = 0.0;
  std::string best_baseline;
  double baseline = 0.0;
  double gap() const { return ipga - baseline; }
};

inline std::vector<GapRow> gap_table(const std::vector<SummaryRow>& summary) {
  std::map<std::pair<std::size_t, std::size_t>, GapRow> cells;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::map<std::pair<std::size_t, std::size_t>, bool> has_ipga, has_base;
  for (const auto& s : summary) {
    if (s.key.metric != "r" || !s.key.L || !s.mean) continue;
    const auto key = std::make_pair(s.key.n, *s.key.L);
    if (!cells.count(key)) {
      order.push_back(key);
      cells[key] = GapRow{key.first, key.second, 0.0, "", -1.0};
    }
    auto& g = cells[key];
    if (s.key.algorithm == "ipga") {
      g.ipga = *s.mean;
      has_ipga[key] = true;
    } else if (*s.mean > g.baseline) {
      g.baseline = *s.mean;
      g.best_baseline = s.key.algorithm;
      has_base[key] = true;
    }
  }
  std::vector<GapRow> out;
  for (const auto& key : order)
    if (has_ipga[key] && has_base[key]) out.push_back(cells[key]);
  return out;
}

inline void write_gap_csv(std::ostream& os, const std::vector<GapRow>& rows) {
  os << "n,L,ipga,best_baseline,baseline,gap\n";
  for (const auto& g : rows)
    os << g.n << ',' << g.L << ',' << format_number(g.ipga) << ',' << g.best_baseline << ','
       << format_number(g.baseline) << ',' << format_number(g.gap()) << '\n';
}

// Attack-law grid: mean attacked degree, mean realized L, Var(L) per cell.
struct AttackLawCell {
  double gamma = 0.0;
  double rho = 0.0;
  std::optional<double> d_hat;
  std::optional<double> mean_l;
  double var_l = 0.0;
};

inline std::vector<AttackLawCell> attack_law_table(const std::vector<SummaryRow>& summary) {
  std::vector<AttackLawCell> out;
  std::map<std::pair<double, double>, std::size_t> index;
  for (const auto& s : summary) {
    const auto key = std::make_pair(s.key.gamma, s.key.rho);
    auto [it, fresh] = index.emplace(key, out.size());
    if (fresh) out.push_back({key.first, key.second, std::nullopt, std::nullopt, 0.0});
    auto& cell = out[it->second];
    if (s.key.metric == "d_hat") cell.d_hat = s.mean;
    if (s.key.metric == "L") {
      cell.mean_l = s.mean;
      cell.var_l = s.variance;
    }
  }
  return out;
}

inline void write_attack_law_csv(std::ostream& os, const std::vector<AttackLawCell>& cells) {
  os << "gamma,rho,d_hat,mean_L,var_L\n";
  for (const auto& c : cells)
    os << format_number(c.gamma) << ',' << format_number(c.rho) << ',' << format_number(c.d_hat) << ','
       << format_number(c.mean_l) << ',' << format_number(c.var_l) << '\n';
}

inline void write_mean_history_csv(std::ostream& os, const std::vector<std::vector<double>>& curves) {
  write_history_csv(os, mean_curve(curves));
}

inline void write_replicate_histories_csv(std::ostream& os, const std::vector<std::vector<double>>& curves) {
  os << "replicate,generation,best_fitness\n";
  for (std::size_t r = 0; r < curves.size(); ++r)
    for (std::size_t g = 0; g < curves[r].size(); ++g) os << r << ',' << g << ',' << format_number(curves[r][g]) << '\n';
}

inline void write_timing_csv(std::ostream& os, const std::vector<TimingRow>& rows) {
  os << "L,gen,replicate,seconds\n";
  for (const auto& t : rows) os << t.L << ',' << t.gen << ',' << t.replicate << ',' << format_number(t.seconds) << '\n';
}

}  // namespace combatnet
