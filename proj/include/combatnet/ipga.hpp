#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "combatnet/centrality.hpp"
#include "combatnet/cost.hpp"
#include "combatnet/csv.hpp"
#include "combatnet/error.hpp"
#include "combatnet/metrics.hpp"
#include "combatnet/network.hpp"
#include "combatnet/random.hpp"

namespace combatnet {

// Node set -> 0/1 vector.
inline AttackVector encode(const CombatNetwork& net, std::span<const std::size_t> nodes) {
  AttackVector x(net.size());
  for (auto v : nodes) {
    detail::require(v < net.size(), "attacked node index " + std::to_string(v) + " out of range");
    x.set(v, true);
  }
  return x;
}

inline std::vector<std::size_t> decode(const CombatNetwork& net, const AttackVector& x) {
  detail::require(x.size() == net.size(), "attack vector length does not match network");
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) nodes.push_back(i);
  return nodes;
}

enum class GaMode { FixedL, BudgetOnly };

struct GAConfig {
  std::size_t n_pop = 100;
  std::size_t gen = 500;
  double p_c = 0.8;
  double p_m = 0.1;
  std::optional<std::size_t> n_seeded;  // per prior indicator; default n_pop / 10
  double penalty = -2.0;
  GaMode mode = GaMode::FixedL;
  std::uint64_t seed = 1;
  std::size_t crossover_loc_max = 0;  // 0: ceil(n / 4)
  std::size_t mutation_loc_max = 0;   // 0: max(1, L - 1)
  PotentialConfig potential;

  std::size_t seeded() const { return n_seeded.value_or(n_pop / 10); }

  void validate() const {
    detail::require(n_pop >= 2 && n_pop % 2 == 0, "population size must be even and at least 2");
    detail::require(gen >= 1, "at least one generation is required");
    detail::require(p_c >= 0.0 && p_c <= 1.0, "crossover probability outside [0,1]");
    detail::require(p_m >= 0.0 && p_m <= 1.0, "mutation probability outside [0,1]");
    detail::require(3 * seeded() <= n_pop, "seeded chromosomes exceed the population");
    detail::require(penalty < 0.0, "penalty must be negative");
    potential.validate();
  }
};

struct Population {
  std::vector<AttackVector> members;
  std::vector<double> fitness;
  std::size_t generation = 0;
  AttackVector best;
  double best_fitness = -std::numeric_limits<double>::infinity();

  std::size_t size() const { return members.size(); }

  // Keeps the first strictly better member, so ties go to the earliest found.
  void track_best() {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (fitness[i] > best_fitness) {
        best_fitness = fitness[i];
        best = members[i];
      }
    }
  }
};

// R(X) when the attack fits the budget, the penalty otherwise. Every call
// evaluates, so run time does not depend on population diversity.
class FitnessFunction {
 public:
  FitnessFunction(DamageEvaluator& evaluator, double penalty) : ev_(&evaluator), penalty_(penalty) {}

  double operator()(const AttackVector& x) { return evaluate(x); }

  double evaluate(const AttackVector& x) {
    const double spent = ev_->costs().total(x);
    if (!ev_->costs().within_budget(spent)) return penalty_;
    return damage_effect(ev_->baseline(), ev_->measure(x), ev_->config());
  }

  void evaluate_population(Population& pop) {
    pop.fitness.resize(pop.members.size());
    for (std::size_t i = 0; i < pop.members.size(); ++i) pop.fitness[i] = evaluate(pop.members[i]);
  }

  DamageEvaluator& evaluator() { return *ev_; }

 private:
  DamageEvaluator* ev_;
  double penalty_;
};

inline double fitness(DamageEvaluator& ev, const AttackVector& x, const GAConfig& ga) {
  return FitnessFunction(ev, ga.penalty).evaluate(x);
}

namespace detail {

// First `k` entries of `items` become a uniform random k-subset.
inline void partial_shuffle(std::vector<std::size_t>& items, std::size_t k, Rng& rng) {
  for (std::size_t i = 0; i < k && i + 1 < items.size(); ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(i, items.size() - 1)(rng);
    std::swap(items[i], items[j]);
  }
}

inline AttackVector random_weight_vector(std::size_t n, std::size_t weight, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  partial_shuffle(idx, weight, rng);
  AttackVector x(n);
  for (std::size_t i = 0; i < weight; ++i) x.set(idx[i], true);
  return x;
}

// Sequential draws without replacement, each proportional to the remaining
// weights; once only zero-weight nodes remain the draw is uniform over them.
inline std::vector<std::size_t> weighted_order(std::span<const double> weights, std::size_t count, Rng& rng) {
  const std::size_t n = weights.size();
  std::vector<double> w(weights.begin(), weights.end());
  std::vector<std::uint8_t> taken(n, 0);
  std::vector<std::size_t> out;
  out.reserve(count);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t step = 0; step < count; ++step) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i]) total += w[i];
    std::size_t pick = n;
    if (total > 0.0) {
      double target = unit(rng) * total;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i] || w[i] <= 0.0) continue;
        pick = i;
        target -= w[i];
        if (target < 0.0) break;
      }
    } else {
      std::size_t remaining = n - out.size();
      auto r = std::uniform_int_distribution<std::size_t>(0, remaining - 1)(rng);
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        if (r-- == 0) {
          pick = i;
          break;
        }
      }
    }
    taken[pick] = 1;
    out.push_back(pick);
  }
  return out;
}

}  // namespace detail

// Indicator vectors that guide initialization.
struct Priors {
  CentralityVector degree;
  CentralityVector betweenness;
  CentralityVector potential;
};

inline Priors compute_priors(const CombatNetwork& net, const PotentialConfig& cfg = {}) {
  return {degree_centrality(net), betweenness_centrality(net), topological_potential(net, cfg)};
}

// n_seeded chromosomes per indicator from L indicator-proportional draws
// without replacement; the rest are uniform weight-L vectors.
inline Population init_population(std::size_t n, const Priors& priors, std::size_t L, const GAConfig& ga,
                                  Rng& rng) {
  detail::require(L <= n, "damage intensity L exceeds the node count");
  ga.validate();
  Population pop;
  pop.members.reserve(ga.n_pop);
  for (const auto* h : {&priors.degree, &priors.betweenness, &priors.potential}) {
    detail::require(h->values.size() == n, "indicator length does not match network");
    for (std::size_t k = 0; k < ga.seeded(); ++k) {
      AttackVector x(n);
      for (auto v : detail::weighted_order(h->values, L, rng)) x.set(v, true);
      pop.members.push_back(std::move(x));
    }
  }
  while (pop.members.size() < ga.n_pop) pop.members.push_back(detail::random_weight_vector(n, L, rng));
  return pop;
}

// Roulette wheel on f - min(f) + 1e-6, then the best-ever chromosome replaces
// the worst drawn member.
inline Population roulette_select(const Population& pop, Rng& rng) {
  constexpr double kEpsilon = 1e-6;
  const double lo = *std::min_element(pop.fitness.begin(), pop.fitness.end());
  std::vector<double> weights(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) weights[i] = pop.fitness[i] - lo + kEpsilon;
  std::discrete_distribution<std::size_t> wheel(weights.begin(), weights.end());

  Population out;
  out.generation = pop.generation;
  out.best = pop.best;
  out.best_fitness = pop.best_fitness;
  out.members.reserve(pop.size());
  out.fitness.reserve(pop.size());
  for (std::size_t k = 0; k < pop.size(); ++k) {
    const auto i = wheel(rng);
    out.members.push_back(pop.members[i]);
    out.fitness.push_back(pop.fitness[i]);
  }
  if (pop.best.size() == 0) return out;
  const bool present = std::find(out.members.begin(), out.members.end(), pop.best) != out.members.end();
  if (!present) {
    const auto worst = static_cast<std::size_t>(
        std::min_element(out.fitness.begin(), out.fitness.end()) - out.fitness.begin());
    out.members[worst] = pop.best;
    out.fitness[worst] = pop.best_fitness;
  }
  return out;
}

// One pair exchange: among `loc` positions, swap k = min(#(0,1), #(1,0))
// positions of each discordant type so both weights are unchanged.
inline void crossover_pair(AttackVector& a, AttackVector& b, std::vector<std::size_t> loc, Rng& rng) {
  std::vector<std::size_t> zero_one, one_zero;
  for (auto p : loc) {
    if (!a[p] && b[p]) zero_one.push_back(p);
    if (a[p] && !b[p]) one_zero.push_back(p);
  }
  const std::size_t k = std::min(zero_one.size(), one_zero.size());
  detail::partial_shuffle(zero_one, k, rng);
  detail::partial_shuffle(one_zero, k, rng);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto p : {zero_one[i], one_zero[i]}) {
      const bool av = a[p];
      a.set(p, b[p]);
      b.set(p, av);
    }
  }
}

// Pairs members (0,1), (2,3), ...; each pair crosses with probability p_c over
// a random position set of size U{1..loc_max}.
inline void symmetric_crossover(Population& pop, double p_c, std::size_t loc_max, Rng& rng) {
  if (pop.size() == 0) return;
  const std::size_t n = pop.members.front().size();
  if (n == 0) return;
  loc_max = std::clamp<std::size_t>(loc_max, 1, n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i + 1 < pop.size(); i += 2) {
    if (unit(rng) >= p_c) continue;
    const auto len = std::uniform_int_distribution<std::size_t>(1, loc_max)(rng);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    detail::partial_shuffle(idx, len, rng);
    crossover_pair(pop.members[i], pop.members[i + 1], {idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(len)},
                   rng);
  }
}

// Every 1-position inside `loc` moves to a distinct, randomly chosen
// 0-position. No-op when there is no 0-position.
inline void mutate_member(AttackVector& x, const std::vector<std::size_t>& loc, Rng& rng) {
  std::vector<std::size_t> ones, zeros;
  for (auto p : loc)
    if (x[p]) ones.push_back(p);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i]) zeros.push_back(i);
  const std::size_t k = std::min(ones.size(), zeros.size());
  detail::partial_shuffle(ones, k, rng);
  detail::partial_shuffle(zeros, k, rng);
  for (std::size_t i = 0; i < k; ++i) {
    x.set(ones[i], false);
    x.set(zeros[i], true);
  }
}

// loc is a random position set of size U{1..loc_max}.
inline void mutate_member(AttackVector& x, std::size_t loc_max, Rng& rng) {
  const std::size_t n = x.size();
  if (n == 0) return;
  const auto len = std::uniform_int_distribution<std::size_t>(1, std::clamp<std::size_t>(loc_max, 1, n))(rng);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  detail::partial_shuffle(idx, len, rng);
  idx.resize(len);
  mutate_member(x, idx, rng);
}

inline void symmetric_mutation(Population& pop, double p_m, std::size_t L, std::size_t loc_max, Rng& rng) {
  if (loc_max == 0) loc_max = std::max<std::size_t>(1, L > 0 ? L - 1 : 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& x : pop.members)
    if (unit(rng) < p_m) mutate_member(x, loc_max, rng);
}

struct IpgaResult {
  std::vector<std::size_t> nodes;
  AttackVector attack;
  DamageReport report;
  std::vector<double> history;  // best-ever fitness after each generation
  std::size_t generations = 0;
  double seconds = 0.0;
};

using GenerationHook = std::function<void(const Population&)>;

// Fixed-L optimizer: initialize, then evaluate / select / cross / mutate for
// ga.gen generations. The hook sees every evaluated population.
inline IpgaResult run_ipga(const CombatNetwork& net, const CostModel& costs, const DamageConfig& cfg, std::size_t L,
                           const GAConfig& ga, const Priors& priors, const GenerationHook& hook = {}) {
  ga.validate();
  detail::require(L <= net.size(), "damage intensity L exceeds the node count");
  const auto start = std::chrono::steady_clock::now();
  DamageEvaluator evaluator(net, costs, cfg);
  FitnessFunction fit(evaluator, ga.penalty);
  Rng rng(ga.seed);

  const std::size_t cross_max = ga.crossover_loc_max != 0 ? ga.crossover_loc_max : (net.size() + 3) / 4;
  IpgaResult result;
  Population pop = init_population(net.size(), priors, L, ga, rng);
  for (std::size_t p = 0; p < ga.gen; ++p) {
    pop.generation = p;
    fit.evaluate_population(pop);
    pop.track_best();
    if (hook) hook(pop);
    result.history.push_back(pop.best_fitness);
    if (p + 1 == ga.gen) break;
    pop = roulette_select(pop, rng);
    symmetric_crossover(pop, ga.p_c, cross_max, rng);
    symmetric_mutation(pop, ga.p_m, L, ga.mutation_loc_max, rng);
  }
  result.attack = pop.best;
  result.nodes = decode(net, pop.best);
  result.report = evaluator.evaluate(pop.best);
  result.generations = ga.gen;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline IpgaResult run_ipga(const CombatNetwork& net, const CostModel& costs, const DamageConfig& cfg, std::size_t L,
                           const GAConfig& ga) {
  return run_ipga(net, costs, cfg, L, ga, compute_priors(net, ga.potential));
}

struct BudgetRunResult {
  std::vector<std::size_t> nodes;
  AttackVector attack;
  DamageReport report;
  std::size_t realized_l = 0;
  std::vector<double> history;
  double seconds = 0.0;
};

namespace detail {

// Adds nodes in `order` whenever they still fit the budget.
inline AttackVector fill_budget(std::size_t n, std::span<const std::size_t> order, const CostModel& costs) {
  AttackVector x(n);
  double spent = 0.0;
  for (auto v : order) {
    if (costs.within_budget(spent + costs.costs[v])) {
      x.set(v, true);
      spent += costs.costs[v];
    }
  }
  return x;
}

// Greedily adds the affordable node with the largest damage gain until no
// affordable node raises R (ties go to the cheaper, then lower-indexed node),
// then spends what is left on the cheapest remaining nodes. Extra removals
// never lower R, and the reported intensity is the one at which the budget
// binds.
inline AttackVector saturate(AttackVector x, FitnessFunction& fit, const CostModel& costs) {
  double current = fit.evaluate(x);
  double spent = costs.total(x);
  for (;;) {
    std::size_t best = x.size();
    double best_gain = 0.0;
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (x[v] || !costs.within_budget(spent + costs.costs[v])) continue;
      x.set(v, true);
      const double gain = fit.evaluate(x) - current;
      x.set(v, false);
      const bool better = gain > best_gain + 1e-12 ||
                          (best < x.size() && std::abs(gain - best_gain) <= 1e-12 && costs.costs[v] < costs.costs[best]);
      if (gain > 1e-12 && better) {
        best = v;
        best_gain = gain;
      }
    }
    if (best == x.size()) break;
    x.set(best, true);
    spent += costs.costs[best];
    current += best_gain;
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < x.size(); ++v)
    if (!x[v]) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](auto a, auto b) { return costs.costs[a] < costs.costs[b]; });
  for (auto v : rest) {
    if (!costs.within_budget(spent + costs.costs[v])) break;
    x.set(v, true);
    spent += costs.costs[v];
  }
  return x;
}

}  // namespace detail

// Weight-free variant for the attack-law study: chromosomes are any feasible
// set, crossover is uniform, mutation flips each bit with rate p_m / n. The
// best set is finally topped up until no further node is affordable, so the
// realized L is the intensity at which the budget binds.
inline BudgetRunResult run_ipga_budget_mode(const CombatNetwork& net, const CostModel& costs,
                                            const DamageConfig& cfg, const GAConfig& ga, const Priors& priors) {
  ga.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = net.size();
  DamageEvaluator evaluator(net, costs, cfg);
  FitnessFunction fit(evaluator, ga.penalty);
  Rng rng(ga.seed);
  BudgetRunResult result;

  if (costs.rho == 0.0 || n == 0) {
    result.attack = AttackVector(n);
    result.report = evaluator.evaluate(result.attack);
    result.history.assign(ga.gen, 0.0);
    return result;
  }

  Population pop;
  for (const auto* h : {&priors.degree, &priors.betweenness, &priors.potential}) {
    for (std::size_t k = 0; k < ga.seeded(); ++k)
      pop.members.push_back(detail::fill_budget(n, detail::weighted_order(h->values, n, rng), costs));
  }
  std::vector<std::size_t> order(n);
  while (pop.members.size() < ga.n_pop) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    pop.members.push_back(detail::fill_budget(n, order, costs));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double bit_rate = ga.p_m / static_cast<double>(n);
  for (std::size_t p = 0; p < ga.gen; ++p) {
    pop.generation = p;
    fit.evaluate_population(pop);
    pop.track_best();
    result.history.push_back(pop.best_fitness);
    if (p + 1 == ga.gen) break;
    pop = roulette_select(pop, rng);
    for (std::size_t i = 0; i + 1 < pop.size(); i += 2) {
      if (unit(rng) >= ga.p_c) continue;
      auto& a = pop.members[i];
      auto& b = pop.members[i + 1];
      for (std::size_t v = 0; v < n; ++v) {
        if (a[v] != b[v] && unit(rng) < 0.5) {
          a.flip(v);
          b.flip(v);
        }
      }
    }
    for (auto& x : pop.members)
      for (std::size_t v = 0; v < n; ++v)
        if (unit(rng) < bit_rate) x.flip(v);
  }

  AttackVector best = pop.best;
  if (pop.best_fitness > ga.penalty) best = detail::saturate(best, fit, costs);
  result.attack = best;
  result.nodes = decode(net, best);
  result.realized_l = result.nodes.size();
  result.report = evaluator.evaluate(best);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline BudgetRunResult run_ipga_budget_mode(const CombatNetwork& net, const CostModel& costs,
                                            const DamageConfig& cfg, const GAConfig& ga) {
  return run_ipga_budget_mode(net, costs, cfg, ga, compute_priors(net, ga.potential));
}

// Structured run record, one `key value` per line.
inline void write_run_record(std::ostream& os, const std::vector<std::size_t>& nodes, const DamageReport& rep,
                             double c_max, std::size_t generations, double seconds) {
  os << "attacked";
  for (auto v : nodes) os << ' ' << v;
  os << '\n'
     << "L " << nodes.size() << '\n'
     << "total_cost " << format_number(rep.total_cost) << '\n'
     << "c_max " << format_number(c_max) << '\n'
     << "feasible " << (rep.feasible ? "true" : "false") << '\n'
     << "s_huge " << rep.s_huge << '\n'
     << "s_links " << rep.s_links << '\n'
     << "r " << format_number(rep.r) << '\n'
     << "generations " << generations << '\n'
     << "wall_seconds " << format_number(seconds) << '\n';
}

// CSV: generation,best_fitness
inline void write_history_csv(std::ostream& os, std::span<const double> history) {
  os << "generation,best_fitness\n";
  for (std::size_t g = 0; g < history.size(); ++g) os << g << ',' << format_number(history[g]) << '\n';
}

}  // namespace combatnet
