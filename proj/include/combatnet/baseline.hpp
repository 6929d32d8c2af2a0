#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <span>
#include <vector>

#include "combatnet/centrality.hpp"
#include "combatnet/cost.hpp"
#include "combatnet/error.hpp"

namespace combatnet {

namespace detail {

inline double objective(std::span<const double> h, const std::vector<std::uint8_t>& chosen) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (chosen[i]) s += h[i];
  return s;
}

// Best-improvement 1-for-1 exchanges that keep the budget, until none raises
// the indicator total.
inline void swap_improve(std::span<const double> h, const CostModel& costs, std::vector<std::uint8_t>& chosen) {
  const std::size_t n = h.size();
  double spent = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (chosen[i]) spent += costs.costs[i];
  for (;;) {
    double best_gain = 1e-12;
    std::size_t out = n, in = n;
    for (std::size_t s = 0; s < n; ++s) {
      if (!chosen[s]) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (chosen[u]) continue;
        const double gain = h[u] - h[s];
        if (gain > best_gain && costs.within_budget(spent - costs.costs[s] + costs.costs[u])) {
          best_gain = gain;
          out = s;
          in = u;
        }
      }
    }
    if (out == n) return;
    chosen[out] = 0;
    chosen[in] = 1;
    spent += costs.costs[in] - costs.costs[out];
  }
}

}  // namespace detail

// Approximately maximizes H^T X subject to C^T X <= C_max and sum X = L.
// Starts from the greedy pick in descending H (skipping nodes that break the
// budget) and from the L cheapest nodes, swap-improves both, keeps the better.
inline std::vector<std::size_t> baseline_select(const CentralityVector& h, const CostModel& costs, std::size_t L) {
  const std::size_t n = h.values.size();
  detail::require(costs.costs.size() == n, "indicator and cost vectors differ in length");
  detail::require(L <= n, "damage intensity L exceeds the node count");

  std::vector<std::size_t> by_cost(n);
  std::iota(by_cost.begin(), by_cost.end(), std::size_t{0});
  std::stable_sort(by_cost.begin(), by_cost.end(), [&](auto a, auto b) { return costs.costs[a] < costs.costs[b]; });
  double cheapest = 0.0;
  for (std::size_t i = 0; i < L; ++i) cheapest += costs.costs[by_cost[i]];
  if (!costs.within_budget(cheapest))
    throw InfeasibleError("even the " + std::to_string(L) + " cheapest nodes exceed the budget");

  std::vector<std::vector<std::uint8_t>> starts;

  std::vector<std::size_t> by_value(n);
  std::iota(by_value.begin(), by_value.end(), std::size_t{0});
  std::stable_sort(by_value.begin(), by_value.end(), [&](auto a, auto b) { return h.values[a] > h.values[b]; });
  std::vector<std::uint8_t> greedy(n, 0);
  std::size_t picked = 0;
  double spent = 0.0;
  for (auto v : by_value) {
    if (picked == L) break;
    if (!costs.within_budget(spent + costs.costs[v])) continue;
    greedy[v] = 1;
    spent += costs.costs[v];
    ++picked;
  }
  if (picked == L) starts.push_back(std::move(greedy));

  std::vector<std::uint8_t> cheap(n, 0);
  for (std::size_t i = 0; i < L; ++i) cheap[by_cost[i]] = 1;
  starts.push_back(std::move(cheap));

  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    detail::swap_improve(h.values, costs, starts[k]);
    const double value = detail::objective(h.values, starts[k]);
    if (value > best_value + 1e-12) {
      best_value = value;
      best = k;
    }
  }
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < n; ++i)
    if (starts[best][i]) nodes.push_back(i);
  return nodes;
}

}  // namespace combatnet
