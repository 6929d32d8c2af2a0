#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// implementation path it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "combatnet/network.hpp"

namespace combatnet::test {

inline CombatNetwork make_network(const std::string& kinds, std::vector<Edge> edges) {
  std::vector<NodeKind> k;
  for (char c : kinds) k.push_back(*parse_kind(std::string_view(&c, 1)));
  return CombatNetwork(std::move(k), std::move(edges));
}

// O - P - D - A
inline CombatNetwork chain_opda() { return make_network("OPDA", {{0, 1}, {1, 2}, {2, 3}}); }

inline std::size_t union_find_largest(const CombatNetwork& net, const AttackVector& removed) {
  std::vector<std::size_t> parent(net.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : net.edges())
    if (!removed[e.u] && !removed[e.v]) parent[find(e.u)] = find(e.v);
  std::vector<std::size_t> count(net.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < net.size(); ++i)
    if (!removed[i]) best = std::max(best, ++count[find(i)]);
  return best;
}

inline std::vector<std::size_t> degrees(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> d(n, 0);
  for (const auto& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

// Discrete power-law exponent, continuous approximation with the k_min - 1/2
// correction.
inline double power_law_mle(const std::vector<std::size_t>& degrees, std::size_t k_min) {
  double s = 0.0;
  std::size_t count = 0;
  for (auto d : degrees) {
    if (d < k_min) continue;
    s += std::log(static_cast<double>(d) / (static_cast<double>(k_min) - 0.5));
    ++count;
  }
  return 1.0 + static_cast<double>(count) / s;
}

// Visits every k-subset of {0..n-1} as an AttackVector.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const AttackVector&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  for (;;) {
    AttackVector x(n);
    for (auto i : idx) x.set(i, true);
    visit(x);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace combatnet::test
