#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "combatnet/error.hpp"
#include "combatnet/network.hpp"
#include "combatnet/random.hpp"

namespace combatnet {

enum class NetworkFamily { ER, BA, GOH };

inline std::string to_string(NetworkFamily f) {
  switch (f) {
    case NetworkFamily::ER: return "ER";
    case NetworkFamily::BA: return "BA";
    case NetworkFamily::GOH: return "GOH";
  }
  return "?";
}

inline NetworkFamily parse_family(std::string_view s) {
  if (s == "ER" || s == "er") return NetworkFamily::ER;
  if (s == "BA" || s == "ba") return NetworkFamily::BA;
  if (s == "GOH" || s == "goh" || s == "Goh") return NetworkFamily::GOH;
  throw ParameterError("unknown network family '" + std::string(s) + "'");
}

// Layer sizes and intra/inter-layer wiring parameters. Layers are ordered
// O, P, D, A throughout.
struct GeneratorConfig {
  NetworkFamily family = NetworkFamily::ER;
  std::array<std::size_t, 4> sizes = {50, 40, 30, 30};
  std::array<double, 4> er_probs = {0.02, 0.05, 0.05, 0.03};
  std::size_t ba_m0 = 5;
  std::size_t ba_m = 3;
  double goh_beta = 2.3;
  double goh_k_mean = 6.0;
  double inter_prob = 0.03;
  std::uint64_t seed = 1;

  std::size_t total() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

  void validate() const {
    for (auto s : sizes) detail::require(s >= 1, "every layer needs at least one node");
    for (auto p : er_probs) detail::require(p >= 0.0 && p <= 1.0, "ER probability outside [0,1]");
    detail::require(inter_prob >= 0.0 && inter_prob <= 1.0, "inter-layer probability outside [0,1]");
    detail::require(ba_m >= 1 && ba_m0 >= ba_m, "BA parameters need m0 >= m >= 1");
    detail::require(goh_beta > 2.0, "Goh exponent beta must exceed 2");
    detail::require(goh_k_mean > 0.0, "Goh mean degree must be positive");
  }
};

// Each unordered pair joins independently with probability f.
inline std::vector<Edge> gen_er_subnet(std::size_t n, double f, Rng& rng) {
  detail::require(f >= 0.0 && f <= 1.0, "ER probability outside [0,1]");
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < f) edges.emplace_back(i, j);
  return edges;
}

// Preferential attachment. The m0 seed nodes form a ring (a single edge when
// m0 == 2, nothing when m0 == 1); every later node attaches to m distinct
// existing nodes drawn proportionally to degree.
inline std::vector<Edge> gen_ba_subnet(std::size_t n, std::size_t m0, std::size_t m, Rng& rng) {
  detail::require(m >= 1 && m0 >= m, "BA parameters need m0 >= m >= 1");
  detail::require(n >= m0, "BA subnet smaller than its seed");
  std::vector<Edge> edges;
  if (m0 == 2) {
    edges.emplace_back(0, 1);
  } else if (m0 >= 3) {
    for (std::size_t i = 0; i < m0; ++i) edges.emplace_back(i, (i + 1) % m0);
  }
  // Every edge contributes both endpoints, so a uniform pick from this list is
  // a degree-proportional pick.
  std::vector<std::size_t> endpoints;
  for (const auto& e : edges) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  std::vector<std::size_t> targets;
  for (std::size_t v = m0; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      std::size_t t = 0;
      if (endpoints.empty()) {
        t = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
      } else {
        t = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
      }
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (auto t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return edges;
}

// Static scale-free model: node i (1-based) has weight i^-mu, mu = 1/(beta-1).
// Endpoint pairs are drawn proportionally to weight until floor(n*k/2)
// distinct edges exist. Gives up after 200 rejected draws per target edge.
inline std::vector<Edge> gen_goh_subnet(std::size_t n, double beta, double k_mean, Rng& rng) {
  detail::require(n >= 2, "Goh subnet needs at least two nodes");
  detail::require(beta > 2.0, "Goh exponent beta must exceed 2");
  detail::require(k_mean > 0.0, "Goh mean degree must be positive");
  const auto target = static_cast<std::size_t>(std::floor(static_cast<double>(n) * k_mean / 2.0));
  detail::require(target <= n * (n - 1) / 2, "Goh target edge count exceeds the complete graph");

  const double mu = 1.0 / (beta - 1.0);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = std::pow(static_cast<double>(i + 1), -mu);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  std::set<Edge> present;
  std::vector<Edge> edges;
  edges.reserve(target);
  const std::size_t cap = 200 * target;
  std::size_t rejected = 0;
  while (edges.size() < target) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    if (a == b || !present.insert(Edge(a, b)).second) {
      if (++rejected > cap) throw GenerationError("Goh generator exceeded its draw cap");
      continue;
    }
    edges.emplace_back(a, b);
  }
  return edges;
}

namespace detail {

inline std::vector<Edge> intra_layer(const GeneratorConfig& cfg, std::size_t layer, Rng& rng) {
  const std::size_t n = cfg.sizes[layer];
  switch (cfg.family) {
    case NetworkFamily::ER:
      return gen_er_subnet(n, cfg.er_probs[layer], rng);
    case NetworkFamily::BA: {
      // Layers smaller than the seed shrink the seed instead of failing.
      const std::size_t m0 = std::min(cfg.ba_m0, n);
      const std::size_t m = std::min(cfg.ba_m, m0);
      return gen_ba_subnet(n, m0, m, rng);
    }
    case NetworkFamily::GOH: {
      if (n < 2) return {};
      const double k = std::min(cfg.goh_k_mean, static_cast<double>(n - 1));
      return gen_goh_subnet(n, cfg.goh_beta, k, rng);
    }
  }
  return {};
}

}  // namespace detail

// Global indices run layer by layer (all O, then P, D, A). A-A links are not
// an admissible connection, so the A layer gets no intra-layer subnet and
// er_probs[3] is unused. Cross-layer wiring covers only O-P, P-D and D-A.
inline CombatNetwork assemble_combat_network(const GeneratorConfig& cfg, Rng& rng) {
  cfg.validate();
  std::array<std::size_t, 5> offset{};
  for (std::size_t l = 0; l < 4; ++l) offset[l + 1] = offset[l] + cfg.sizes[l];

  std::vector<NodeKind> kinds;
  kinds.reserve(offset[4]);
  for (std::size_t l = 0; l < 4; ++l) kinds.insert(kinds.end(), cfg.sizes[l], kAllKinds[l]);

  std::vector<Edge> edges;
  for (std::size_t l = 0; l < 3; ++l) {
    for (const auto& e : detail::intra_layer(cfg, l, rng))
      edges.emplace_back(e.u + offset[l], e.v + offset[l]);
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t l = 0; l + 1 < 4; ++l) {
    for (std::size_t i = offset[l]; i < offset[l + 1]; ++i)
      for (std::size_t j = offset[l + 1]; j < offset[l + 2]; ++j)
        if (u(rng) < cfg.inter_prob) edges.emplace_back(i, j);
  }
  return CombatNetwork(std::move(kinds), std::move(edges));
}

inline CombatNetwork assemble_combat_network(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return assemble_combat_network(cfg, rng);
}

// Proportional layer sizes for a smaller total, rounded by largest remainder:
// (50,40,30,30) -> 70 gives (23,19,14,14), -> 50 gives (17,13,10,10).
inline std::array<std::size_t, 4> scale_sizes(const std::array<std::size_t, 4>& base, std::size_t total) {
  const double base_total = static_cast<double>(std::accumulate(base.begin(), base.end(), std::size_t{0}));
  detail::require(base_total > 0 && total >= 4, "cannot scale layer sizes below one node per layer");
  std::array<std::size_t, 4> out{};
  std::array<double, 4> frac{};
  std::size_t assigned = 0;
  for (std::size_t l = 0; l < 4; ++l) {
    const double exact = static_cast<double>(base[l]) * static_cast<double>(total) / base_total;
    out[l] = static_cast<std::size_t>(std::floor(exact));
    frac[l] = exact - std::floor(exact);
    assigned += out[l];
  }
  std::array<std::size_t, 4> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return frac[a] > frac[b]; });
  for (std::size_t k = 0; assigned < total; k = (k + 1) % 4, ++assigned) ++out[order[k]];
  for (auto& s : out) s = std::max<std::size_t>(s, 1);
  return out;
}

}  // namespace combatnet
