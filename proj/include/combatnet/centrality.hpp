#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "combatnet/csv.hpp"
#include "combatnet/error.hpp"
#include "combatnet/network.hpp"

namespace combatnet {

enum class CentralityKind { Degree, Betweenness, Eigenvector, Closeness, TopologicalPotential };

inline constexpr std::array<CentralityKind, 5> kAllCentralities = {
    CentralityKind::Degree, CentralityKind::Betweenness, CentralityKind::Eigenvector, CentralityKind::Closeness,
    CentralityKind::TopologicalPotential};

inline std::string to_string(CentralityKind k) {
  switch (k) {
    case CentralityKind::Degree: return "degree";
    case CentralityKind::Betweenness: return "betweenness";
    case CentralityKind::Eigenvector: return "eigenvector";
    case CentralityKind::Closeness: return "closeness";
    case CentralityKind::TopologicalPotential: return "potential";
  }
  return "?";
}

inline CentralityKind parse_centrality(std::string_view s) {
  for (auto k : kAllCentralities)
    if (s == to_string(k)) return k;
  if (s == "topological-potential") return CentralityKind::TopologicalPotential;
  throw ParameterError("unknown centrality '" + std::string(s) + "'");
}

struct CentralityVector {
  CentralityKind kind = CentralityKind::Degree;
  std::vector<double> values;
};

struct PotentialConfig {
  double sigma = 1.5;
  std::size_t cutoff = 0;  // 0 means ceil(3 * sigma)

  std::size_t effective_cutoff() const {
    return cutoff != 0 ? cutoff : static_cast<std::size_t>(std::ceil(3.0 * sigma));
  }
  void validate() const { detail::require(sigma > 0.0, "potential sigma must be positive"); }
};

namespace detail {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Hop distances from `source`, stopping past `max_depth`.
inline std::vector<std::size_t> bfs_distances(const CombatNetwork& net, std::size_t source,
                                              std::size_t max_depth = kUnreached) {
  std::vector<std::size_t> dist(net.size(), kUnreached);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    if (dist[u] >= max_depth) continue;
    for (auto w : net.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace detail

inline CentralityVector degree_centrality(const CombatNetwork& net) {
  CentralityVector out{CentralityKind::Degree, std::vector<double>(net.size())};
  for (std::size_t i = 0; i < net.size(); ++i) out.values[i] = static_cast<double>(net.degree(i));
  return out;
}

// Brandes accumulation over BFS shortest-path DAGs, halved so each unordered
// pair counts once.
inline CentralityVector betweenness_centrality(const CombatNetwork& net) {
  const std::size_t n = net.size();
  CentralityVector out{CentralityKind::Betweenness, std::vector<double>(n, 0.0)};
  std::vector<double> sigma(n), delta(n);
  std::vector<std::size_t> dist(n), order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), detail::kUnreached);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto u = order[head];
      for (auto w : net.neighbors(u)) {
        if (dist[w] == detail::kUnreached) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (auto v : net.neighbors(w))
        if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) out.values[w] += delta[w];
    }
  }
  for (auto& v : out.values) v *= 0.5;
  return out;
}

// Principal eigenvector on the largest component (lowest-index component on
// ties), max-normalized, zero elsewhere. Iterates with A + I, which has the
// same eigenvectors but no +/- eigenvalue pair on bipartite components.
inline CentralityVector eigenvector_centrality(const CombatNetwork& net, double tolerance = 1e-10,
                                               std::size_t max_iterations = 1000) {
  const std::size_t n = net.size();
  CentralityVector out{CentralityKind::Eigenvector, std::vector<double>(n, 0.0)};
  if (n == 0) return out;
  const auto labels = component_labels(net, AttackVector(n));
  std::size_t best = 0;
  for (std::size_t c = 1; c < labels.sizes.size(); ++c)
    if (labels.sizes[c] > labels.sizes[best]) best = c;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < n; ++i)
    if (labels.label[i] == best) members.push_back(i);
  if (members.size() == 1) {
    out.values[members[0]] = 1.0;
    return out;
  }

  std::vector<double> v(n, 0.0), next(n, 0.0);
  for (auto i : members) v[i] = static_cast<double>(net.degree(i)) + 1.0;
  const double vmax0 = *std::max_element(v.begin(), v.end());
  for (auto i : members) v[i] /= vmax0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    double vmax = 0.0;
    for (auto i : members) {
      double s = v[i];
      for (auto w : net.neighbors(i)) s += v[w];
      next[i] = s;
      vmax = std::max(vmax, s);
    }
    double change = 0.0;
    for (auto i : members) {
      next[i] /= vmax;
      change = std::max(change, std::abs(next[i] - v[i]));
    }
    std::swap(v, next);
    if (change < tolerance) {
      out.values = std::move(v);
      return out;
    }
  }
  throw ConvergenceError("eigenvector centrality did not converge within " + std::to_string(max_iterations) +
                         " iterations");
}

// Component-scaled closeness: ((|R|-1)/(n-1)) * ((|R|-1) / sum of distances).
inline CentralityVector closeness_centrality(const CombatNetwork& net) {
  const std::size_t n = net.size();
  CentralityVector out{CentralityKind::Closeness, std::vector<double>(n, 0.0)};
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = detail::bfs_distances(net, i);
    std::size_t reached = 0;
    double total = 0.0;
    for (auto d : dist) {
      if (d == detail::kUnreached || d == 0) continue;
      ++reached;
      total += static_cast<double>(d);
    }
    if (reached == 0) continue;
    const double r = static_cast<double>(reached);
    out.values[i] = (r / static_cast<double>(n - 1)) * (r / total);
  }
  return out;
}

// Gaussian-kernel field: sum over j != i within the cutoff of exp(-(d/sigma)^2).
inline CentralityVector topological_potential(const CombatNetwork& net, const PotentialConfig& cfg = {}) {
  cfg.validate();
  const std::size_t n = net.size();
  const auto cutoff = cfg.effective_cutoff();
  detail::require(cutoff >= 1, "potential cutoff must be at least one hop");
  CentralityVector out{CentralityKind::TopologicalPotential, std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = detail::bfs_distances(net, i, cutoff);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || dist[j] == detail::kUnreached || dist[j] > cutoff) continue;
      const double x = static_cast<double>(dist[j]) / cfg.sigma;
      s += std::exp(-x * x);
    }
    out.values[i] = s;
  }
  return out;
}

inline CentralityVector compute_centrality(const CombatNetwork& net, CentralityKind kind,
                                           const PotentialConfig& potential = {}) {
  switch (kind) {
    case CentralityKind::Degree: return degree_centrality(net);
    case CentralityKind::Betweenness: return betweenness_centrality(net);
    case CentralityKind::Eigenvector: return eigenvector_centrality(net);
    case CentralityKind::Closeness: return closeness_centrality(net);
    case CentralityKind::TopologicalPotential: return topological_potential(net, potential);
  }
  throw ParameterError("unknown centrality");
}

// CSV: node_index,kind,value
inline void write_centrality_csv(std::ostream& os, const CombatNetwork& net, const CentralityVector& h) {
  os << "node_index,kind,value\n";
  for (std::size_t i = 0; i < net.size(); ++i)
    os << i << ',' << kind_char(net.kind(i)) << ',' << format_number(h.values[i]) << '\n';
}

}  // namespace combatnet
