#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "combatnet/centrality.hpp"
#include "combatnet/generators.hpp"
#include "test_support.hpp"

namespace combatnet {
namespace {

using test::make_network;

// Center P (index 1) with leaves O, P, D.
CombatNetwork star4() { return make_network("OPPD", {{0, 1}, {1, 2}, {1, 3}}); }

CombatNetwork random_graph(std::uint64_t seed, std::array<std::size_t, 4> sizes = {6, 5, 5, 4}) {
  GeneratorConfig cfg;
  cfg.family = static_cast<NetworkFamily>(seed % 3);
  cfg.sizes = sizes;
  cfg.er_probs = {0.3, 0.3, 0.3, 0.0};
  cfg.goh_k_mean = 2.0;
  cfg.ba_m0 = 3;
  cfg.ba_m = 1;
  cfg.inter_prob = 0.15;
  cfg.seed = seed;
  return assemble_combat_network(cfg);
}

// Betweenness from Floyd-Warshall distances and shortest-path counts:
// sum over unordered pairs {s,t} of sigma_sv * sigma_vt / sigma_st.
std::vector<double> betweenness_oracle(const CombatNetwork& net) {
  const std::size_t n = net.size();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : net.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    sigma[s][s] = 1.0;
    for (std::size_t len = 1; len < n; ++len)
      for (std::size_t t = 0; t < n; ++t) {
        if (d[s][t] != len) continue;
        for (auto u : net.neighbors(t))
          if (d[s][u] + 1 == len) sigma[s][t] += sigma[s][u];
      }
  }
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] >= inf) continue;
      for (std::size_t v = 0; v < n; ++v)
        if (v != s && v != t && d[s][v] + d[v][t] == d[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
    }
  return bc;
}

TEST(DegreeCentralityTest, Examples) {
  const auto h = degree_centrality(star4());
  EXPECT_EQ(h.values, (std::vector<double>{1, 3, 1, 1}));
  const auto empty = degree_centrality(make_network("OPD", {}));
  EXPECT_EQ(empty.values, (std::vector<double>{0, 0, 0}));
}

TEST(DegreeCentralityTest, HandshakeOnDefaultNetwork) {
  GeneratorConfig cfg;
  const auto net = assemble_combat_network(cfg);
  const auto h = degree_centrality(net);
  EXPECT_EQ(std::accumulate(h.values.begin(), h.values.end(), 0.0), 2.0 * static_cast<double>(net.edge_count()));
}

TEST(DegreeCentralityTest, AddingEdgeNeverDecreasesDegree) {
  const auto before = make_network("OPPD", {{0, 1}, {1, 3}});
  const auto after = make_network("OPPD", {{0, 1}, {1, 3}, {1, 2}});
  const auto a = degree_centrality(before).values;
  const auto b = degree_centrality(after).values;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_GE(b[i], a[i]);
}

TEST(BetweennessTest, Examples) {
  const auto path = betweenness_centrality(make_network("OPD", {{0, 1}, {1, 2}}));
  EXPECT_EQ(path.values, (std::vector<double>{0, 1, 0}));
  const auto k4 = betweenness_centrality(make_network("OOOO", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(k4.values, (std::vector<double>{0, 0, 0, 0}));
}

TEST(BetweennessTest, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto net = random_graph(seed);
    const auto h = betweenness_centrality(net);
    const auto oracle = betweenness_oracle(net);
    for (std::size_t i = 0; i < net.size(); ++i) EXPECT_NEAR(h.values[i], oracle[i], 1e-9) << "seed " << seed;
  }
}

TEST(EigenvectorTest, Examples) {
  const auto edge = eigenvector_centrality(make_network("OP", {{0, 1}}));
  EXPECT_NEAR(edge.values[0], 1.0, 1e-9);
  EXPECT_NEAR(edge.values[1], 1.0, 1e-9);
  const auto star = eigenvector_centrality(star4());
  EXPECT_NEAR(star.values[1], 1.0, 1e-9);
  for (auto leaf : {0, 2, 3}) EXPECT_NEAR(star.values[leaf], 1.0 / std::sqrt(3.0), 1e-8);
  // Largest component is the star; the separate O-O edge gets zeros.
  const auto split = eigenvector_centrality(make_network("OPPDOO", {{0, 1}, {1, 2}, {1, 3}, {4, 5}}));
  EXPECT_EQ(split.values[4], 0.0);
  EXPECT_EQ(split.values[5], 0.0);
}

TEST(EigenvectorTest, ResidualSmallAtTermination) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto net = random_graph(seed, {20, 15, 10, 10});
    const auto v = eigenvector_centrality(net).values;
    double num = 0.0, den = 0.0;
    std::vector<double> av(net.size(), 0.0);
    for (std::size_t i = 0; i < net.size(); ++i)
      for (auto w : net.neighbors(i)) av[i] += v[w];
    for (std::size_t i = 0; i < net.size(); ++i) {
      num += v[i] * av[i];
      den += v[i] * v[i];
    }
    const double lambda = num / den;
    double residual = 0.0;
    for (std::size_t i = 0; i < net.size(); ++i) residual = std::max(residual, std::abs(av[i] - lambda * v[i]));
    EXPECT_LT(residual, 1e-8) << "seed " << seed;
  }
}

TEST(EigenvectorTest, DefaultNetworksConverge) {
  for (auto family : {NetworkFamily::ER, NetworkFamily::BA, NetworkFamily::GOH}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GeneratorConfig cfg;
      cfg.family = family;
      cfg.seed = seed;
      EXPECT_NO_THROW(eigenvector_centrality(assemble_combat_network(cfg)));
    }
  }
}

TEST(ClosenessTest, Examples) {
  const auto edge = closeness_centrality(make_network("OP", {{0, 1}}));
  EXPECT_DOUBLE_EQ(edge.values[0], 1.0);
  EXPECT_DOUBLE_EQ(edge.values[1], 1.0);
  const auto path = closeness_centrality(make_network("OPD", {{0, 1}, {1, 2}}));
  EXPECT_DOUBLE_EQ(path.values[1], 1.0);
  EXPECT_DOUBLE_EQ(path.values[0], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(path.values[2], 2.0 / 3.0);
  const auto isolated = closeness_centrality(make_network("OPD", {{0, 1}}));
  EXPECT_EQ(isolated.values[2], 0.0);
}

TEST(PotentialTest, Examples) {
  EXPECT_EQ(topological_potential(make_network("O", {})).values[0], 0.0);
  const auto edge = topological_potential(make_network("OP", {{0, 1}}));
  EXPECT_NEAR(edge.values[0], std::exp(-4.0 / 9.0), 1e-12);
  EXPECT_NEAR(edge.values[0], 0.6412, 1e-4);
  const auto star = topological_potential(star4());
  EXPECT_NEAR(star.values[1], 3.0 * std::exp(-4.0 / 9.0), 1e-12);
  EXPECT_NEAR(star.values[0], std::exp(-4.0 / 9.0) + 2.0 * std::exp(-16.0 / 9.0), 1e-12);
}

TEST(PotentialTest, CutoffLimitsRange) {
  const auto path = make_network("OOPP", {{0, 1}, {1, 2}, {2, 3}});
  PotentialConfig cfg{1.5, 1};
  EXPECT_NEAR(topological_potential(path, cfg).values[0], std::exp(-4.0 / 9.0), 1e-12);
  EXPECT_THROW(topological_potential(path, PotentialConfig{0.0, 0}), ParameterError);
}

TEST(CentralityTest, RelabelingPermutesValues) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto net = random_graph(seed);
    // Reverse node order within each layer.
    std::vector<std::size_t> map(net.size());
    for (auto k : kAllKinds) {
      const auto ids = net.layer(k);
      for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = ids[ids.size() - 1 - i];
    }
    std::vector<Edge> edges;
    for (const auto& e : net.edges()) edges.emplace_back(map[e.u], map[e.v]);
    const CombatNetwork relabeled(std::vector<NodeKind>(net.kinds().begin(), net.kinds().end()), edges);
    for (auto kind : kAllCentralities) {
      if (kind == CentralityKind::Eigenvector) continue;  // tie-broken component choice may move
      const auto a = compute_centrality(net, kind).values;
      const auto b = compute_centrality(relabeled, kind).values;
      for (std::size_t i = 0; i < net.size(); ++i) EXPECT_NEAR(a[i], b[map[i]], 1e-9) << to_string(kind);
    }
  }
}

TEST(CentralityTest, EigenvectorRelabelingOnConnectedGraph) {
  const auto net = make_network("OOPPD", {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const auto relabeled = make_network("OOPPD", {{0, 1}, {1, 3}, {0, 3}, {3, 2}, {2, 4}});
  const std::vector<std::size_t> map = {1, 0, 3, 2, 4};
  const auto a = eigenvector_centrality(net).values;
  const auto b = eigenvector_centrality(relabeled).values;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[map[i]], 1e-9);
}

TEST(CentralityTest, ValuesFiniteAndNonNegative) {
  GeneratorConfig cfg;
  cfg.family = NetworkFamily::GOH;
  const auto net = assemble_combat_network(cfg);
  for (auto kind : kAllCentralities) {
    const auto h = compute_centrality(net, kind);
    ASSERT_EQ(h.values.size(), net.size());
    for (auto v : h.values) {
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
  }
}

TEST(CentralityTest, CsvFormat) {
  std::ostringstream os;
  write_centrality_csv(os, star4(), degree_centrality(star4()));
  EXPECT_EQ(os.str(), "node_index,kind,value\n0,O,1\n1,P,3\n2,P,1\n3,D,1\n");
  EXPECT_EQ(parse_centrality("betweenness"), CentralityKind::Betweenness);
  EXPECT_THROW(parse_centrality("pagerank"), ParameterError);
}

}  // namespace
}  // namespace combatnet
