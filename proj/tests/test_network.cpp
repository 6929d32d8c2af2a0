#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "combatnet/generators.hpp"
#include "combatnet/network.hpp"
#include "test_support.hpp"

namespace combatnet {
namespace {

using test::chain_opda;
using test::union_find_largest;

TEST(NodeKindTest, LambdaTable) {
  EXPECT_EQ(default_lambda(NodeKind::O), 1.0);
  EXPECT_EQ(default_lambda(NodeKind::P), 1.4);
  EXPECT_EQ(default_lambda(NodeKind::D), 1.6);
  EXPECT_EQ(default_lambda(NodeKind::A), 1.1);
}

TEST(NodeKindTest, AdmissiblePairs) {
  std::set<std::string> allowed;
  for (auto a : kAllKinds)
    for (auto b : kAllKinds)
      if (admissible(a, b) && kind_index(a) <= kind_index(b)) allowed.insert(std::string{kind_char(a), kind_char(b)});
  EXPECT_EQ(allowed, (std::set<std::string>{"OO", "OP", "PP", "PD", "DD", "DA"}));
}

TEST(CombatNetworkTest, RejectsInvalidEdges) {
  const std::vector<NodeKind> kinds = {NodeKind::O, NodeKind::D, NodeKind::A, NodeKind::A};
  EXPECT_THROW(CombatNetwork(kinds, {{0, 0}}), ParameterError);
  EXPECT_THROW(CombatNetwork(kinds, {{0, 1}}), ParameterError);  // O-D
  EXPECT_THROW(CombatNetwork(kinds, {{2, 3}}), ParameterError);  // A-A
  EXPECT_THROW(CombatNetwork(kinds, {{1, 2}, {2, 1}}), ParameterError);
  EXPECT_THROW(CombatNetwork(kinds, {{1, 9}}), ParameterError);
}

TEST(CombatNetworkTest, DegreesAndLayers) {
  const auto net = chain_opda();
  ASSERT_EQ(net.size(), 4u);
  EXPECT_EQ(net.degree(0), 1u);
  EXPECT_EQ(net.degree(1), 2u);
  EXPECT_EQ(net.layer(NodeKind::D).size(), 1u);
  EXPECT_TRUE(net.has_edge(2, 1));
  EXPECT_FALSE(net.has_edge(0, 3));
}

TEST(LargestComponentTest, Examples) {
  const auto net = chain_opda();
  AttackVector none(4);
  EXPECT_EQ(largest_component_size(net, none), 4u);
  EXPECT_EQ(largest_component_size(net, AttackVector::from_string("0100")), 2u);
  EXPECT_EQ(largest_component_size(net, AttackVector::from_string("1111")), 0u);
  EXPECT_THROW(largest_component_size(net, AttackVector(3)), ParameterError);
}

TEST(LargestComponentTest, MatchesUnionFindOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorConfig cfg;
    cfg.family = static_cast<NetworkFamily>(seed % 3);
    cfg.sizes = {8, 6, 5, 5};
    cfg.inter_prob = 0.08;
    cfg.seed = seed;
    const auto net = assemble_combat_network(cfg);
    Rng rng(seed + 1000);
    AttackVector removed(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) removed.set(i, std::bernoulli_distribution(0.2)(rng));
    EXPECT_EQ(largest_component_size(net, removed), union_find_largest(net, removed)) << "seed " << seed;
    EXPECT_EQ(largest_component_size(net, AttackVector(net.size())), union_find_largest(net, AttackVector(net.size())));
  }
}

TEST(LargestComponentTest, RemovalNeverGrowsLargestComponent) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorConfig cfg;
    cfg.family = NetworkFamily::GOH;
    cfg.sizes = {12, 10, 8, 8};
    cfg.seed = seed;
    const auto net = assemble_combat_network(cfg);
    Rng rng(seed);
    AttackVector removed(net.size());
    std::size_t prev = largest_component_size(net, removed);
    std::vector<std::size_t> order(net.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (auto v : order) {
      removed.set(v, true);
      const auto now = largest_component_size(net, removed);
      EXPECT_LE(now, prev);
      prev = now;
    }
    EXPECT_EQ(prev, 0u);
  }
}

TEST(SerializationTest, ExactTextFormat) {
  const auto net = chain_opda();
  EXPECT_EQ(to_text(net), "n 4\nnode 0 O\nnode 1 P\nnode 2 D\nnode 3 A\nedge 0 1\nedge 1 2\nedge 2 3\n");
}

TEST(SerializationTest, RoundTripIsByteExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig cfg;
    cfg.family = static_cast<NetworkFamily>(seed % 3);
    cfg.seed = seed;
    const auto net = assemble_combat_network(cfg);
    const auto text = to_text(net);
    const auto back = from_text(text);
    EXPECT_EQ(back, net);
    EXPECT_EQ(to_text(back), text);
  }
}

TEST(SerializationTest, RejectsMalformedInput) {
  EXPECT_THROW(from_text("node 0 O\n"), ParameterError);
  EXPECT_THROW(from_text("n 2\nnode 0 O\n"), ParameterError);
  EXPECT_THROW(from_text("n 1\nnode 0 X\n"), ParameterError);
  EXPECT_THROW(from_text("n 2\nnode 0 O\nnode 1 A\nedge 0 1\n"), ParameterError);
  EXPECT_THROW(from_text("n 1\nnode 0 O\nbogus 1\n"), ParameterError);
}

TEST(ErGeneratorTest, DegenerateProbabilities) {
  Rng rng(1);
  EXPECT_TRUE(gen_er_subnet(3, 0.0, rng).empty());
  EXPECT_EQ(gen_er_subnet(3, 1.0, rng).size(), 3u);
  EXPECT_THROW(gen_er_subnet(3, 1.5, rng), ParameterError);
}

TEST(ErGeneratorTest, MeanEdgeCountMatchesBinomial) {
  // 1225 pairs at p = 0.02: mean 24.5, sd ~4.9.
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const auto m = static_cast<double>(gen_er_subnet(50, 0.02, rng).size());
    EXPECT_LT(std::abs(m - 24.5), 3.0 * std::sqrt(1225 * 0.02 * 0.98));
    sum += m;
  }
  EXPECT_NEAR(sum / 1000.0, 24.5, 0.05 * 24.5);
}

TEST(BaGeneratorTest, SeedOnlyAndEdgeCount) {
  Rng rng(3);
  const auto seed_only = gen_ba_subnet(5, 5, 3, rng);
  EXPECT_EQ(seed_only.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_NE(std::find(seed_only.begin(), seed_only.end(), Edge(i, (i + 1) % 5)), seed_only.end());
  EXPECT_EQ(gen_ba_subnet(30, 5, 3, rng).size(), 80u);
  EXPECT_THROW(gen_ba_subnet(4, 5, 3, rng), ParameterError);
}

TEST(BaGeneratorTest, NoDuplicateEdges) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto edges = gen_ba_subnet(200, 5, 3, rng);
    std::set<Edge> unique(edges.begin(), edges.end());
    EXPECT_EQ(unique.size(), edges.size());
  }
}

TEST(BaGeneratorTest, TailExponentNearThree) {
  std::vector<std::size_t> degrees;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto d = test::degrees(1000, gen_ba_subnet(1000, 5, 3, rng));
    degrees.insert(degrees.end(), d.begin(), d.end());
  }
  const double alpha = test::power_law_mle(degrees, 6);
  EXPECT_GE(alpha, 2.5);
  EXPECT_LE(alpha, 3.5);
}

TEST(GohGeneratorTest, ExactEdgeTargets) {
  Rng rng(5);
  const auto two = gen_goh_subnet(2, 3.0, 1.0, rng);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], Edge(0, 1));
  EXPECT_EQ(gen_goh_subnet(30, 2.3, 6.0, rng).size(), 90u);
  EXPECT_THROW(gen_goh_subnet(4, 2.3, 6.0, rng), ParameterError);
  EXPECT_THROW(gen_goh_subnet(10, 2.0, 2.0, rng), ParameterError);
}

TEST(GohGeneratorTest, TailExponentNearBeta) {
  std::vector<std::size_t> degrees;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto d = test::degrees(1000, gen_goh_subnet(1000, 2.3, 6.0, rng));
    degrees.insert(degrees.end(), d.begin(), d.end());
  }
  const double alpha = test::power_law_mle(degrees, 10);
  EXPECT_GE(alpha, 1.9);
  EXPECT_LE(alpha, 2.9);
}

TEST(AssembleTest, SingleNodeLayersFullyWired) {
  for (auto family : {NetworkFamily::ER, NetworkFamily::BA, NetworkFamily::GOH}) {
    GeneratorConfig cfg;
    cfg.family = family;
    cfg.sizes = {1, 1, 1, 1};
    cfg.inter_prob = 1.0;
    const auto net = assemble_combat_network(cfg);
    EXPECT_EQ(std::vector<Edge>(net.edges().begin(), net.edges().end()),
              (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  }
}

TEST(AssembleTest, NoCrossWiringWhenDisabled) {
  GeneratorConfig cfg;
  cfg.sizes = {2, 1, 1, 1};
  cfg.er_probs = {1.0, 1.0, 1.0, 1.0};
  cfg.inter_prob = 0.0;
  const auto net = assemble_combat_network(cfg);
  EXPECT_EQ(std::vector<Edge>(net.edges().begin(), net.edges().end()), (std::vector<Edge>{{0, 1}}));
}

TEST(AssembleTest, DefaultSizesAndLayerOrder) {
  for (auto family : {NetworkFamily::ER, NetworkFamily::BA, NetworkFamily::GOH}) {
    GeneratorConfig cfg;
    cfg.family = family;
    cfg.seed = 17;
    const auto net = assemble_combat_network(cfg);
    EXPECT_EQ(net.size(), 150u);
    EXPECT_EQ(net.layer(NodeKind::O).front(), 0u);
    EXPECT_EQ(net.layer(NodeKind::P).front(), 50u);
    EXPECT_EQ(net.layer(NodeKind::D).front(), 90u);
    EXPECT_EQ(net.layer(NodeKind::A).front(), 120u);
    for (const auto& e : net.edges()) EXPECT_TRUE(admissible(net.kind(e.u), net.kind(e.v)));
  }
}

TEST(AssembleTest, RandomConfigsSatisfyInvariants) {
  Rng meta(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    GeneratorConfig cfg;
    cfg.family = static_cast<NetworkFamily>(trial % 3);
    for (auto& s : cfg.sizes) s = std::uniform_int_distribution<std::size_t>(1, 12)(meta);
    for (auto& p : cfg.er_probs) p = std::uniform_real_distribution<double>(0.0, 1.0)(meta);
    cfg.ba_m0 = std::uniform_int_distribution<std::size_t>(1, 5)(meta);
    cfg.ba_m = std::uniform_int_distribution<std::size_t>(1, cfg.ba_m0)(meta);
    cfg.goh_beta = std::uniform_real_distribution<double>(2.1, 5.0)(meta);
    cfg.goh_k_mean = std::uniform_real_distribution<double>(0.5, 6.0)(meta);
    cfg.inter_prob = std::uniform_real_distribution<double>(0.0, 0.5)(meta);
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto net = assemble_combat_network(cfg);  // constructor enforces edge invariants
    ASSERT_EQ(net.size(), cfg.total());
    std::size_t covered = 0;
    for (auto k : kAllKinds) {
      for (auto i : net.layer(k)) EXPECT_EQ(net.kind(i), k);
      covered += net.layer(k).size();
    }
    EXPECT_EQ(covered, net.size());
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < net.size(); ++i) degree_sum += net.degree(i);
    EXPECT_EQ(degree_sum, 2 * net.edge_count());
  }
}

TEST(AssembleTest, DeterministicForEqualSeeds) {
  for (auto family : {NetworkFamily::ER, NetworkFamily::BA, NetworkFamily::GOH}) {
    GeneratorConfig cfg;
    cfg.family = family;
    cfg.seed = 99;
    EXPECT_EQ(assemble_combat_network(cfg), assemble_combat_network(cfg));
    auto other = cfg;
    other.seed = 100;
    EXPECT_NE(assemble_combat_network(cfg), assemble_combat_network(other));
  }
}

TEST(AssembleTest, InvalidConfigRejected) {
  GeneratorConfig cfg;
  cfg.sizes = {0, 1, 1, 1};
  EXPECT_THROW(assemble_combat_network(cfg), ParameterError);
  cfg = {};
  cfg.goh_beta = 2.0;
  EXPECT_THROW(assemble_combat_network(cfg), ParameterError);
  cfg = {};
  cfg.ba_m = 6;
  EXPECT_THROW(assemble_combat_network(cfg), ParameterError);
}

TEST(ScaleSizesTest, ProportionalRounding) {
  const std::array<std::size_t, 4> base = {50, 40, 30, 30};
  EXPECT_EQ(scale_sizes(base, 150), base);
  EXPECT_EQ(scale_sizes(base, 70), (std::array<std::size_t, 4>{23, 19, 14, 14}));
  EXPECT_EQ(scale_sizes(base, 50), (std::array<std::size_t, 4>{17, 13, 10, 10}));
}

}  // namespace
}  // namespace combatnet
