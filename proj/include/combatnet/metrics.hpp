#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "combatnet/cost.hpp"
#include "combatnet/csv.hpp"
#include "combatnet/error.hpp"
#include "combatnet/network.hpp"

namespace combatnet {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// One of the seven kill-chain shapes. Each flag says whether the chain takes
// an extra same-kind hop at that stage (O-O, P-P, D-D).
struct LinkPattern {
  std::string_view name;
  bool repeat_o;
  bool repeat_p;
  bool repeat_d;
};

inline constexpr std::array<LinkPattern, 7> kLinkPatterns = {{
    {"OPDA", false, false, false},
    {"OOPDA", true, false, false},
    {"OPPDA", false, true, false},
    {"OPDDA", false, false, true},
    {"OOPPDA", true, true, false},
    {"OOPDDA", true, false, true},
    {"OOPPDDA", true, true, true},
}};

// Boolean closure of (S + I): multiplies by (S + I) until the pattern stops
// changing. Entry (i,j) is 1 iff i and j share a connected component.
inline CountMatrix accessibility_matrix(const CountMatrix& adjacency) {
  detail::require(adjacency.rows() == adjacency.cols(), "adjacency matrix must be square");
  detail::require((adjacency.array() >= 0).all() && (adjacency.array() <= 1).all(),
                  "adjacency matrix must be 0/1");
  CountMatrix step = adjacency;
  step.diagonal().setOnes();
  CountMatrix reach = step;
  for (;;) {
    CountMatrix next = ((reach * step).array() > 0).cast<std::int64_t>();
    if (next == reach) break;
    reach = std::move(next);
  }
  return reach;
}

inline CountMatrix adjacency_matrix(const CombatNetwork& net) {
  const auto n = static_cast<Eigen::Index>(net.size());
  CountMatrix s = CountMatrix::Zero(n, n);
  for (const auto& e : net.edges()) {
    s(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1;
    s(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1;
  }
  return s;
}

// Layer blocks of the residual adjacency plus the A->O closure block.
struct BlockMatrices {
  std::array<std::vector<std::size_t>, 4> survivors;  // surviving node ids per layer
  CountMatrix oo, op, pp, pd, dd, da;
  CountMatrix ao;  // ao(j, i) = 1 iff surviving A_j and O_i are connected
};

inline BlockMatrices build_blocks(const CombatNetwork& net, const AttackVector& removed) {
  const auto labels = component_labels(net, removed);
  BlockMatrices b;
  for (auto k : kAllKinds)
    for (auto i : net.layer(k))
      if (!removed[i]) b.survivors[kind_index(k)].push_back(i);

  auto slice = [&](NodeKind row, NodeKind col) {
    const auto& rs = b.survivors[kind_index(row)];
    const auto& cs = b.survivors[kind_index(col)];
    CountMatrix m = CountMatrix::Zero(static_cast<Eigen::Index>(rs.size()), static_cast<Eigen::Index>(cs.size()));
    for (std::size_t r = 0; r < rs.size(); ++r)
      for (std::size_t c = 0; c < cs.size(); ++c)
        if (net.has_edge(rs[r], cs[c])) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1;
    return m;
  };
  b.oo = slice(NodeKind::O, NodeKind::O);
  b.op = slice(NodeKind::O, NodeKind::P);
  b.pp = slice(NodeKind::P, NodeKind::P);
  b.pd = slice(NodeKind::P, NodeKind::D);
  b.dd = slice(NodeKind::D, NodeKind::D);
  b.da = slice(NodeKind::D, NodeKind::A);

  const auto& as = b.survivors[kind_index(NodeKind::A)];
  const auto& os = b.survivors[kind_index(NodeKind::O)];
  b.ao = CountMatrix::Zero(static_cast<Eigen::Index>(as.size()), static_cast<Eigen::Index>(os.size()));
  for (std::size_t j = 0; j < as.size(); ++j)
    for (std::size_t i = 0; i < os.size(); ++i)
      if (labels.label[as[j]] == labels.label[os[i]]) b.ao(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1;
  return b;
}

// Per-pattern counts tr(S_OO^a S_OP S_PP^b S_PD S_DD^c S_DA S_AO), integer
// arithmetic so the trace counts chains.
inline std::array<std::uint64_t, 7> count_ielk_by_pattern(const BlockMatrices& b) {
  const auto no = b.op.rows(), np = b.op.cols(), nd = b.pd.cols(), na = b.da.cols();
  const bool consistent = b.oo.rows() == no && b.oo.cols() == no && b.pp.rows() == np && b.pp.cols() == np &&
                          b.pd.rows() == np && b.dd.rows() == nd && b.dd.cols() == nd && b.da.rows() == nd &&
                          b.ao.rows() == na && b.ao.cols() == no;
  detail::require(consistent, "block matrix dimensions are inconsistent");

  std::array<std::uint64_t, 7> counts{};
  for (std::size_t k = 0; k < kLinkPatterns.size(); ++k) {
    const auto& p = kLinkPatterns[k];
    // Multiply right to left so every intermediate has |O| columns.
    CountMatrix tail = b.da * b.ao;
    if (p.repeat_d) tail = b.dd * tail;
    tail = b.pd * tail;
    if (p.repeat_p) tail = b.pp * tail;
    tail = b.op * tail;
    if (p.repeat_o) tail = b.oo * tail;
    counts[k] = static_cast<std::uint64_t>(tail.trace());
  }
  return counts;
}

// S_links: total chain count over all seven patterns.
inline std::uint64_t count_ielk(const BlockMatrices& b) {
  std::uint64_t total = 0;
  for (auto c : count_ielk_by_pattern(b)) total += c;
  return total;
}

// Independent check of count_ielk: depth-first enumeration of typed node
// sequences in the residual graph whose endpoints share a component.
inline std::uint64_t count_ielk_bruteforce(const CombatNetwork& net, const AttackVector& removed) {
  const auto labels = component_labels(net, removed);
  std::uint64_t total = 0;
  std::vector<NodeKind> seq;
  std::vector<std::size_t> path;
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    const std::size_t u = path.back();
    if (depth + 1 == seq.size()) {
      if (labels.label[path.front()] == labels.label[u]) ++total;
      return;
    }
    for (std::size_t w : net.neighbors(u)) {
      if (removed[w] || net.kind(w) != seq[depth + 1]) continue;
      path.push_back(w);
      self(self, depth + 1);
      path.pop_back();
    }
  };
  for (const auto& p : kLinkPatterns) {
    seq.clear();
    for (char c : p.name) seq.push_back(*parse_kind(std::string_view(&c, 1)));
    for (std::size_t o : net.layer(NodeKind::O)) {
      if (removed[o]) continue;
      path.assign(1, o);
      walk(walk, 0);
    }
  }
  return total;
}

// Sparse chain counter for the optimizer's inner loop. Every chain is a path
// in the residual graph, so its endpoints always share a component and the
// closure block contributes a factor of one; the count reduces to walk
// totals, propagated layer by layer from A back to O in O(edges).
class IelkCounter {
 public:
  IelkCounter() = default;
  explicit IelkCounter(const CombatNetwork& net) : net_(&net) {
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t w : net.neighbors(i)) typed_[kind_index(net.kind(w))].push(i, w);
    for (auto& t : typed_) t.finish(n);
    for (auto& v : scratch_) v.assign(n, 0);
  }

  std::uint64_t count(const AttackVector& removed) {
    const auto& d_layer = net_->layer(NodeKind::D);
    const auto& p_layer = net_->layer(NodeKind::P);
    const auto& o_layer = net_->layer(NodeKind::O);
    auto& d0 = scratch_[0];  // D -> A
    auto& d1 = scratch_[1];  // D -> D -> A
    for (auto d : d_layer) d0[d] = removed[d] ? 0 : sum_alive(NodeKind::A, d, removed);
    for (auto d : d_layer) d1[d] = removed[d] ? 0 : sum_over(NodeKind::D, d, removed, d0);
    // P level: index [b][c] with b = extra P hop, c = extra D hop.
    auto& p00 = scratch_[2];
    auto& p01 = scratch_[3];
    auto& p10 = scratch_[4];
    auto& p11 = scratch_[5];
    for (auto p : p_layer) {
      p00[p] = removed[p] ? 0 : sum_over(NodeKind::D, p, removed, d0);
      p01[p] = removed[p] ? 0 : sum_over(NodeKind::D, p, removed, d1);
    }
    for (auto p : p_layer) {
      p10[p] = removed[p] ? 0 : sum_over(NodeKind::P, p, removed, p00);
      p11[p] = removed[p] ? 0 : sum_over(NodeKind::P, p, removed, p01);
    }
    std::uint64_t total = 0;
    for (const auto& pattern : kLinkPatterns) {
      const auto& pv = pattern.repeat_p ? (pattern.repeat_d ? p11 : p10) : (pattern.repeat_d ? p01 : p00);
      auto& ov = scratch_[6];
      for (auto o : o_layer) ov[o] = removed[o] ? 0 : sum_over(NodeKind::P, o, removed, pv);
      for (auto o : o_layer) {
        if (removed[o]) continue;
        total += pattern.repeat_o ? sum_over(NodeKind::O, o, removed, ov) : ov[o];
      }
    }
    return total;
  }

 private:
  struct TypedAdjacency {
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    std::vector<std::size_t> offsets, targets;
    void push(std::size_t from, std::size_t to) { pending.emplace_back(from, to); }
    void finish(std::size_t n) {
      offsets.assign(n + 1, 0);
      for (auto& [f, t] : pending) ++offsets[f + 1];
      for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
      targets.resize(pending.size());
      auto fill = offsets;
      for (auto& [f, t] : pending) targets[fill[f]++] = t;
      pending.clear();
      pending.shrink_to_fit();
    }
  };

  std::uint64_t sum_alive(NodeKind k, std::size_t u, const AttackVector& removed) const {
    const auto& t = typed_[kind_index(k)];
    std::uint64_t s = 0;
    for (auto i = t.offsets[u]; i < t.offsets[u + 1]; ++i) s += removed[t.targets[i]] ? 0 : 1;
    return s;
  }

  std::uint64_t sum_over(NodeKind k, std::size_t u, const AttackVector& removed,
                         const std::vector<std::uint64_t>& values) const {
    const auto& t = typed_[kind_index(k)];
    std::uint64_t s = 0;
    for (auto i = t.offsets[u]; i < t.offsets[u + 1]; ++i) {
      const auto w = t.targets[i];
      if (!removed[w]) s += values[w];
    }
    return s;
  }

  const CombatNetwork* net_ = nullptr;
  std::array<TypedAdjacency, 4> typed_;
  std::array<std::vector<std::uint64_t>, 7> scratch_;
};

struct DamageConfig {
  double alpha = 0.5;

  void validate() const { detail::require(alpha >= 0.0 && alpha <= 1.0, "alpha outside [0,1]"); }
};

// (S_huge, S_links) of one network state.
struct CapabilityMetrics {
  std::size_t s_huge = 0;
  std::uint64_t s_links = 0;
};

// R = 1 - [alpha * links'/links + (1 - alpha) * huge'/huge].
inline double damage_effect(const CapabilityMetrics& baseline, const CapabilityMetrics& attacked,
                            const DamageConfig& cfg) {
  cfg.validate();
  if (baseline.s_links == 0)
    throw DegenerateNetworkError("unattacked network has no intelligence effectiveness links");
  detail::require(baseline.s_huge > 0, "unattacked network is empty");
  const double links = static_cast<double>(attacked.s_links) / static_cast<double>(baseline.s_links);
  const double huge = static_cast<double>(attacked.s_huge) / static_cast<double>(baseline.s_huge);
  return 1.0 - (cfg.alpha * links + (1.0 - cfg.alpha) * huge);
}

struct DamageReport {
  std::size_t s_huge = 0;
  std::uint64_t s_links = 0;
  double r = 0.0;
  double total_cost = 0.0;
  bool feasible = true;
};

// CSV row: s_huge,s_links,r,total_cost,feasible
inline std::string to_csv_row(const DamageReport& rep) {
  return std::to_string(rep.s_huge) + ',' + std::to_string(rep.s_links) + ',' + format_number(rep.r) + ',' +
         format_number(rep.total_cost) + ',' + (rep.feasible ? "true" : "false");
}

inline constexpr std::string_view kDamageReportHeader = "s_huge,s_links,r,total_cost,feasible";

// Scores attack vectors against one network. Baseline metrics are computed
// once at construction. Holds scratch buffers: give each thread its own copy.
class DamageEvaluator {
 public:
  DamageEvaluator(const CombatNetwork& net, const CostModel& costs, DamageConfig cfg = {})
      : net_(&net), costs_(&costs), cfg_(cfg), counter_(net) {
    cfg_.validate();
    detail::require(costs.costs.size() == net.size(), "cost vector length does not match network");
    const AttackVector none(net.size());
    baseline_ = measure(none);
    if (baseline_.s_links == 0)
      throw DegenerateNetworkError("unattacked network has no intelligence effectiveness links");
  }

  const CapabilityMetrics& baseline() const { return baseline_; }
  const CombatNetwork& network() const { return *net_; }
  const CostModel& costs() const { return *costs_; }
  const DamageConfig& config() const { return cfg_; }

  CapabilityMetrics measure(const AttackVector& removed) {
    detail::require(removed.size() == net_->size(), "attack vector length does not match network");
    return {largest_component(removed), counter_.count(removed)};
  }

  DamageReport evaluate(const AttackVector& attack) {
    const auto m = measure(attack);
    DamageReport rep;
    rep.s_huge = m.s_huge;
    rep.s_links = m.s_links;
    rep.r = damage_effect(baseline_, m, cfg_);
    rep.total_cost = costs_->total(attack);
    rep.feasible = costs_->within_budget(rep.total_cost);
    return rep;
  }

 private:
  std::size_t largest_component(const AttackVector& removed) {
    const std::size_t n = net_->size();
    seen_.assign(n, 0);
    queue_.resize(n);
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (removed[s] || seen_[s]) continue;
      std::size_t tail = 0;
      queue_[tail++] = s;
      seen_[s] = 1;
      for (std::size_t head = 0; head < tail; ++head) {
        for (std::size_t w : net_->neighbors(queue_[head])) {
          if (!removed[w] && !seen_[w]) {
            seen_[w] = 1;
            queue_[tail++] = w;
          }
        }
      }
      best = std::max(best, tail);
    }
    return best;
  }

  const CombatNetwork* net_;
  const CostModel* costs_;
  DamageConfig cfg_;
  IelkCounter counter_;
  CapabilityMetrics baseline_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::size_t> queue_;
};

inline DamageReport evaluate_attack(const CombatNetwork& net, const AttackVector& attack, const CostModel& costs,
                                    const DamageConfig& cfg = {}) {
  DamageEvaluator ev(net, costs, cfg);
  return ev.evaluate(attack);
}

}  // namespace combatnet
