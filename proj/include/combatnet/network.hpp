#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "combatnet/error.hpp"

namespace combatnet {

// Functional role of a combat unit: intelligence obtaining (O), intelligence
// processing (P), commanding and decision (D), attack/damage (A).
enum class NodeKind : std::uint8_t { O = 0, P = 1, D = 2, A = 3 };

inline constexpr std::array<NodeKind, 4> kAllKinds = {NodeKind::O, NodeKind::P,
                                                      NodeKind::D, NodeKind::A};

constexpr std::size_t kind_index(NodeKind k) { return static_cast<std::size_t>(k); }

constexpr char kind_char(NodeKind k) {
  constexpr std::array<char, 4> chars = {'O', 'P', 'D', 'A'};
  return chars[kind_index(k)];
}

inline std::optional<NodeKind> parse_kind(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'O': return NodeKind::O;
    case 'P': return NodeKind::P;
    case 'D': return NodeKind::D;
    case 'A': return NodeKind::A;
    default: return std::nullopt;
  }
}

// Damage-cost correction coefficient, relative to O.
constexpr double default_lambda(NodeKind k) {
  constexpr std::array<double, 4> lambdas = {1.0, 1.4, 1.6, 1.1};
  return lambdas[kind_index(k)];
}

// Connections allowed in the combat model: O-O, O-P, P-P, P-D, D-D, D-A.
constexpr bool admissible(NodeKind a, NodeKind b) {
  const auto x = static_cast<int>(a);
  const auto y = static_cast<int>(b);
  const int d = x > y ? x - y : y - x;
  return d <= 1 && !(x == 3 && y == 3);
}

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected typed graph. Immutable once built; the constructor rejects
// self-loops, duplicate edges and inadmissible kind pairs.
class CombatNetwork {
 public:
  CombatNetwork() = default;

  CombatNetwork(std::vector<NodeKind> kinds, std::vector<Edge> edges)
      : kinds_(std::move(kinds)), edges_(std::move(edges)) {
    const std::size_t n = kinds_.size();
    for (auto& e : edges_) {
      e = Edge(e.u, e.v);
      detail::require(e.v < n, "edge endpoint out of range");
      detail::require(e.u != e.v, "self-loop on node " + std::to_string(e.u));
      detail::require(admissible(kinds_[e.u], kinds_[e.v]),
                      std::string("inadmissible edge type ") + kind_char(kinds_[e.u]) +
                          "-" + kind_char(kinds_[e.v]));
    }
    std::sort(edges_.begin(), edges_.end());
    detail::require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
                    "duplicate edge");

    offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      targets_[fill[e.u]++] = e.v;
      targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }
    for (std::size_t i = 0; i < n; ++i) layers_[kind_index(kinds_[i])].push_back(i);
  }

  std::size_t size() const { return kinds_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  NodeKind kind(std::size_t i) const { return kinds_[i]; }
  std::span<const NodeKind> kinds() const { return kinds_; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const std::size_t> neighbors(std::size_t i) const {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  bool has_edge(std::size_t a, std::size_t b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  // Node indices of one kind, ascending.
  std::span<const std::size_t> layer(NodeKind k) const { return layers_[kind_index(k)]; }

  friend bool operator==(const CombatNetwork& a, const CombatNetwork& b) {
    return a.kinds_ == b.kinds_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<NodeKind> kinds_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> targets_;
  std::array<std::vector<std::size_t>, 4> layers_;
};

// 0/1 encoding of an attacked node set; also used as a removal mask.
class AttackVector {
 public:
  AttackVector() = default;
  explicit AttackVector(std::size_t n) : bits_(n, 0) {}
  explicit AttackVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) detail::require(b <= 1, "attack vector entries must be 0 or 1");
  }

  // Parses a string of '0'/'1' characters.
  static AttackVector from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
      detail::require(c == '0' || c == '1', "attack string must contain only 0 and 1");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return AttackVector(std::move(bits));
  }

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  std::size_t weight() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }

  std::span<const std::uint8_t> bits() const { return bits_; }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
    return s;
  }

  friend bool operator==(const AttackVector&, const AttackVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Connected components of the residual graph (attacked nodes deleted).
struct ComponentLabels {
  static constexpr std::size_t kRemoved = static_cast<std::size_t>(-1);

  std::vector<std::size_t> label;  // kRemoved for deleted nodes
  std::vector<std::size_t> sizes;  // indexed by label

  std::size_t largest() const {
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  }
};

inline ComponentLabels component_labels(const CombatNetwork& net, const AttackVector& removed) {
  detail::require(removed.size() == net.size(), "removal vector length does not match network");
  const std::size_t n = net.size();
  ComponentLabels out;
  out.label.assign(n, ComponentLabels::kRemoved);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    const std::size_t id = out.sizes.size();
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      out.label[u] = id;
      for (std::size_t w : net.neighbors(u)) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    out.sizes.push_back(queue.size());
  }
  return out;
}

// S_huge: node count of the largest component after deleting `removed`.
inline std::size_t largest_component_size(const CombatNetwork& net, const AttackVector& removed) {
  return component_labels(net, removed).largest();
}

// Text format:
//   n <count>
//   node <index> <kind>     (one per node, ascending)
//   edge <i> <j>            (one per edge, i < j, sorted)
inline void write_network(std::ostream& os, const CombatNetwork& net) {
  os << "n " << net.size() << '\n';
  for (std::size_t i = 0; i < net.size(); ++i) os << "node " << i << ' ' << kind_char(net.kind(i)) << '\n';
  for (const auto& e : net.edges()) os << "edge " << e.u << ' ' << e.v << '\n';
}

inline std::string to_text(const CombatNetwork& net) {
  std::ostringstream os;
  write_network(os, net);
  return os.str();
}

inline CombatNetwork read_network(std::istream& is) {
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::optional<NodeKind>> kinds;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ParameterError("network line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "n") {
      std::size_t count = 0;
      if (n || !(ls >> count)) fail("bad or repeated header");
      n = count;
      kinds.assign(count, std::nullopt);
    } else if (tag == "node") {
      std::size_t i = 0;
      std::string k;
      if (!n || !(ls >> i >> k) || i >= *n) fail("bad node line");
      const auto kind = parse_kind(k);
      if (!kind) fail("unknown node kind '" + k + "'");
      if (kinds[i]) fail("node declared twice");
      kinds[i] = kind;
    } else if (tag == "edge") {
      std::size_t a = 0, b = 0;
      if (!n || !(ls >> a >> b) || a >= *n || b >= *n) fail("bad edge line");
      edges.emplace_back(a, b);
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }
  if (!n) throw ParameterError("network file has no 'n' header");
  std::vector<NodeKind> resolved;
  resolved.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) {
    if (!kinds[i]) throw ParameterError("node " + std::to_string(i) + " has no kind");
    resolved.push_back(*kinds[i]);
  }
  return CombatNetwork(std::move(resolved), std::move(edges));
}

inline CombatNetwork from_text(const std::string& text) {
  std::istringstream is(text);
  return read_network(is);
}

}  // namespace combatnet
