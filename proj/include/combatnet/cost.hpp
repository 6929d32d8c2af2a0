#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "combatnet/csv.hpp"
#include "combatnet/error.hpp"
#include "combatnet/network.hpp"

namespace combatnet {

// Per-kind correction coefficients, indexed by kind_index().
using LambdaTable = std::array<double, 4>;

inline constexpr LambdaTable kDefaultLambdas = {default_lambda(NodeKind::O), default_lambda(NodeKind::P),
                                                default_lambda(NodeKind::D), default_lambda(NodeKind::A)};

// c_i = lambda(kind_i) * d_i^gamma, with 0^0 = 1.
inline std::vector<double> node_costs(const CombatNetwork& net, double gamma,
                                      const LambdaTable& lambdas = kDefaultLambdas) {
  detail::require(gamma >= 0.0, "cost exponent gamma must be non-negative");
  std::vector<double> costs(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double d = static_cast<double>(net.degree(i));
    const double scale = gamma == 0.0 ? 1.0 : std::pow(d, gamma);
    costs[i] = lambdas[kind_index(net.kind(i))] * scale;
  }
  return costs;
}

inline double budget(std::span<const double> costs, double rho) {
  detail::require(rho >= 0.0 && rho <= 1.0, "budget fraction rho outside [0,1]");
  return rho * std::accumulate(costs.begin(), costs.end(), 0.0);
}

struct CostModel {
  double gamma = 1.0;
  double rho = 0.3;
  std::vector<double> costs;
  double c_max = 0.0;

  double total(const AttackVector& x) const {
    detail::require(x.size() == costs.size(), "attack vector length does not match cost vector");
    double sum = 0.0;
    for (std::size_t i = 0; i < costs.size(); ++i)
      if (x[i]) sum += costs[i];
    return sum;
  }

  // Summation-order noise must not flip a set that spends exactly the budget.
  bool within_budget(double spent) const { return spent <= c_max + 1e-9 * std::max(1.0, c_max); }
};

inline CostModel make_cost_model(const CombatNetwork& net, double gamma, double rho,
                                 const LambdaTable& lambdas = kDefaultLambdas) {
  CostModel m;
  m.gamma = gamma;
  m.rho = rho;
  m.costs = node_costs(net, gamma, lambdas);
  m.c_max = budget(m.costs, rho);
  return m;
}

// CSV: node_index,kind,degree,cost
inline void write_costs_csv(std::ostream& os, const CombatNetwork& net, const CostModel& model) {
  os << "node_index,kind,degree,cost\n";
  for (std::size_t i = 0; i < net.size(); ++i)
    os << i << ',' << kind_char(net.kind(i)) << ',' << net.degree(i) << ',' << format_number(model.costs[i]) << '\n';
}

}  // namespace combatnet
