// Nash equilibrium computation for small games by support enumeration with
// exact rational linear solving. Complete for nondegenerate games; degenerate
// games with equilibrium components are reported through their vertex
// solutions where the indifference systems are nonsingular.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"

namespace unfolding {

namespace detail {

// Solves the square system A x = b exactly. Returns nullopt when singular.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] /= inv;
    b[col] /= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

inline void enumerate_subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Finds the strategy of the *other* side that makes every action in
// `support` of `player` an exact best response. Returns the extended weight
// vector when one exists with positive weights on `opp_support`.
inline std::optional<MixedStrategy> indifference_solution(const NormalFormGame& game, int player,
                                                          const std::vector<int>& support,
                                                          const std::vector<int>& opp_support) {
  const std::size_t k = support.size();
  // Unknowns: one weight per opp_support action, plus the payoff level w.
  std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1, Rational(0)));
  std::vector<Rational> b(k + 1, Rational(0));
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t col = 0; col < k; ++col) {
      const int own = support[row];
      const int opp = opp_support[col];
      a[row][col] = player == 0 ? game.payoff(0, own, opp) : game.payoff(1, opp, own);
    }
    a[row][k] = -1;
  }
  for (std::size_t col = 0; col < k; ++col) a[k][col] = 1;
  b[k] = 1;

  auto sol = solve_linear(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  for (std::size_t col = 0; col < k; ++col) {
    if ((*sol)[col] <= 0) return std::nullopt;
  }
  const Rational w = (*sol)[k];

  MixedStrategy full;
  full.weights.assign(static_cast<std::size_t>(game.num_actions(1 - player)), Rational(0));
  for (std::size_t col = 0; col < k; ++col)
    full.weights[static_cast<std::size_t>(opp_support[col])] = (*sol)[col];

  // No action outside the support may beat the indifference level.
  for (int own = 0; own < game.num_actions(player); ++own) {
    bool in_support = false;
    for (int s : support) in_support |= (s == own);
    if (in_support) continue;
    if (payoff_against(game, player, own, full) > w) return std::nullopt;
  }
  return full;
}

}  // namespace detail

// All Nash equilibria found by equal-size support enumeration, in a
// deterministic support order. Every result has max_deviation exactly zero.
inline std::vector<MixedProfile> solve_ne_support_enumeration(const NormalFormGame& game,
                                                              int max_actions = 6) {
  const int n1 = game.num_actions(0);
  const int n2 = game.num_actions(1);
  if (n1 > max_actions || n2 > max_actions)
    throw std::invalid_argument("game too large for support enumeration (limit " +
                                std::to_string(max_actions) + " actions per player)");

  std::vector<MixedProfile> found;
  for (int k = 1; k <= std::min(n1, n2); ++k) {
    std::vector<std::vector<int>> supports1, supports2;
    detail::enumerate_subsets(n1, k, supports1);
    detail::enumerate_subsets(n2, k, supports2);
    for (const auto& r : supports1) {
      for (const auto& c : supports2) {
        auto y = detail::indifference_solution(game, 0, r, c);
        if (!y) continue;
        auto x = detail::indifference_solution(game, 1, c, r);
        if (!x) continue;
        MixedProfile profile{*x, *y};
        bool duplicate = false;
        for (const auto& p : found) duplicate |= (p == profile);
        if (!duplicate) found.push_back(std::move(profile));
      }
    }
  }
  if (found.empty())
    throw std::runtime_error(
        "support enumeration found no equilibrium; the game is degenerate in a way "
        "this solver does not cover");
  return found;
}

}  // namespace unfolding
