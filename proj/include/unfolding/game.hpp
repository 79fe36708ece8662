// Finite two-player normal-form games with exact rational payoffs:
// expected payoffs, per-player deviation gains, the overall deviation gap,
// epsilon-NE checks, and the named game constructors.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unfolding/rational.hpp"

namespace unfolding {

inline void require_player(int player) {
  if (player != 0 && player != 1) throw std::invalid_argument("player index must be 0 or 1");
}

class NormalFormGame {
 public:
  // Payoff tables are indexed [action of player 1][action of player 2]
  // for both players.
  NormalFormGame(std::vector<std::string> actions_p1, std::vector<std::string> actions_p2,
                 std::vector<std::vector<Rational>> payoff_p1,
                 std::vector<std::vector<Rational>> payoff_p2)
      : actions_{std::move(actions_p1), std::move(actions_p2)},
        payoff_{std::move(payoff_p1), std::move(payoff_p2)} {
    for (int i = 0; i < 2; ++i) {
      if (actions_[i].empty()) throw std::invalid_argument("empty action list");
      for (std::size_t a = 0; a < actions_[i].size(); ++a) {
        if (actions_[i][a].empty()) throw std::invalid_argument("empty action identifier");
        for (std::size_t b = a + 1; b < actions_[i].size(); ++b) {
          if (actions_[i][a] == actions_[i][b])
            throw std::invalid_argument("duplicate action identifier: " + actions_[i][a]);
        }
      }
      if (payoff_[i].size() != actions_[0].size())
        throw std::invalid_argument("payoff table row count mismatch");
      for (const auto& row : payoff_[i]) {
        if (row.size() != actions_[1].size())
          throw std::invalid_argument("payoff table column count mismatch");
      }
    }
  }

  int num_actions(int player) const {
    require_player(player);
    return static_cast<int>(actions_[player].size());
  }

  const std::vector<std::string>& action_names(int player) const {
    require_player(player);
    return actions_[player];
  }

  const std::string& action_name(int player, int a) const {
    require_player(player);
    return actions_[player].at(static_cast<std::size_t>(a));
  }

  // -1 when the identifier is unknown.
  int find_action(int player, std::string_view name) const {
    require_player(player);
    for (std::size_t a = 0; a < actions_[player].size(); ++a) {
      if (actions_[player][a] == name) return static_cast<int>(a);
    }
    return -1;
  }

  int action_index(int player, std::string_view name) const {
    const int a = find_action(player, name);
    if (a < 0)
      throw std::invalid_argument("unknown action '" + std::string(name) + "' for player " +
                                  std::to_string(player + 1));
    return a;
  }

  // u_player(a1, a2)
  const Rational& payoff(int player, int a1, int a2) const {
    require_player(player);
    return payoff_[player].at(static_cast<std::size_t>(a1)).at(static_cast<std::size_t>(a2));
  }

  const std::vector<std::vector<Rational>>& payoff_table(int player) const {
    require_player(player);
    return payoff_[player];
  }

 private:
  std::array<std::vector<std::string>, 2> actions_;
  std::array<std::vector<std::vector<Rational>>, 2> payoff_;
};

// An exact probability vector over one player's actions, aligned with the
// player's action list.
struct MixedStrategy {
  std::vector<Rational> weights;

  const Rational& weight(int a) const { return weights.at(static_cast<std::size_t>(a)); }
  bool operator==(const MixedStrategy&) const = default;
};

struct MixedProfile {
  MixedStrategy p1, p2;

  const MixedStrategy& strategy(int player) const {
    require_player(player);
    return player == 0 ? p1 : p2;
  }
  bool operator==(const MixedProfile&) const = default;
};

inline MixedStrategy pure_strategy(int num_actions, int action) {
  MixedStrategy s;
  s.weights.assign(static_cast<std::size_t>(num_actions), Rational(0));
  s.weights.at(static_cast<std::size_t>(action)) = 1;
  return s;
}

inline MixedStrategy uniform_strategy(int num_actions) {
  MixedStrategy s;
  s.weights.assign(static_cast<std::size_t>(num_actions), Rational(1, num_actions));
  return s;
}

inline void validate_strategy(const MixedStrategy& s, int num_actions) {
  if (static_cast<int>(s.weights.size()) != num_actions)
    throw std::invalid_argument("mixed strategy does not match the player's action list");
  Rational sum = 0;
  for (const Rational& w : s.weights) {
    if (w < 0) throw std::invalid_argument("negative weight in mixed strategy");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("mixed strategy weights must sum to 1");
}

inline void validate_profile(const NormalFormGame& game, const MixedProfile& profile) {
  validate_strategy(profile.p1, game.num_actions(0));
  validate_strategy(profile.p2, game.num_actions(1));
}

// u_i(mu) = sum_{a,b} mu1(a) mu2(b) u_i(a,b)
inline Rational expected_payoff_of(const NormalFormGame& game, const MixedProfile& profile,
                                   int player) {
  require_player(player);
  validate_profile(game, profile);
  Rational total = 0;
  for (int a = 0; a < game.num_actions(0); ++a) {
    if (profile.p1.weight(a) == 0) continue;
    for (int b = 0; b < game.num_actions(1); ++b) {
      if (profile.p2.weight(b) == 0) continue;
      total += profile.p1.weight(a) * profile.p2.weight(b) * game.payoff(player, a, b);
    }
  }
  return total;
}

inline std::pair<Rational, Rational> expected_payoff(const NormalFormGame& game,
                                                     const MixedProfile& profile) {
  return {expected_payoff_of(game, profile, 0), expected_payoff_of(game, profile, 1)};
}

// u_player(action, opponent's mixed strategy)
inline Rational payoff_against(const NormalFormGame& game, int player, int action,
                               const MixedStrategy& opponent) {
  require_player(player);
  validate_strategy(opponent, game.num_actions(1 - player));
  Rational total = 0;
  for (int b = 0; b < game.num_actions(1 - player); ++b) {
    if (opponent.weight(b) == 0) continue;
    const Rational& u = player == 0 ? game.payoff(0, action, b) : game.payoff(1, b, action);
    total += opponent.weight(b) * u;
  }
  return total;
}

// f^i_G: the most player i can gain by deviating to a single action.
inline Rational deviation_gain(const NormalFormGame& game, const MixedProfile& profile,
                               int player) {
  require_player(player);
  validate_profile(game, profile);
  const MixedStrategy& opp = profile.strategy(1 - player);
  Rational best = payoff_against(game, player, 0, opp);
  for (int a = 1; a < game.num_actions(player); ++a) {
    Rational v = payoff_against(game, player, a, opp);
    if (v > best) best = v;
  }
  return best - expected_payoff_of(game, profile, player);
}

// f_G: the deviation gap of a profile; zero exactly at Nash equilibria.
inline Rational max_deviation(const NormalFormGame& game, const MixedProfile& profile) {
  return std::max(deviation_gain(game, profile, 0), deviation_gain(game, profile, 1));
}

// Argmax set of u_player(a, opponent); ties are all included, in action-list order.
inline std::vector<int> best_response_actions(const NormalFormGame& game,
                                              const MixedStrategy& opponent, int player) {
  require_player(player);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(game.num_actions(player)));
  for (int a = 0; a < game.num_actions(player); ++a)
    values.push_back(payoff_against(game, player, a, opponent));
  const Rational best = *std::max_element(values.begin(), values.end());
  std::vector<int> out;
  for (int a = 0; a < game.num_actions(player); ++a)
    if (values[static_cast<std::size_t>(a)] == best) out.push_back(a);
  return out;
}

inline bool is_epsilon_ne(const NormalFormGame& game, const MixedProfile& profile,
                          const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("epsilon must be non-negative");
  return max_deviation(game, profile) <= eps;
}

inline Rational linf_distance(const MixedStrategy& a, const MixedStrategy& b) {
  if (a.weights.size() != b.weights.size())
    throw std::invalid_argument("strategies over different action lists");
  Rational d = 0;
  for (std::size_t i = 0; i < a.weights.size(); ++i)
    d = std::max(d, rational_abs(a.weights[i] - b.weights[i]));
  return d;
}

inline Rational linf_distance(const MixedProfile& a, const MixedProfile& b) {
  return std::max(linf_distance(a.p1, b.p1), linf_distance(a.p2, b.p2));
}

// Matching Pennies: player 1 wins on a match, player 2 on a mismatch.
inline NormalFormGame matching_pennies() {
  return NormalFormGame({"H", "T"}, {"H", "T"},
                        {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                        {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

// The modified Matching Pennies family G_delta. For delta in (0,1) the unique
// Nash equilibrium is ((delta, 1-delta), (delta, 1-delta)).
inline NormalFormGame modified_matching_pennies(const Rational& delta) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta must lie in [0, 1]");
  const Rational d1 = delta + 1;
  const Rational d2 = 2 * delta;
  return NormalFormGame({"H", "T"}, {"H", "T"},
                        {{d1, Rational(1)}, {d2, d1}},
                        {{d2, d1}, {d1, Rational(1)}});
}

}  // namespace unfolding
