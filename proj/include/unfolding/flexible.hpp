// Flexible strategy spaces: a player bounded by tau_max may play any melody
// of period p <= tau_max. The per-period optimum reuses the bundle structure
// against the opponent's fixed melody, so nothing is enumerated.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unfolding/counterpoint.hpp"
#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"
#include "unfolding/sequence.hpp"

namespace unfolding {

struct FlexibleGain {
  Rational gain;
  long long best_period = 0;  // smallest period attaining the gain
};

// Best achievable average payoff for `player` using any melody of period p
// against a fixed opponent melody: per residue class mod gcd(p, opponent
// period), play the one-shot best response to the class folding.
namespace detail {

inline Rational best_payoff_with_rho(const NormalFormGame& game, int player, const Melody& opponent,
                                     long long rho) {
  Rational total = 0;
  for (long long j = 0; j < rho; ++j) {
    const MixedStrategy mu = class_folding(opponent, rho, j, game.num_actions(1 - player));
    const int best = best_response_actions(game, mu, player)[0];
    total += payoff_against(game, player, best, mu);
  }
  return total / rho;
}

}  // namespace detail

// Maximum average-payoff gain of `player` over all melodies of period
// p in [1, tau_max], and the smallest maximizing period.
inline FlexibleGain flexible_deviation_gain(const PeriodicProfile& profile, int player,
                                            long long tau_max) {
  require_player(player);
  if (tau_max < 1) throw std::invalid_argument("tau_max must be >= 1");
  const PeriodicStrategy& own = profile.strategy(player);
  if (own.melody.period() > tau_max)
    throw std::invalid_argument("current melody is longer than tau_max");

  const auto pair = detail::align(profile);
  const Melody& opponent = player == 0 ? pair.m2 : pair.m1;
  const Rational current = player == 0 ? unfolding_payoff(profile).first
                                       : unfolding_payoff(profile).second;

  std::map<long long, Rational> by_rho;  // value depends on p only through gcd(p, opp period)
  FlexibleGain result{Rational(0), 0};
  bool first = true;
  for (long long p = 1; p <= tau_max; ++p) {
    const long long rho = std::gcd(p, opponent.period());
    auto it = by_rho.find(rho);
    if (it == by_rho.end())
      it = by_rho.emplace(rho, detail::best_payoff_with_rho(*profile.game, player, opponent, rho))
               .first;
    const Rational gain = it->second - current;
    if (first || gain > result.gain) {
      result = {gain, p};
      first = false;
    }
  }
  return result;
}

// Swaps the two actions of a two-action game throughout the melody.
inline Melody flip_melody(const Melody& melody) {
  Melody flipped;
  flipped.notes.reserve(melody.notes.size());
  for (int a : melody.notes) {
    if (a != 0 && a != 1)
      throw std::invalid_argument("flip_melody requires a two-action game");
    flipped.notes.push_back(1 - a);
  }
  return flipped;
}

// Melody of the opponent's declared period whose j-th note best-responds to
// the opponent's j-th note, ties broken by action-list order.
inline Melody copy_best_response_melody(const NormalFormGame& game, const Melody& opponent_melody,
                                        int player) {
  require_player(player);
  validate_melody(game, 1 - player, opponent_melody);
  Melody reply;
  reply.notes.reserve(opponent_melody.notes.size());
  for (int b : opponent_melody.notes) {
    const MixedStrategy pure = pure_strategy(game.num_actions(1 - player), b);
    reply.notes.push_back(best_response_actions(game, pure, player)[0]);
  }
  return reply;
}

struct FloorCheck {
  Rational epsilon;
  bool satisfied = false;  // epsilon >= 1/3
};

// Matching Pennies floor: the profile's flexible deviation gap, checked
// against the 1/3 bound that holds for every Matching Pennies profile.
inline FloorCheck mp_floor_check(const PeriodicProfile& profile, long long tau_max1,
                                 long long tau_max2) {
  const Rational eps = std::max(flexible_deviation_gain(profile, 0, tau_max1).gain,
                                flexible_deviation_gain(profile, 1, tau_max2).gain);
  return {eps, eps >= Rational(1, 3)};
}

}  // namespace unfolding
