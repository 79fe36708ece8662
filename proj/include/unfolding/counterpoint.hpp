// Bundle machinery for unfolding games.
//
// With periods tau_1, tau_2 and rho = gcd(tau_1, tau_2), the joint cycle
// splits into rho residue classes. Within class j, every sampled note of one
// player meets every sampled note of the other exactly once (the sample
// counts tau_1/rho and tau_2/rho are coprime), so the class behaves exactly
// like the mixed profile mu_j obtained by folding the samples. This gives
// closed forms for the long-run payoff and for the best deviation within a
// fixed declared period, without materializing the lcm-length piece:
//
//   u_i = (1/rho) sum_j u_i(mu_j)
//   best gain of player i = (1/rho) sum_j f^i(mu_j)
//
// where f^i is the one-shot deviation gain. Positions j are independent:
// the optimal deviation plays a one-shot best response against mu_{j,-i}
// at position j of every bundle.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"
#include "unfolding/sequence.hpp"

namespace unfolding {

struct BundleFolding {
  long long rho = 0;
  std::vector<MixedProfile> bundle_profiles;  // mu_1 .. mu_rho
};

namespace detail {

struct AlignedPair {
  const Melody& m1;
  const Melody& m2;
  long long rho = 0;
};

inline AlignedPair align(const PeriodicProfile& profile) {
  validate_periodic_profile(profile);
  AlignedPair out{profile.s1.melody, profile.s2.melody,
                  std::gcd(profile.s1.melody.period(), profile.s2.melody.period())};
  return out;
}

// Folding of the residue class {j, j+rho, ...} of one melody.
inline MixedStrategy class_folding(const Melody& melody, long long rho, long long j,
                                   int num_actions) {
  const long long samples = melody.period() / rho;
  std::vector<long long> counts(static_cast<std::size_t>(num_actions), 0);
  for (long long t = 0; t < samples; ++t)
    ++counts[static_cast<std::size_t>(melody.note(j + t * rho))];
  MixedStrategy mu;
  mu.weights.reserve(counts.size());
  for (long long c : counts) mu.weights.emplace_back(c, samples);
  return mu;
}

template <class Visit>
void for_each_bundle_profile(const NormalFormGame& game, const AlignedPair& pair, Visit&& visit) {
  for (long long j = 0; j < pair.rho; ++j) {
    MixedProfile mu{class_folding(pair.m1, pair.rho, j, game.num_actions(0)),
                    class_folding(pair.m2, pair.rho, j, game.num_actions(1))};
    visit(j, mu);
  }
}

}  // namespace detail

inline BundleFolding bundle_folding(const PeriodicProfile& profile) {
  const auto pair = detail::align(profile);
  BundleFolding out;
  out.rho = pair.rho;
  out.bundle_profiles.reserve(static_cast<std::size_t>(pair.rho));
  detail::for_each_bundle_profile(*profile.game, pair, [&](long long, MixedProfile mu) {
    out.bundle_profiles.push_back(std::move(mu));
  });
  return out;
}

// Exact long-run average payoff; agrees with avg_payoff_direct whenever the
// piece is materializable, but costs O(tau_1 + tau_2 + rho * |S1| * |S2|).
inline std::pair<Rational, Rational> unfolding_payoff(const PeriodicProfile& profile) {
  const auto pair = detail::align(profile);
  Rational total1 = 0, total2 = 0;
  detail::for_each_bundle_profile(*profile.game, pair, [&](long long, const MixedProfile& mu) {
    total1 += expected_payoff_of(*profile.game, mu, 0);
    total2 += expected_payoff_of(*profile.game, mu, 1);
  });
  return {total1 / pair.rho, total2 / pair.rho};
}

// The most player i can gain by switching to any melody of its own declared
// period (prefixes are free and never matter).
inline Rational unfolding_deviation_gain(const PeriodicProfile& profile, int player) {
  require_player(player);
  const auto pair = detail::align(profile);
  Rational total = 0;
  detail::for_each_bundle_profile(*profile.game, pair, [&](long long, const MixedProfile& mu) {
    total += deviation_gain(*profile.game, mu, player);
  });
  return total / pair.rho;
}

// f_{G^uf}(s): the profile is an exact (this value)-NE of the unfolding game.
inline Rational max_unfolding_deviation(const PeriodicProfile& profile) {
  return std::max(unfolding_deviation_gain(profile, 0), unfolding_deviation_gain(profile, 1));
}

// A period-preserving melody achieving exactly the closed-form gain for
// `player`: the best response at position j of every bundle, ties broken by
// action-list order, repeated tau/rho times. Substituting it for the
// player's melody realizes the gain exactly. A player whose every note
// already best-responds to its class folding keeps its own melody.
inline Melody best_deviation_melody(const PeriodicProfile& profile, int player) {
  require_player(player);
  const auto pair = detail::align(profile);
  const Melody& own = player == 0 ? pair.m1 : pair.m2;
  const Melody& other = player == 0 ? pair.m2 : pair.m1;
  const long long tau = own.period();

  std::vector<int> best_at(static_cast<std::size_t>(pair.rho));
  bool already_best = true;
  for (long long j = 0; j < pair.rho; ++j) {
    const MixedStrategy opp =
        detail::class_folding(other, pair.rho, j, profile.game->num_actions(1 - player));
    const std::vector<int> argmax = best_response_actions(*profile.game, opp, player);
    best_at[static_cast<std::size_t>(j)] = argmax[0];
    for (long long t = j; t < tau && already_best; t += pair.rho)
      already_best = std::find(argmax.begin(), argmax.end(), own.note(t)) != argmax.end();
  }
  if (already_best) return own;

  Melody deviation;
  deviation.notes.resize(static_cast<std::size_t>(tau));
  for (long long t = 0; t < tau; ++t)
    deviation.notes[static_cast<std::size_t>(t)] = best_at[static_cast<std::size_t>(t % pair.rho)];
  return deviation;
}

struct BundleHeterogeneity {
  long long total_bundles = 0;
  std::vector<long long> pure_bundles_by_action;
  long long heterogeneous = 0;
};

// Splits the melody into consecutive blocks of length rho and counts the
// blocks made of a single repeated action.
inline BundleHeterogeneity count_heterogeneous_bundles(const Melody& melody, long long rho,
                                                       int num_actions = -1) {
  const long long tau = melody.period();
  if (rho < 1 || tau % rho != 0)
    throw std::invalid_argument("rho must divide the declared period");
  if (num_actions < 0) {
    for (int a : melody.notes) num_actions = std::max(num_actions, a + 1);
  }
  BundleHeterogeneity out;
  out.total_bundles = tau / rho;
  out.pure_bundles_by_action.assign(static_cast<std::size_t>(num_actions), 0);
  for (long long k = 0; k < out.total_bundles; ++k) {
    const int first = melody.note(k * rho);
    bool pure = true;
    for (long long t = 1; t < rho && pure; ++t) pure = (melody.note(k * rho + t) == first);
    if (pure)
      ++out.pure_bundles_by_action[static_cast<std::size_t>(first)];
    else
      ++out.heterogeneous;
  }
  return out;
}

}  // namespace unfolding
