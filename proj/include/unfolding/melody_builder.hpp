// Simple-melody construction: block melodies apportioning a target mixed
// strategy over a period, and the per-stage equilibrium sequence whose exact
// deviation gaps certify convergence (or its failure) in the unfolding game.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "unfolding/counterpoint.hpp"
#include "unfolding/errors.hpp"
#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"
#include "unfolding/schedules.hpp"
#include "unfolding/sequence.hpp"

namespace unfolding {

inline constexpr long long kMaxMelodyLength = 100'000'000;

struct Apportionment {
  std::vector<long long> counts;  // one entry per action, zero off the support
  long long tau = 0;
};

// Floor-then-remainder-to-last over the support in action-list order:
// nu_k = floor(sigma(a_k) * tau) for all supported actions but the last,
// which absorbs the remainder. Guarantees |nu_k/tau - sigma(a_k)| <= r/tau.
inline Apportionment apportion(const MixedStrategy& target, long long tau) {
  validate_strategy(target, static_cast<int>(target.weights.size()));
  std::vector<int> support;
  for (std::size_t a = 0; a < target.weights.size(); ++a)
    if (target.weights[a] > 0) support.push_back(static_cast<int>(a));
  if (tau < static_cast<long long>(support.size()))
    throw std::invalid_argument("period " + std::to_string(tau) +
                                " is smaller than the support size " +
                                std::to_string(support.size()));

  Apportionment out;
  out.tau = tau;
  out.counts.assign(target.weights.size(), 0);
  long long assigned = 0;
  for (std::size_t k = 0; k + 1 < support.size(); ++k) {
    const Rational scaled = target.weights[static_cast<std::size_t>(support[k])] * tau;
    const long long nu = static_cast<long long>(numerator(scaled) / denominator(scaled));
    out.counts[static_cast<std::size_t>(support[k])] = nu;
    assigned += nu;
  }
  out.counts[static_cast<std::size_t>(support.back())] = tau - assigned;
  return out;
}

// Block melody a_1^{nu_1} a_2^{nu_2} ... over the support of the target.
inline Melody simple_melody(const MixedStrategy& target, long long tau) {
  if (tau > kMaxMelodyLength) throw resource_limit_error("melody length exceeds the limit");
  const Apportionment parts = apportion(target, tau);
  Melody melody;
  melody.notes.reserve(static_cast<std::size_t>(tau));
  for (std::size_t a = 0; a < parts.counts.size(); ++a) {
    for (long long i = 0; i < parts.counts[a]; ++i) melody.notes.push_back(static_cast<int>(a));
  }
  return melody;
}

struct ConvergenceRecord {
  long long n = 0;
  long long tau1 = 0, tau2 = 0;
  Rational epsilon;        // f_{G^uf} of the constructed profile
  Rational fold_distance;  // L-inf distance of the folded profile from sigma*
  Rational u1, u2;
};

// Builds the simple-melody profile at each stage n and records its exact
// deviation gap. sigma_star must be an exact equilibrium of the game.
inline std::vector<ConvergenceRecord> equilibrium_sequence(const NormalFormGame& game,
                                                           const MixedProfile& sigma_star,
                                                           const Schedule& sched1,
                                                           const Schedule& sched2, long long n_from,
                                                           long long n_to) {
  validate_profile(game, sigma_star);
  if (max_deviation(game, sigma_star) != 0)
    throw std::invalid_argument("sigma_star is not an exact Nash equilibrium");
  if (n_from < 1 || n_to < n_from) throw std::invalid_argument("empty or invalid stage range");

  std::vector<ConvergenceRecord> records;
  records.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (long long n = n_from; n <= n_to; ++n) {
    ConvergenceRecord rec;
    rec.n = n;
    rec.tau1 = sched1.at(n);
    rec.tau2 = sched2.at(n);
    PeriodicStrategy s1{{}, simple_melody(sigma_star.p1, rec.tau1)};
    PeriodicStrategy s2{{}, simple_melody(sigma_star.p2, rec.tau2)};
    const PeriodicProfile profile = make_profile(game, std::move(s1), std::move(s2));
    rec.epsilon = max_unfolding_deviation(profile);
    rec.fold_distance = linf_distance(fold_profile(profile), sigma_star);
    const auto payoffs = unfolding_payoff(profile);
    rec.u1 = payoffs.first;
    rec.u2 = payoffs.second;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace unfolding
