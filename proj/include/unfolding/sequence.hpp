// Eventually periodic strategies: a finite prefix followed by a repeating
// melody. Folding, piece materialization, and the brute-force long-run
// average payoff. The declared melody length is the rationality level even
// when the fundamental period is shorter.
#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unfolding/errors.hpp"
#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"

namespace unfolding {

inline constexpr std::size_t kDefaultPieceLimit = 1'000'000;

struct Melody {
  std::vector<int> notes;

  long long period() const { return static_cast<long long>(notes.size()); }
  int note(long long j) const { return notes.at(static_cast<std::size_t>(j)); }
  bool operator==(const Melody&) const = default;
};

struct PeriodicStrategy {
  std::vector<int> prefix;
  Melody melody;

  bool operator==(const PeriodicStrategy&) const = default;
};

struct PeriodicProfile {
  const NormalFormGame* game = nullptr;
  PeriodicStrategy s1, s2;

  const PeriodicStrategy& strategy(int player) const {
    require_player(player);
    return player == 0 ? s1 : s2;
  }
};

inline void validate_melody(const NormalFormGame& game, int player, const Melody& melody) {
  if (melody.notes.empty()) throw std::invalid_argument("melody must be non-empty");
  for (int a : melody.notes) {
    if (a < 0 || a >= game.num_actions(player))
      throw std::invalid_argument("melody contains an illegal action for player " +
                                  std::to_string(player + 1));
  }
}

inline void validate_strategy(const NormalFormGame& game, int player, const PeriodicStrategy& s) {
  validate_melody(game, player, s.melody);
  for (int a : s.prefix) {
    if (a < 0 || a >= game.num_actions(player))
      throw std::invalid_argument("prefix contains an illegal action for player " +
                                  std::to_string(player + 1));
  }
}

inline void validate_periodic_profile(const PeriodicProfile& profile) {
  if (profile.game == nullptr) throw std::invalid_argument("profile has no game");
  validate_strategy(*profile.game, 0, profile.s1);
  validate_strategy(*profile.game, 1, profile.s2);
}

inline PeriodicProfile make_profile(const NormalFormGame& game, PeriodicStrategy s1,
                                    PeriodicStrategy s2) {
  PeriodicProfile profile{&game, std::move(s1), std::move(s2)};
  validate_periodic_profile(profile);
  return profile;
}

// Limit-frequency mixed strategy of the melody; the prefix never matters.
inline MixedStrategy fold(const PeriodicStrategy& s, int num_actions) {
  if (s.melody.notes.empty()) throw std::invalid_argument("melody must be non-empty");
  std::vector<long long> counts(static_cast<std::size_t>(num_actions), 0);
  for (int a : s.melody.notes) ++counts.at(static_cast<std::size_t>(a));
  MixedStrategy mu;
  mu.weights.reserve(counts.size());
  for (long long c : counts) mu.weights.emplace_back(c, s.melody.period());
  return mu;
}

inline MixedProfile fold_profile(const PeriodicProfile& profile) {
  validate_periodic_profile(profile);
  return {fold(profile.s1, profile.game->num_actions(0)),
          fold(profile.s2, profile.game->num_actions(1))};
}

inline std::optional<long long> lcm_within(long long a, long long b, long long limit) {
  const long long g = std::gcd(a, b);
  const unsigned __int128 l = static_cast<unsigned __int128>(a / g) * static_cast<unsigned __int128>(b);
  if (l > static_cast<unsigned __int128>(limit)) return std::nullopt;
  return static_cast<long long>(l);
}

// One full joint cycle of pure action pairs. Prefixes are stripped: both
// melodies are taken to start together at the common offset
// max(|prefix_1|, |prefix_2|), so prefixes never affect results.
inline std::vector<std::pair<int, int>> piece(const PeriodicProfile& profile,
                                              std::size_t limit = kDefaultPieceLimit) {
  validate_periodic_profile(profile);
  const Melody& m1 = profile.s1.melody;
  const Melody& m2 = profile.s2.melody;
  const auto len = lcm_within(m1.period(), m2.period(), static_cast<long long>(limit));
  if (!len)
    throw resource_limit_error("piece length lcm(" + std::to_string(m1.period()) + ", " +
                               std::to_string(m2.period()) + ") exceeds the materialization limit");
  std::vector<std::pair<int, int>> rounds;
  rounds.reserve(static_cast<std::size_t>(*len));
  for (long long t = 0; t < *len; ++t)
    rounds.emplace_back(m1.note(t % m1.period()), m2.note(t % m2.period()));
  return rounds;
}

// Long-run average payoff by direct enumeration of one piece.
inline std::pair<Rational, Rational> avg_payoff_direct(const PeriodicProfile& profile,
                                                       std::size_t limit = kDefaultPieceLimit) {
  const auto rounds = piece(profile, limit);
  Rational total1 = 0, total2 = 0;
  for (const auto& [a, b] : rounds) {
    total1 += profile.game->payoff(0, a, b);
    total2 += profile.game->payoff(1, a, b);
  }
  const long long len = static_cast<long long>(rounds.size());
  return {total1 / len, total2 / len};
}

// Smallest divisor d of the declared length such that the melody is a
// repetition of its first d notes.
inline long long fundamental_period(const Melody& melody) {
  const long long tau = melody.period();
  if (tau == 0) throw std::invalid_argument("melody must be non-empty");
  for (long long d = 1; d <= tau; ++d) {
    if (tau % d != 0) continue;
    bool repeats = true;
    for (long long t = d; t < tau && repeats; ++t) repeats = (melody.note(t) == melody.note(t % d));
    if (repeats) return d;
  }
  return tau;
}

namespace detail {

inline std::vector<int> parse_action_run(const NormalFormGame& game, int player,
                                         std::string_view text) {
  std::vector<int> actions;
  if (text.empty()) return actions;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view token =
          comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
      actions.push_back(game.action_index(player, token));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return actions;
  }
  // No commas: a single identifier, or a run of single-character identifiers.
  const int whole = game.find_action(player, text);
  if (whole >= 0) {
    actions.push_back(whole);
    return actions;
  }
  for (char c : text) actions.push_back(game.action_index(player, std::string_view(&c, 1)));
  return actions;
}

}  // namespace detail

// Literal syntax "x;y": prefix and melody as identifier runs, comma-separated
// unless every identifier is a single character.
inline PeriodicStrategy parse_strategy_literal(const NormalFormGame& game, int player,
                                               std::string_view literal) {
  const std::size_t semi = literal.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("strategy literal must contain ';' between prefix and melody");
  if (literal.find(';', semi + 1) != std::string_view::npos)
    throw std::invalid_argument("strategy literal must contain exactly one ';'");
  PeriodicStrategy s;
  s.prefix = detail::parse_action_run(game, player, literal.substr(0, semi));
  s.melody.notes = detail::parse_action_run(game, player, literal.substr(semi + 1));
  if (s.melody.notes.empty()) throw std::invalid_argument("strategy literal has an empty melody");
  return s;
}

inline std::string strategy_literal(const NormalFormGame& game, int player,
                                    const PeriodicStrategy& s) {
  bool single = true;
  for (const std::string& name : game.action_names(player)) single &= (name.size() == 1);
  auto render = [&](const std::vector<int>& actions) {
    std::string out;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      if (!single && i > 0) out += ',';
      out += game.action_name(player, actions[i]);
    }
    return out;
  };
  return render(s.prefix) + ";" + render(s.melody.notes);
}

}  // namespace unfolding
