// Test-only oracles, independent of the closed-form paths they check:
// exhaustive melody enumeration scored by direct piece averaging, direct
// machine simulation, and random-instance generators.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "unfolding/unfolding.hpp"

namespace oracles {

using namespace unfolding;

inline bool next_melody(std::vector<int>& notes, int num_actions) {
  for (std::size_t i = notes.size(); i-- > 0;) {
    if (++notes[i] < num_actions) return true;
    notes[i] = 0;
  }
  return false;
}

inline PeriodicProfile with_melody(const PeriodicProfile& profile, int player, Melody melody) {
  PeriodicProfile changed = profile;
  (player == 0 ? changed.s1 : changed.s2).melody = std::move(melody);
  return changed;
}

// Max average payoff of `player` over all melodies of its declared period,
// each scored by enumerating the piece.
inline Rational brute_force_best_deviation_payoff(const PeriodicProfile& profile, int player) {
  const long long tau = profile.strategy(player).melody.period();
  const int actions = profile.game->num_actions(player);
  std::vector<int> notes(static_cast<std::size_t>(tau), 0);
  bool first = true;
  Rational best;
  do {
    const auto payoff = avg_payoff_direct(with_melody(profile, player, Melody{notes}));
    const Rational u = player == 0 ? payoff.first : payoff.second;
    if (first || u > best) {
      best = u;
      first = false;
    }
  } while (next_melody(notes, actions));
  return best;
}

inline Rational brute_force_deviation_gain(const PeriodicProfile& profile, int player) {
  const auto current = avg_payoff_direct(profile);
  return brute_force_best_deviation_payoff(profile, player) -
         (player == 0 ? current.first : current.second);
}

inline Rational brute_force_max_deviation(const PeriodicProfile& profile) {
  return std::max(brute_force_deviation_gain(profile, 0), brute_force_deviation_gain(profile, 1));
}

// Max average payoff over all melodies of every period p <= tau_max.
inline Rational brute_force_flexible_best_payoff(const PeriodicProfile& profile, int player,
                                                 long long tau_max) {
  bool first = true;
  Rational best;
  for (long long p = 1; p <= tau_max; ++p) {
    std::vector<int> notes(static_cast<std::size_t>(p), 0);
    do {
      const auto payoff = avg_payoff_direct(with_melody(profile, player, Melody{notes}));
      const Rational u = player == 0 ? payoff.first : payoff.second;
      if (first || u > best) {
        best = u;
        first = false;
      }
    } while (next_melody(notes, profile.game->num_actions(player)));
  }
  return best;
}

inline std::vector<std::string> simulate_moore(const MooreMachine& machine, long long steps) {
  std::vector<std::string> out;
  int state = machine.start;
  for (long long t = 0; t < steps; ++t) {
    out.push_back(machine.output[static_cast<std::size_t>(state)]);
    state = machine.transition[static_cast<std::size_t>(state)];
  }
  return out;
}

inline std::vector<std::string> simulate_tm(const BoundedTapeTM& tm, long long steps) {
  std::vector<std::string> out;
  int state = 0;
  std::vector<int> tape = tm.initial_tape;
  int head = tm.head_start;
  for (long long t = 0; t < steps; ++t) {
    out.push_back(tm.tape_symbols[static_cast<std::size_t>(tape[static_cast<std::size_t>(tm.output_cell)])]);
    const int read = tape[static_cast<std::size_t>(head)];
    const auto& rule = tm.rules[static_cast<std::size_t>(state)][static_cast<std::size_t>(read)];
    if (!rule) throw std::runtime_error("oracle: missing rule");
    tape[static_cast<std::size_t>(head)] = rule->write_symbol;
    state = rule->next_state;
    head += rule->move;
    if (head < 0 || head >= tm.cells) throw std::runtime_error("oracle: head out of range");
  }
  return out;
}

inline std::vector<std::string> stream_of(const EventuallyPeriodic& ep, long long steps) {
  std::vector<std::string> out;
  for (long long t = 0; t < steps; ++t) {
    if (t < static_cast<long long>(ep.prefix.size()))
      out.push_back(ep.prefix[static_cast<std::size_t>(t)]);
    else
      out.push_back(ep.period[static_cast<std::size_t>(
          (t - static_cast<long long>(ep.prefix.size())) % static_cast<long long>(ep.period.size()))]);
  }
  return out;
}

// --- random instances -------------------------------------------------

inline NormalFormGame random_game(std::mt19937& rng, int max_actions = 4) {
  std::uniform_int_distribution<int> size_dist(1, max_actions);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 9);
  const int n1 = size_dist(rng);
  const int n2 = size_dist(rng);
  std::vector<std::string> a1, a2;
  for (int i = 0; i < n1; ++i) a1.push_back("a" + std::to_string(i));
  for (int i = 0; i < n2; ++i) a2.push_back("b" + std::to_string(i));
  auto table = [&]() {
    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(n1));
    for (auto& row : t) {
      for (int j = 0; j < n2; ++j) row.emplace_back(num_dist(rng), den_dist(rng));
    }
    return t;
  };
  return NormalFormGame(a1, a2, table(), table());
}

inline MixedStrategy random_mixed(std::mt19937& rng, int num_actions) {
  std::uniform_int_distribution<int> w_dist(0, 9);
  std::vector<int> raw(static_cast<std::size_t>(num_actions));
  int total = 0;
  for (int& w : raw) total += (w = w_dist(rng));
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  MixedStrategy s;
  for (int w : raw) s.weights.emplace_back(w, total);
  return s;
}

inline Melody random_melody(std::mt19937& rng, int num_actions, long long length) {
  std::uniform_int_distribution<int> note_dist(0, num_actions - 1);
  Melody m;
  for (long long i = 0; i < length; ++i) m.notes.push_back(note_dist(rng));
  return m;
}

inline std::vector<int> random_prefix(std::mt19937& rng, int num_actions, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> note_dist(0, num_actions - 1);
  std::vector<int> prefix(static_cast<std::size_t>(len_dist(rng)));
  for (int& a : prefix) a = note_dist(rng);
  return prefix;
}

}  // namespace oracles
