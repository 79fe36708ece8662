// Finite-state machines whose deterministic runs are detected as eventually
// periodic output streams: input-free Moore machines, and bounded-tape Turing
// machines compiled to Moore machines over their configuration graph.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unfolding/errors.hpp"
#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"
#include "unfolding/sequence.hpp"

namespace unfolding {

inline constexpr std::size_t kDefaultConfigLimit = 1'000'000;

struct MooreMachine {
  std::vector<std::string> state_names;
  int start = 0;
  std::vector<int> transition;      // one successor per state
  std::vector<std::string> output;  // action identifier emitted in each state

  int num_states() const { return static_cast<int>(state_names.size()); }
};

inline void validate_moore(const MooreMachine& m) {
  const int n = m.num_states();
  if (n == 0) throw std::invalid_argument("machine must have at least one state");
  if (m.start < 0 || m.start >= n) throw std::invalid_argument("start state out of range");
  if (static_cast<int>(m.transition.size()) != n || static_cast<int>(m.output.size()) != n)
    throw std::invalid_argument("transition/output tables must cover every state");
  for (int t : m.transition)
    if (t < 0 || t >= n) throw std::invalid_argument("transition target out of range");
}

struct EventuallyPeriodic {
  std::vector<std::string> prefix;
  std::vector<std::string> period;
};

// Runs the machine until the first repeated state. The emitted prefix+period
// reproduce the infinite output stream exactly, with
// |prefix| + |period| <= number of states (pigeonhole).
inline EventuallyPeriodic run_moore(const MooreMachine& machine, long long max_steps) {
  validate_moore(machine);
  const int n = machine.num_states();
  if (max_steps < n + 1)
    throw std::invalid_argument("max_steps must be at least the state count plus one");

  std::vector<long long> first_seen(static_cast<std::size_t>(n), -1);
  std::vector<std::string> outputs;
  int state = machine.start;
  for (long long step = 0; step <= max_steps; ++step) {
    if (first_seen[static_cast<std::size_t>(state)] >= 0) {
      const long long cycle_start = first_seen[static_cast<std::size_t>(state)];
      EventuallyPeriodic out;
      out.prefix.assign(outputs.begin(), outputs.begin() + cycle_start);
      out.period.assign(outputs.begin() + cycle_start, outputs.end());
      return out;
    }
    first_seen[static_cast<std::size_t>(state)] = step;
    outputs.push_back(machine.output[static_cast<std::size_t>(state)]);
    state = machine.transition[static_cast<std::size_t>(state)];
  }
  throw std::logic_error("no repeated state within the pigeonhole bound");
}

struct TmRule {
  int next_state = 0;
  int write_symbol = 0;
  int move = 1;  // -1 left, +1 right
};

struct BoundedTapeTM {
  std::vector<std::string> state_names;
  std::vector<std::string> tape_symbols;
  int cells = 1;  // k usable tape cells
  std::vector<std::vector<std::optional<TmRule>>> rules;  // [state][read symbol]
  std::vector<int> initial_tape;
  int head_start = 0;
  int output_cell = 0;  // the cell whose content is the machine's action
};

inline void validate_tm(const BoundedTapeTM& tm) {
  if (tm.state_names.empty()) throw std::invalid_argument("machine must have at least one state");
  if (tm.tape_symbols.empty()) throw std::invalid_argument("empty tape alphabet");
  if (tm.cells < 1) throw std::invalid_argument("tape must have at least one cell");
  if (static_cast<int>(tm.initial_tape.size()) != tm.cells)
    throw std::invalid_argument("initial tape must cover exactly the usable cells");
  if (tm.head_start < 0 || tm.head_start >= tm.cells)
    throw std::invalid_argument("head start out of range");
  if (tm.output_cell < 0 || tm.output_cell >= tm.cells)
    throw std::invalid_argument("output cell out of range");
  if (tm.rules.size() != tm.state_names.size())
    throw std::invalid_argument("rule table must cover every state");
  for (const auto& row : tm.rules) {
    if (row.size() != tm.tape_symbols.size())
      throw std::invalid_argument("rule table must cover every tape symbol");
    for (const auto& rule : row) {
      if (!rule) continue;
      if (rule->next_state < 0 || rule->next_state >= static_cast<int>(tm.state_names.size()))
        throw std::invalid_argument("rule target state out of range");
      if (rule->write_symbol < 0 || rule->write_symbol >= static_cast<int>(tm.tape_symbols.size()))
        throw std::invalid_argument("rule write symbol out of range");
      if (rule->move != -1 && rule->move != 1)
        throw std::invalid_argument("rule move must be L or R");
    }
  }
  for (int s : tm.initial_tape)
    if (s < 0 || s >= static_cast<int>(tm.tape_symbols.size()))
      throw std::invalid_argument("initial tape symbol out of range");
}

// |Q| * |Gamma|^k * k, the configuration-count bound of the simulation.
inline Int tm_config_bound(const BoundedTapeTM& tm) {
  Int bound = static_cast<long long>(tm.state_names.size());
  for (int i = 0; i < tm.cells; ++i) bound *= static_cast<long long>(tm.tape_symbols.size());
  bound *= tm.cells;
  return bound;
}

// Compiles the TM into the Moore machine over its reachable configurations
// (state, tape contents, head position); the output of a configuration is the
// symbol under the designated output cell. A head move off the usable cells
// means the machine does not actually fit in k cells and is rejected.
inline MooreMachine tm_to_fa(const BoundedTapeTM& tm,
                             std::size_t config_limit = kDefaultConfigLimit) {
  validate_tm(tm);
  if (tm_config_bound(tm) > Int(static_cast<long long>(config_limit)))
    throw resource_limit_error("configuration bound exceeds the limit");

  struct Config {
    int state;
    std::vector<int> tape;
    int head;
    bool operator<(const Config& o) const {
      if (state != o.state) return state < o.state;
      if (head != o.head) return head < o.head;
      return tape < o.tape;
    }
  };

  std::map<Config, int> index_of;
  std::vector<Config> configs;
  std::vector<int> transition;
  std::vector<std::string> output;

  Config initial{0, tm.initial_tape, tm.head_start};
  initial.state = 0;
  configs.push_back(initial);
  index_of[initial] = 0;

  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (configs.size() > config_limit)
      throw resource_limit_error("reachable configuration count exceeds the limit");
    const Config current = configs[i];
    const int read = current.tape[static_cast<std::size_t>(current.head)];
    const auto& rule = tm.rules[static_cast<std::size_t>(current.state)][static_cast<std::size_t>(read)];
    if (!rule)
      throw std::invalid_argument("rule missing for reachable configuration (state " +
                                  tm.state_names[static_cast<std::size_t>(current.state)] +
                                  ", symbol " + tm.tape_symbols[static_cast<std::size_t>(read)] +
                                  ")");
    Config next = current;
    next.state = rule->next_state;
    next.tape[static_cast<std::size_t>(current.head)] = rule->write_symbol;
    next.head += rule->move;
    if (next.head < 0 || next.head >= tm.cells)
      throw std::invalid_argument("head leaves the usable cells: machine is malformed");

    auto [it, inserted] = index_of.emplace(next, static_cast<int>(configs.size()));
    if (inserted) configs.push_back(next);
    transition.push_back(it->second);
    output.push_back(tm.tape_symbols[static_cast<std::size_t>(
        current.tape[static_cast<std::size_t>(tm.output_cell)])]);
  }

  MooreMachine fa;
  fa.start = 0;
  fa.transition = std::move(transition);
  fa.output = std::move(output);
  fa.state_names.reserve(configs.size());
  for (const Config& c : configs) {
    std::string name = tm.state_names[static_cast<std::size_t>(c.state)] + "@" +
                       std::to_string(c.head) + ":";
    for (int s : c.tape) name += tm.tape_symbols[static_cast<std::size_t>(s)];
    fa.state_names.push_back(std::move(name));
  }
  return fa;
}

// "x;y" literal over the emitted identifiers; usable without a game.
inline std::string strategy_literal_of(const EventuallyPeriodic& ep) {
  bool single = true;
  for (const auto& run : {ep.prefix, ep.period})
    for (const std::string& id : run) single &= (id.size() == 1);
  auto render = [&](const std::vector<std::string>& run) {
    std::string out;
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (!single && i > 0) out += ',';
      out += run[i];
    }
    return out;
  };
  return render(ep.prefix) + ";" + render(ep.period);
}

inline PeriodicStrategy to_strategy(const EventuallyPeriodic& ep, const NormalFormGame& game,
                                    int player) {
  if (ep.period.empty()) throw std::invalid_argument("empty period");
  PeriodicStrategy s;
  for (const std::string& id : ep.prefix) s.prefix.push_back(game.action_index(player, id));
  for (const std::string& id : ep.period) s.melody.notes.push_back(game.action_index(player, id));
  return s;
}

}  // namespace unfolding
