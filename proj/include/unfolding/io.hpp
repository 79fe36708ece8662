// File formats: games and machine descriptions as JSON, plus small literal
// parsers shared by the CLI. Rationals are written as integers when exact
// and as "p/q" strings otherwise, so round-trips are value-exact.
#pragma once

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unfolding/automata.hpp"
#include "unfolding/game.hpp"
#include "unfolding/rational.hpp"

namespace unfolding {

using json = nlohmann::ordered_json;

inline Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw std::invalid_argument("rationals must be integers or \"p/q\" strings");
}

inline json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) {
    const Int num = numerator(r);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
      return json(num.convert_to<long long>());
  }
  return json(to_string(r));
}

inline NormalFormGame game_from_json(const json& j) {
  for (const char* key : {"actions_p1", "actions_p2", "payoff_p1", "payoff_p2"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("game file missing key ") + key);
  }
  const auto actions1 = j.at("actions_p1").get<std::vector<std::string>>();
  const auto actions2 = j.at("actions_p2").get<std::vector<std::string>>();
  auto table = [&](const json& rows) {
    std::vector<std::vector<Rational>> out;
    for (const json& row : rows) {
      std::vector<Rational> r;
      for (const json& cell : row) r.push_back(rational_from_json(cell));
      out.push_back(std::move(r));
    }
    return out;
  };
  return NormalFormGame(actions1, actions2, table(j.at("payoff_p1")), table(j.at("payoff_p2")));
}

inline json game_to_json(const NormalFormGame& game) {
  json j;
  j["actions_p1"] = game.action_names(0);
  j["actions_p2"] = game.action_names(1);
  for (int player = 0; player < 2; ++player) {
    json rows = json::array();
    for (int a = 0; a < game.num_actions(0); ++a) {
      json row = json::array();
      for (int b = 0; b < game.num_actions(1); ++b) row.push_back(rational_to_json(game.payoff(player, a, b)));
      rows.push_back(std::move(row));
    }
    j[player == 0 ? "payoff_p1" : "payoff_p2"] = std::move(rows);
  }
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

inline NormalFormGame load_game(const std::string& path) { return game_from_json(load_json_file(path)); }

inline void save_game(const NormalFormGame& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << game_to_json(game).dump(2) << "\n";
}

inline MooreMachine moore_from_json(const json& j) {
  MooreMachine m;
  m.state_names = j.at("states").get<std::vector<std::string>>();
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < m.state_names.size(); ++i)
      if (m.state_names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown state: " + name);
  };
  m.start = index_of(j.at("start").get<std::string>());
  m.transition.resize(m.state_names.size());
  m.output.resize(m.state_names.size());
  const json& transitions = j.at("transitions");
  const json& outputs = j.at("outputs");
  for (std::size_t i = 0; i < m.state_names.size(); ++i) {
    const std::string& name = m.state_names[i];
    if (!transitions.contains(name)) throw std::invalid_argument("missing transition for " + name);
    if (!outputs.contains(name)) throw std::invalid_argument("missing output for " + name);
    m.transition[i] = index_of(transitions.at(name).get<std::string>());
    m.output[i] = outputs.at(name).get<std::string>();
  }
  validate_moore(m);
  return m;
}

inline BoundedTapeTM tm_from_json(const json& j) {
  BoundedTapeTM tm;
  tm.state_names = j.at("states").get<std::vector<std::string>>();
  tm.tape_symbols = j.at("tape_alphabet").get<std::vector<std::string>>();
  tm.cells = j.at("cells").get<int>();
  auto state_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < tm.state_names.size(); ++i)
      if (tm.state_names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown state: " + name);
  };
  auto symbol_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < tm.tape_symbols.size(); ++i)
      if (tm.tape_symbols[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown tape symbol: " + name);
  };
  for (const auto& sym : j.at("initial_tape").get<std::vector<std::string>>())
    tm.initial_tape.push_back(symbol_index(sym));
  tm.head_start = j.value("head", 0);
  tm.output_cell = j.value("output_cell", 0);
  tm.rules.assign(tm.state_names.size(),
                  std::vector<std::optional<TmRule>>(tm.tape_symbols.size(), std::nullopt));
  for (const json& rule : j.at("rules")) {
    const int state = state_index(rule.at("state").get<std::string>());
    const int read = symbol_index(rule.at("read").get<std::string>());
    TmRule r;
    r.next_state = state_index(rule.at("next").get<std::string>());
    r.write_symbol = symbol_index(rule.at("write").get<std::string>());
    const std::string move = rule.at("move").get<std::string>();
    if (move == "L")
      r.move = -1;
    else if (move == "R")
      r.move = 1;
    else
      throw std::invalid_argument("rule move must be \"L\" or \"R\"");
    auto& slot = tm.rules[static_cast<std::size_t>(state)][static_cast<std::size_t>(read)];
    if (slot) throw std::invalid_argument("duplicate rule for state/symbol pair");
    slot = r;
  }
  validate_tm(tm);
  return tm;
}

// Mixed profile literal "w1,w2,...;w1,w2,..." with exact rational weights.
inline MixedProfile parse_mixed_profile(const NormalFormGame& game, const std::string& text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("profile literal must contain ';' between the two strategies");
  auto parse_side = [&](const std::string& part, int player) {
    MixedStrategy s;
    std::size_t pos = 0;
    while (pos <= part.size() && !part.empty()) {
      const std::size_t comma = part.find(',', pos);
      const std::string token =
          comma == std::string::npos ? part.substr(pos) : part.substr(pos, comma - pos);
      s.weights.push_back(parse_rational(token));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    validate_strategy(s, game.num_actions(player));
    return s;
  };
  return {parse_side(text.substr(0, semi), 0), parse_side(text.substr(semi + 1), 1)};
}

}  // namespace unfolding
