#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "unfolding/game.hpp"
#include "unfolding/ne_solve.hpp"

using namespace unfolding;

TEST_CASE("matching pennies has exactly the uniform equilibrium") {
  const auto ne = solve_ne_support_enumeration(matching_pennies());
  REQUIRE(ne.size() == 1);
  CHECK(ne[0].p1.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(ne[0].p2.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("modified matching pennies has the interior equilibrium (delta, 1-delta)") {
  for (const Rational delta : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
    const NormalFormGame g = modified_matching_pennies(delta);
    const auto ne = solve_ne_support_enumeration(g);
    REQUIRE(ne.size() == 1);
    CHECK(ne[0].p1.weights == std::vector<Rational>{delta, 1 - delta});
    CHECK(ne[0].p2.weights == std::vector<Rational>{delta, 1 - delta});
    CHECK(max_deviation(g, ne[0]) == 0);
  }
}

TEST_CASE("strict dominance yields the single pure equilibrium") {
  // H strictly dominates for both players.
  const NormalFormGame g({"H", "T"}, {"H", "T"},
                         {{Rational(2), Rational(2)}, {Rational(0), Rational(0)}},
                         {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}});
  const auto ne = solve_ne_support_enumeration(g);
  REQUIRE(ne.size() == 1);
  CHECK(ne[0].p1.weights == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(ne[0].p2.weights == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("every reported equilibrium has zero deviation gap") {
  std::mt19937 rng(7201);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const NormalFormGame game = oracles::random_game(rng, 3);
    std::vector<MixedProfile> ne;
    try {
      ne = solve_ne_support_enumeration(game);
    } catch (const std::runtime_error&) {
      continue;  // degenerate instance outside the solver's coverage
    }
    ++solved;
    REQUIRE_FALSE(ne.empty());
    for (const auto& profile : ne) CHECK(max_deviation(game, profile) == 0);
  }
  CHECK(solved >= 35);
}

TEST_CASE("size limit is enforced") {
  std::vector<std::string> actions;
  for (int i = 0; i < 7; ++i) actions.push_back("a" + std::to_string(i));
  std::vector<std::vector<Rational>> table(7, std::vector<Rational>(7, Rational(0)));
  const NormalFormGame big(actions, actions, table, table);
  CHECK_THROWS_AS(solve_ne_support_enumeration(big), std::invalid_argument);
  CHECK_NOTHROW(solve_ne_support_enumeration(big, 7));
}
