#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "unfolding/counterpoint.hpp"
#include "unfolding/ne_solve.hpp"

using namespace unfolding;

namespace {

const NormalFormGame& mp() {
  static const NormalFormGame game = matching_pennies();
  return game;
}

PeriodicProfile mp_profile(const std::string& lit1, const std::string& lit2) {
  return make_profile(mp(), parse_strategy_literal(mp(), 0, lit1),
                      parse_strategy_literal(mp(), 1, lit2));
}

}  // namespace

TEST_CASE("bundle folding collapses to the plain folding for coprime periods") {
  const auto profile = mp_profile(";HT", ";HTT");
  const BundleFolding bundles = bundle_folding(profile);
  REQUIRE(bundles.rho == 1);
  REQUIRE(bundles.bundle_profiles.size() == 1);
  CHECK(bundles.bundle_profiles[0] == fold_profile(profile));
}

TEST_CASE("bundle folding splits residue classes") {
  const auto profile = mp_profile(";HHTT", ";HHHTTT");
  const BundleFolding bundles = bundle_folding(profile);
  REQUIRE(bundles.rho == 2);
  CHECK(bundles.bundle_profiles[0].p1.weights ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(bundles.bundle_profiles[0].p2.weights ==
        std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  CHECK(bundles.bundle_profiles[1].p1.weights ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(bundles.bundle_profiles[1].p2.weights ==
        std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("equal periods make every bundle profile a pure chord") {
  const auto profile = mp_profile(";HTT", ";THT");
  const BundleFolding bundles = bundle_folding(profile);
  REQUIRE(bundles.rho == 3);
  for (long long j = 0; j < 3; ++j) {
    for (int player = 0; player < 2; ++player) {
      const auto& w = bundles.bundle_profiles[static_cast<std::size_t>(j)].strategy(player).weights;
      CHECK(std::count(w.begin(), w.end(), Rational(1)) == 1);
    }
  }
}

TEST_CASE("unfolding payoff closed form") {
  const auto case1 = unfolding_payoff(mp_profile(";HT", ";HTT"));
  CHECK(case1.first == Rational(1, 2));
  CHECK(case1.second == Rational(1, 2));

  const auto profile = mp_profile(";HHTT", ";HHHTTT");
  CHECK(unfolding_payoff(profile) == avg_payoff_direct(profile));
  CHECK(unfolding_payoff(profile).first == Rational(1, 2));
}

TEST_CASE("coprime periods collapse to the folded game") {
  std::mt19937 rng(7501);
  for (int trial = 0; trial < 40; ++trial) {
    const NormalFormGame game = oracles::random_game(rng);
    long long t1 = 1 + rng() % 12, t2 = 1 + rng() % 12;
    if (std::gcd(t1, t2) != 1) {
      --trial;
      continue;
    }
    const auto profile =
        make_profile(game, PeriodicStrategy{{}, oracles::random_melody(rng, game.num_actions(0), t1)},
                     PeriodicStrategy{{}, oracles::random_melody(rng, game.num_actions(1), t2)});
    const MixedProfile folded = fold_profile(profile);
    CHECK(unfolding_payoff(profile) == expected_payoff(game, folded));
    CHECK(max_unfolding_deviation(profile) == max_deviation(game, folded));
  }
}

TEST_CASE("deviation gains on the worked example") {
  const auto profile = mp_profile(";HT", ";HTT");
  CHECK(unfolding_deviation_gain(profile, 0) == Rational(1, 6));
  CHECK(unfolding_deviation_gain(profile, 1) == 0);
  CHECK(max_unfolding_deviation(profile) == Rational(1, 6));
}

TEST_CASE("equal periods hand the losing player at least one half") {
  for (const auto& [lit1, lit2] : std::vector<std::pair<std::string, std::string>>{
           {";HT", ";HT"}, {";HT", ";TH"}, {";HHT", ";HTH"}, {";HHTT", ";HTTH"}}) {
    const auto profile = mp_profile(lit1, lit2);
    const auto payoffs = unfolding_payoff(profile);
    const int loser = payoffs.first <= payoffs.second ? 0 : 1;
    CHECK(unfolding_deviation_gain(profile, loser) >= Rational(1, 2));
  }
  CHECK(max_unfolding_deviation(mp_profile(";HT", ";TH")) == 1);
}

TEST_CASE("profiles whose bundle profiles are all equilibria have zero gain") {
  // Both players repeat the pure equilibrium of a coordination game.
  const NormalFormGame coord({"A", "B"}, {"A", "B"},
                             {{Rational(1), Rational(0)}, {Rational(0), Rational(0)}},
                             {{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
  const auto profile = make_profile(coord, PeriodicStrategy{{}, Melody{{0, 0}}},
                                    PeriodicStrategy{{}, Melody{{0, 0}}});
  CHECK(max_unfolding_deviation(profile) == 0);
}

TEST_CASE("best deviation melody reproduces the worked example") {
  const auto profile = mp_profile(";HT", ";HTT");
  CHECK(best_deviation_melody(profile, 0).notes == std::vector<int>{1, 1});  // (TT)
  CHECK(best_deviation_melody(profile, 1).notes == std::vector<int>{0, 1, 1});  // keeps HTT
}

TEST_CASE("the losing player's best deviation achieves payoff one at equal periods") {
  const auto profile = mp_profile(";HT", ";HT");
  const Melody reply = best_deviation_melody(profile, 1);
  const auto improved = unfolding_payoff(
      make_profile(mp(), profile.s1, PeriodicStrategy{profile.s2.prefix, reply}));
  CHECK(improved.second == 1);
}

TEST_CASE("substituting the best deviation melody realizes the gain exactly") {
  std::mt19937 rng(7502);
  for (int trial = 0; trial < 40; ++trial) {
    const NormalFormGame game = oracles::random_game(rng, 3);
    const auto profile = make_profile(
        game,
        PeriodicStrategy{oracles::random_prefix(rng, game.num_actions(0), 3),
                         oracles::random_melody(rng, game.num_actions(0), 1 + rng() % 8)},
        PeriodicStrategy{oracles::random_prefix(rng, game.num_actions(1), 3),
                         oracles::random_melody(rng, game.num_actions(1), 1 + rng() % 8)});
    for (int player = 0; player < 2; ++player) {
      const Melody deviation = best_deviation_melody(profile, player);
      CHECK(deviation.period() == profile.strategy(player).melody.period());
      const auto after = unfolding_payoff(oracles::with_melody(profile, player, deviation));
      const Rational expected = (player == 0 ? unfolding_payoff(profile).first
                                             : unfolding_payoff(profile).second) +
                                unfolding_deviation_gain(profile, player);
      CHECK((player == 0 ? after.first : after.second) == expected);
    }
  }
}

TEST_CASE("closed forms agree with piece enumeration and brute force") {
  std::mt19937 rng(7503);
  for (int trial = 0; trial < 30; ++trial) {
    const NormalFormGame game = oracles::random_game(rng, 3);
    const auto profile = make_profile(
        game,
        PeriodicStrategy{{}, oracles::random_melody(rng, game.num_actions(0), 1 + rng() % 5)},
        PeriodicStrategy{{}, oracles::random_melody(rng, game.num_actions(1), 1 + rng() % 5)});
    CHECK(unfolding_payoff(profile) == avg_payoff_direct(profile));
    CHECK(max_unfolding_deviation(profile) == oracles::brute_force_max_deviation(profile));
  }
  // Deeper periods on the two-action game, up to the full oracle range.
  for (int trial = 0; trial < 8; ++trial) {
    const auto profile = make_profile(mp(), PeriodicStrategy{{}, oracles::random_melody(rng, 2, 1 + rng() % 8)},
                                      PeriodicStrategy{{}, oracles::random_melody(rng, 2, 1 + rng() % 8)});
    CHECK(max_unfolding_deviation(profile) == oracles::brute_force_max_deviation(profile));
  }
}

TEST_CASE("bundle profiles average to the folding and respect the component floor") {
  std::mt19937 rng(7504);
  for (int trial = 0; trial < 30; ++trial) {
    const NormalFormGame game = oracles::random_game(rng, 3);
    const long long t1 = 1 + rng() % 12;
    const long long t2 = 1 + rng() % 12;
    const auto profile =
        make_profile(game, PeriodicStrategy{{}, oracles::random_melody(rng, game.num_actions(0), t1)},
                     PeriodicStrategy{{}, oracles::random_melody(rng, game.num_actions(1), t2)});
    const BundleFolding bundles = bundle_folding(profile);
    const MixedProfile folded = fold_profile(profile);
    for (int player = 0; player < 2; ++player) {
      const long long tau = player == 0 ? t1 : t2;
      const long long samples = tau / bundles.rho;
      for (int a = 0; a < game.num_actions(player); ++a) {
        Rational sum = 0;
        for (const MixedProfile& mu : bundles.bundle_profiles) {
          const Rational& w = mu.strategy(player).weight(a);
          sum += w;
          if (w != 0) CHECK(w >= Rational(bundles.rho, tau));
          CHECK(samples % denominator(w).convert_to<long long>() == 0);
        }
        CHECK(sum / bundles.rho == folded.strategy(player).weight(a));
      }
    }
  }
}

TEST_CASE("heterogeneous bundle counting") {
  const auto a = count_heterogeneous_bundles(Melody{{0, 0, 0, 1, 1, 1}}, 2, 2);
  CHECK(a.total_bundles == 3);
  CHECK(a.pure_bundles_by_action == std::vector<long long>{1, 1});
  CHECK(a.heterogeneous == 1);

  const auto b = count_heterogeneous_bundles(Melody{{0, 0, 1, 1, 1, 1}}, 2, 2);
  CHECK(b.total_bundles == 3);
  CHECK(b.pure_bundles_by_action == std::vector<long long>{1, 2});
  CHECK(b.heterogeneous == 0);

  CHECK_THROWS_AS(count_heterogeneous_bundles(Melody{{0, 1, 0}}, 2, 2), std::invalid_argument);
}
