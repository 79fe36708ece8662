#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "unfolding/melody_builder.hpp"
#include "unfolding/ne_solve.hpp"

using namespace unfolding;

namespace {

NormalFormGame rock_paper_scissors() {
  auto r = [](int v) { return Rational(v); };
  return NormalFormGame({"R", "P", "S"}, {"R", "P", "S"},
                        {{r(0), r(-1), r(1)}, {r(1), r(0), r(-1)}, {r(-1), r(1), r(0)}},
                        {{r(0), r(1), r(-1)}, {r(-1), r(0), r(1)}, {r(1), r(-1), r(0)}});
}

}  // namespace

TEST_CASE("apportionment follows floor-then-remainder") {
  CHECK(apportion(MixedStrategy{{Rational(1, 3), Rational(2, 3)}}, 3).counts ==
        std::vector<long long>{1, 2});
  CHECK(apportion(MixedStrategy{{Rational(1, 2), Rational(1, 2)}}, 5).counts ==
        std::vector<long long>{2, 3});
  CHECK(apportion(MixedStrategy{{Rational(1), Rational(0)}}, 4).counts ==
        std::vector<long long>{4, 0});
  CHECK_THROWS_AS(apportion(MixedStrategy{{Rational(1, 2), Rational(1, 2)}}, 1),
                  std::invalid_argument);
}

TEST_CASE("simple melodies are block melodies over the support") {
  CHECK(simple_melody(MixedStrategy{{Rational(1, 3), Rational(2, 3)}}, 3).notes ==
        std::vector<int>{0, 1, 1});
  CHECK(simple_melody(MixedStrategy{{Rational(1, 2), Rational(1, 2)}}, 6).notes ==
        std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(simple_melody(MixedStrategy{{Rational(1), Rational(0)}}, 4).notes ==
        std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("folding a simple melody lands within r/tau of the target") {
  std::mt19937 rng(7601);
  for (int trial = 0; trial < 40; ++trial) {
    const int actions = 2 + static_cast<int>(rng() % 3);
    const MixedStrategy target = oracles::random_mixed(rng, actions);
    int support = 0;
    for (const Rational& w : target.weights) support += (w > 0);
    const long long tau = support + static_cast<long long>(rng() % 40);
    const Melody melody = simple_melody(target, tau);
    REQUIRE(melody.period() == tau);
    const MixedStrategy folded = fold(PeriodicStrategy{{}, melody}, actions);
    CHECK(linf_distance(folded, target) <= Rational(support, tau));
  }
}

TEST_CASE("equilibrium sequence on matching pennies with schedules (n, n+1)") {
  const NormalFormGame game = matching_pennies();
  const MixedProfile sigma = solve_ne_support_enumeration(game).front();
  const auto records = equilibrium_sequence(game, sigma, parse_schedule_literal("n"),
                                            parse_schedule_literal("n+1"), 2, 40);
  CHECK(records.front().n == 2);
  CHECK(records.front().tau1 == 2);
  CHECK(records.front().tau2 == 3);
  CHECK(records.front().epsilon == Rational(1, 6));
  CHECK(records.front().u1 == Rational(1, 2));
  CHECK(records.front().u2 == Rational(1, 2));
  // epsilon_n = 1/(2n) at odd n and 1/(2(n+1)) at even n for this family.
  for (const auto& rec : records) {
    const Rational expected = rec.n % 2 == 0 ? Rational(1, 2 * (rec.n + 1)) : Rational(1, 2 * rec.n);
    CHECK(rec.epsilon == expected);
    CHECK(rec.fold_distance <= Rational(2, rec.n));
  }
}

TEST_CASE("equilibrium sequence at stage 200 is tightly converged") {
  const NormalFormGame game = matching_pennies();
  const MixedProfile sigma = solve_ne_support_enumeration(game).front();
  const auto records = equilibrium_sequence(game, sigma, parse_schedule_literal("n"),
                                            parse_schedule_literal("n+1"), 200, 200);
  CHECK(records[0].epsilon <= Rational(1, 100));
  CHECK(records[0].fold_distance <= Rational(1, 100));
}

TEST_CASE("identical schedules never converge in matching pennies") {
  const NormalFormGame game = matching_pennies();
  const MixedProfile sigma = solve_ne_support_enumeration(game).front();
  const auto records = equilibrium_sequence(game, sigma, parse_schedule_literal("n"),
                                            parse_schedule_literal("n"), 2, 25);
  for (const auto& rec : records) CHECK(rec.epsilon >= Rational(1, 2));
}

TEST_CASE("equilibrium sequence validates its inputs") {
  const NormalFormGame game = matching_pennies();
  const MixedProfile not_ne{MixedStrategy{{Rational(1), Rational(0)}},
                            MixedStrategy{{Rational(1), Rational(0)}}};
  CHECK_THROWS_AS(equilibrium_sequence(game, not_ne, parse_schedule_literal("n"),
                                       parse_schedule_literal("n+1"), 2, 5),
                  std::invalid_argument);
  const MixedProfile sigma = solve_ne_support_enumeration(game).front();
  CHECK_THROWS_AS(equilibrium_sequence(game, sigma, parse_schedule_literal("n"),
                                       parse_schedule_literal("n+1"), 1, 5),
                  std::invalid_argument);  // tau_1(1) = 1 < support size 2
}

TEST_CASE("bundle profiles of the construction approach the target uniformly") {
  // Finite-stage proxy for the uniform bundle convergence: the largest
  // bundle-to-target distance obeys r*(1/d1 + 1/d2) + max_i r_i/tau_i.
  const NormalFormGame games[] = {matching_pennies(), rock_paper_scissors()};
  for (const NormalFormGame& game : games) {
    const MixedProfile sigma = solve_ne_support_enumeration(game).front();
    int r = 0;
    for (int player = 0; player < 2; ++player) {
      int support = 0;
      for (const Rational& w : sigma.strategy(player).weights) support += (w > 0);
      r = std::max(r, support);
    }
    for (const auto& [lit1, lit2] :
         std::vector<std::pair<std::string, std::string>>{{"2*n", "2*n+4"}, {"4*n", "4*n+8"}}) {
      const Schedule s1 = parse_schedule_literal(lit1);
      const Schedule s2 = parse_schedule_literal(lit2);
      for (long long n = r + 2; n <= 40; n += 7) {
        const long long t1 = s1.at(n), t2 = s2.at(n);
        const auto profile =
            make_profile(game, PeriodicStrategy{{}, simple_melody(sigma.p1, t1)},
                         PeriodicStrategy{{}, simple_melody(sigma.p2, t2)});
        const BundleFolding bundles = bundle_folding(profile);
        Rational worst = 0;
        for (const MixedProfile& mu : bundles.bundle_profiles)
          worst = std::max(worst, linf_distance(mu, sigma));
        const long long d1 = t1 / bundles.rho, d2 = t2 / bundles.rho;
        const Rational allowance = Rational(r) * (Rational(1, d1) + Rational(1, d2)) +
                                   std::max(Rational(r, t1), Rational(r, t2));
        CHECK(worst <= allowance);
      }
    }
  }
}

TEST_CASE("simple melodies have few heterogeneous bundles") {
  const MixedStrategy targets[] = {MixedStrategy{{Rational(1, 2), Rational(1, 2)}},
                                   MixedStrategy{{Rational(1, 7), Rational(2, 7), Rational(4, 7)}}};
  for (const MixedStrategy& target : targets) {
    const int r = static_cast<int>(target.weights.size());
    for (long long tau = 3 * r; tau <= 120; tau += 13) {
      const Melody melody = simple_melody(target, tau);
      for (long long rho = 1; rho <= tau; ++rho) {
        if (tau % rho != 0 || tau / rho < 3 * r) continue;
        CHECK(count_heterogeneous_bundles(melody, rho, r).heterogeneous <= r - 1);
      }
    }
  }
}
