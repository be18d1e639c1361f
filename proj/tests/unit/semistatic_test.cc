#include "superhedge/semistatic.h"

#include <gtest/gtest.h>

#include "superhedge/casebook.h"
#include "superhedge/dual.h"
#include "superhedge/polar.h"
#include "testing.h"

namespace superhedge {
namespace {

using testing::one_period;
using testing::payoff;
using testing::R;
using testing::Rs;

bool plan_holds(const Market& m, const Payoff& g, const SemiStaticPlan& plan) {
  if (!plan.price.is_finite() || !plan.dynamic_plan) return false;
  const LevelSetIndex index(m);
  TradingStrategy s = plan.dynamic_plan->strategy;
  s.static_positions = plan.static_positions;
  for (std::size_t p : plan.hedge_set) {
    if (plan.price.value() + total_gain(m, index, s, p) < g.values[p]) {
      return false;
    }
  }
  return true;
}

TEST(SemiStatic, NoOptionsIsThePrimalPrice) {
  const GoldenCase gc = golden_trinomial();
  const SemiStaticPlan plan = semistatic_price(gc.market, gc.payoffs.at("call"));
  EXPECT_EQ(plan.price, gc.expected.at("price_call").value);
  EXPECT_TRUE(plan.static_positions.empty());
  EXPECT_TRUE(plan_holds(gc.market, gc.payoffs.at("call"), plan));
}

TEST(SemiStatic, TwoOptionCaseDigitalG1IsFree) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const Payoff& g1 = gc.payoffs.at("g1");
  const SemiStaticPlan plan = semistatic_price(gc.market, g1);
  EXPECT_EQ(plan.price, gc.expected.at("pi_phi_g1").value);
  EXPECT_EQ(plan.static_positions, Rs({"0", "0"}));
  for (const auto& level : plan.dynamic_plan->strategy.holdings) {
    for (const RationalVector& h : level) EXPECT_EQ(h, Rs({"0"}));
  }
  EXPECT_EQ(plan.hedge_set, gc.expected_sets.at("omega_phi").paths);
  EXPECT_TRUE(plan_holds(gc.market, g1, plan));
}

TEST(SemiStatic, TwoOptionCaseDigitalG2MatchesTheDual) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const Payoff& g2 = gc.payoffs.at("g2");
  const SemiStaticPlan plan = semistatic_price(gc.market, g2);
  // Hand LP on Omega_Phi = {0, 1, 2, 4, 9/2, 24/5, 6}: the optimum mixes
  // 0, 2 and 6 with weights 59/220, 159/220, 1/110.
  EXPECT_EQ(plan.price, ExtendedRational(R("159/220")));
  EXPECT_EQ(plan.price, dual_value(gc.market, g2, true).value);
  EXPECT_EQ(plan.price, gc.expected.at("pi_all_g2").value);
  EXPECT_TRUE(plan_holds(gc.market, g2, plan));
  // Hedging on every grid point costs the same.
  EXPECT_EQ(semistatic_price_on(gc.market, g2, PathSet::all(10)).price,
            plan.price);
}

TEST(SemiStatic, TwoOptionCaseAllPathsOnTheGrid) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const Payoff& g1 = gc.payoffs.at("g1");
  // 2 phi0 >= g1 at every grid point and phi0 is free.
  EXPECT_EQ(semistatic_price_on(gc.market, g1, PathSet::all(10)).price,
            ExtendedRational(0));
  // Dynamic only: the extreme measure mixes 0 and 5/2, Q(5/2) = s0 / (5/2).
  EXPECT_EQ(price_on(gc.market, g1, PathSet::all(10)),
            ExtendedRational(R("3/5")));
}

TEST(SemiStatic, EmptyOmegaPhiIsAnError) {
  Market m = one_period("1", {"1/2", "2"});
  m.options.push_back({"rich", Rs({"1", "1"}), R("1/2")});
  try {
    semistatic_price(m, payoff({"0", "1"}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(std::string(e.what()), "no option-consistent martingale measure");
  }
  EXPECT_EQ(classify(m).tag, ArbitrageTag::kNoMartingaleMeasure);
}

TEST(Scan, Examples) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const Payoff& g2 = gc.payoffs.at("g2");
  const SemiStaticPlan plan = semistatic_price(gc.market, g2);
  EXPECT_GE(semistatic_via_scan(gc.market, g2, {Rs({"0", "0"})}), plan.price);
  EXPECT_EQ(semistatic_via_scan(gc.market, g2,
                                {Rs({"0", "0"}), plan.static_positions}),
            plan.price);
  EXPECT_THROW(semistatic_via_scan(gc.market, g2, {Rs({"0"})}),
               std::invalid_argument);

  const GoldenCase tri = golden_trinomial();
  EXPECT_EQ(semistatic_via_scan(tri.market, tri.payoffs.at("call"), {{}}),
            price(tri.market, tri.payoffs.at("call")));
}

TEST(Hypothesis, VacuousWithoutOptions) {
  EXPECT_TRUE(check_theorem_hypothesis(golden_binomial().market).holds);
}

TEST(Hypothesis, TwoOptionCaseFailsOnThePowerOption) {
  // Q(0) = 1/4, Q(2) = 3/4 is a martingale measure on Omega_Phi with
  // E[phi1 - c1] = -c1, while mass near 6 pushes the mean above zero.
  const HypothesisCheck check =
      check_theorem_hypothesis(gen_section4(default_section4_config()).market);
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.option, 1u);
  EXPECT_EQ(check.direction, +1);
  EXPECT_GT(sgn(check.extreme), 0);
}

TEST(Hypothesis, UnderpricedDominatedOption) {
  // Omega_Phi of the trinomial without the option is everything; the option
  // pays 1 at S_1 = 2 and 0 elsewhere but costs nothing.
  Market m = one_period("1", {"1/2", "1", "2"});
  m.options.push_back({"digital", Rs({"0", "0", "1"}), 0});
  const HypothesisCheck check = check_theorem_hypothesis_on(m, PathSet::all(3));
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.option, 0u);
  EXPECT_EQ(check.direction, +1);
  // The best martingale measure puts 1/3 on S_1 = 2.
  EXPECT_EQ(check.extreme, R("1/3"));
  // Recomputing Omega_Phi with the option in place collapses it to {1}.
  EXPECT_EQ(compute_omega_phi(m).omega_star, PathSet{1});
  EXPECT_TRUE(check_theorem_hypothesis(m).holds);
}

TEST(SemiStaticProperties, DualityDominanceAndMonotonicity) {
  int duality_checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Market base = gen_random_tree({seed, 1, 1 + seed % 2, 3, true, 16});
    const Market one = testing::with_random_options(base, seed, 1);
    const Market two = testing::with_random_options(base, seed, 2);
    const PathSet omega_one = compute_omega_phi(one).omega_star;
    if (omega_one.empty()) continue;
    const Payoff g = gen_random_payoff(seed, base.num_paths());

    const SemiStaticPlan p1 = semistatic_price(one, g);
    EXPECT_TRUE(plan_holds(one, g, p1));
    EXPECT_LE(p1.price, price_on(one, g, omega_one));
    if (check_theorem_hypothesis(one).holds) {
      ++duality_checked;
      EXPECT_EQ(p1.price, dual_value(one, g, true).value);
    }
    if (!compute_omega_phi(two).omega_star.empty()) {
      EXPECT_LE(semistatic_price(two, g).price, p1.price);
    }
  }
  EXPECT_GT(duality_checked, 5);
}

}  // namespace
}  // namespace superhedge
