#include "superhedge/polar.h"

#include <gtest/gtest.h>

#include "superhedge/casebook.h"
#include "testing.h"

namespace superhedge {
namespace {

using testing::one_period;
using testing::Rs;

void expect_valid_witnesses(const Market& market, const SupportReport& report) {
  const LevelSetIndex index(market);
  EXPECT_EQ(report.omega_star.size() + report.polar_set.size(),
            market.num_paths());
  EXPECT_EQ(report.polar_set, report.omega_star.complement(market.num_paths()));
  for (std::size_t p : report.omega_star) {
    ASSERT_TRUE(report.witnesses.at(p).has_value()) << p;
    const MeasureVector& q = *report.witnesses[p];
    EXPECT_TRUE(is_martingale_measure(market, index, q, report.with_options));
    EXPECT_GT(sgn(q.weights[p]), 0);
    EXPECT_TRUE(q.support.is_subset_of(report.omega_star));
  }
  if (report.omega_star.empty()) {
    EXPECT_FALSE(report.uniform_witness.has_value());
  } else {
    ASSERT_TRUE(report.uniform_witness.has_value());
    EXPECT_EQ(report.uniform_witness->support, report.omega_star);
    EXPECT_TRUE(is_martingale_measure(market, index, *report.uniform_witness,
                                      report.with_options));
  }
}

TEST(OmegaStar, StrictlyRisingHasNoMartingaleMeasure) {
  const Market m = one_period("1", {"2", "3/2", "6/5"});
  EXPECT_TRUE(compute_omega_star(m).omega_star.empty());
  EXPECT_TRUE(compute_omega_star_iterative(m).omega_star.empty());
  const ArbitrageClass c = classify(m);
  EXPECT_EQ(c.tag, ArbitrageTag::kNoMartingaleMeasure);
  ASSERT_TRUE(c.witness.has_value());
  const LevelSetIndex index(m);
  for (std::size_t p = 0; p < m.num_paths(); ++p) {
    EXPECT_GT(sgn(total_gain(m, index, *c.witness, p)), 0);
  }
}

TEST(OmegaStar, TrinomialIsFullyCharged) {
  const Market m = one_period("1", {"1/2", "1", "2"});
  const SupportReport report = compute_omega_star(m);
  EXPECT_EQ(report.omega_star, PathSet::all(3));
  expect_valid_witnesses(m, report);
  EXPECT_EQ(compute_omega_star_iterative(m).omega_star, PathSet::all(3));
  EXPECT_EQ(classify(m).tag, ArbitrageTag::kFullyArbitrageFree);
  EXPECT_FALSE(classify(m).witness.has_value());
}

TEST(OmegaStar, RisingBranchIsPolar) {
  const Market m = one_period("1", {"1", "2"});
  const SupportReport report = compute_omega_star(m);
  EXPECT_EQ(report.omega_star, PathSet{0});
  EXPECT_EQ(report.polar_set, PathSet{1});
  expect_valid_witnesses(m, report);
  EXPECT_EQ(compute_omega_star_iterative(m).omega_star, PathSet{0});

  const ArbitrageClass c = classify(m);
  EXPECT_EQ(c.tag, ArbitrageTag::kOnePointArbitrage);
  ASSERT_TRUE(c.witness.has_value());
  const LevelSetIndex index(m);
  EXPECT_EQ(total_gain(m, index, *c.witness, 0), 0);
  EXPECT_GT(sgn(total_gain(m, index, *c.witness, 1)), 0);
}

TEST(OmegaStar, BalancedBinomialIsArbitrageFree) {
  EXPECT_EQ(classify(gen_binomial(2, Rational(1, 2), 1, 1)).tag,
            ArbitrageTag::kFullyArbitrageFree);
}

TEST(OmegaPhi, WithoutOptionsMatchesOmegaStar) {
  const Market m = one_period("1", {"1", "2", "1/2", "3"});
  EXPECT_EQ(compute_omega_phi(m).omega_star, compute_omega_star(m).omega_star);
  Market zero = m;
  zero.options.push_back({"zero", Rs({"0", "0", "0", "0"}), 0});
  EXPECT_EQ(compute_omega_phi(zero).omega_star,
            compute_omega_star(m).omega_star);
  EXPECT_EQ(compute_omega_phi_iterative(zero).omega_star,
            compute_omega_star(m).omega_star);
}

TEST(OmegaPhi, TwoOptionCaseExcludesTheButterflyInterior) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const SupportReport report = compute_omega_phi(gc.market);
  // Grid {0, 1, 2, 5/2, 3, 7/2, 4, 9/2, 24/5, 6}: the interior of (2, 4) is
  // {5/2, 3, 7/2}, indices 3..5.
  EXPECT_EQ(report.omega_star, (PathSet{0, 1, 2, 6, 7, 8, 9}));
  EXPECT_EQ(report.omega_star, gc.expected_sets.at("omega_phi").paths);
  expect_valid_witnesses(gc.market, report);
  EXPECT_EQ(compute_omega_phi_iterative(gc.market).omega_star,
            report.omega_star);
  // Without options every grid point is charged (0 < s0 < 6).
  EXPECT_EQ(compute_omega_star(gc.market).omega_star, PathSet::all(10));
}

TEST(Classify, TwoOptionCaseWitnessIsLongTheButterfly) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const ArbitrageClass c = classify(gc.market);
  EXPECT_EQ(c.tag, ArbitrageTag::kOnePointArbitrage);
  ASSERT_TRUE(c.witness.has_value());
  const TradingStrategy& w = *c.witness;
  ASSERT_EQ(w.static_positions.size(), 2u);
  EXPECT_GT(sgn(w.static_positions[0]), 0);
  EXPECT_EQ(w.static_positions[1], 0);
  for (const auto& level : w.holdings) {
    for (const RationalVector& h : level) {
      for (const Rational& x : h) EXPECT_EQ(x, 0);
    }
  }
  const LevelSetIndex index(gc.market);
  for (std::size_t p = 0; p < gc.market.num_paths(); ++p) {
    const Rational gain = total_gain(gc.market, index, w, p);
    if (c.support.contains(p)) {
      EXPECT_EQ(gain, 0);
    } else {
      EXPECT_GT(sgn(gain), 0);
    }
  }
}

TEST(OnePointArbitrage, ChargedSetIsExactlyThePolarPart) {
  const Market m = one_period("1", {"1", "2", "3"});
  const LevelSetIndex index(m);
  const OnePointArbitrage a =
      find_one_point_arbitrage(m, index, PathSet::all(3), false);
  EXPECT_EQ(a.charged, (PathSet{1, 2}));
  const OnePointArbitrage none =
      find_one_point_arbitrage(m, index, PathSet{0}, false);
  EXPECT_TRUE(none.charged.empty());
}

std::vector<Market> random_markets(std::size_t count, std::uint64_t base) {
  std::vector<Market> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    RandomTreeConfig cfg;
    cfg.seed = base + k;
    cfg.assets = 1 + k % 2;
    cfg.steps = 1 + k % 3;
    cfg.branching = 2 + k % 3;
    cfg.arbitrage_free = k % 3 == 0;
    cfg.max_paths = 24;
    out.push_back(gen_random_tree(cfg));
  }
  return out;
}

TEST(OmegaStarProperties, IterativeAgreesAndFixpointHolds) {
  for (const Market& m : random_markets(60, 1000)) {
    const SupportReport direct = compute_omega_star(m);
    EXPECT_EQ(compute_omega_star_iterative(m).omega_star, direct.omega_star);
    expect_valid_witnesses(m, direct);
    if (!direct.omega_star.empty()) {
      const Market sub = restrict_market(m, direct.omega_star);
      EXPECT_EQ(compute_omega_star(sub).omega_star,
                PathSet::all(sub.num_paths()));
    }
  }
}

TEST(OmegaStarProperties, ArbitrageFreeTreesAreFullyCharged) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Market m = gen_random_tree({seed, 1 + seed % 3, 2, 3, true});
    EXPECT_EQ(compute_omega_star(m).omega_star, PathSet::all(m.num_paths()));
  }
}

TEST(OmegaStarProperties, IdenticalTrajectoriesAgree) {
  for (Market m : random_markets(30, 2000)) {
    m.paths.push_back(m.paths[m.num_paths() / 2]);
    m.paths.back().id = "copy";
    const PathSet s = compute_omega_star(m).omega_star;
    EXPECT_EQ(s.contains(m.num_paths() / 2), s.contains(m.num_paths() - 1));
  }
}

TEST(OmegaPhiProperties, OptionsOnlyShrink) {
  std::uint64_t seed = 0;
  for (const Market& m : random_markets(40, 3000)) {
    ++seed;
    const Market one = testing::with_random_options(m, seed, 1);
    const Market two = testing::with_random_options(m, seed, 2);
    const SupportReport s0 = compute_omega_phi(m);
    const SupportReport s1 = compute_omega_phi(one);
    const SupportReport s2 = compute_omega_phi(two);
    EXPECT_TRUE(s1.omega_star.is_subset_of(s0.omega_star));
    EXPECT_TRUE(s2.omega_star.is_subset_of(s1.omega_star));
    expect_valid_witnesses(two, s2);
    EXPECT_EQ(compute_omega_phi_iterative(two).omega_star, s2.omega_star);
    const ArbitrageClass c = classify(two);
    EXPECT_EQ(c.support, s2.omega_star);
    EXPECT_EQ(c.tag == ArbitrageTag::kFullyArbitrageFree,
              s2.omega_star.size() == two.num_paths());
    EXPECT_EQ(c.tag == ArbitrageTag::kNoMartingaleMeasure,
              s2.omega_star.empty());
    if (c.witness) {
      const LevelSetIndex index(two);
      for (std::size_t p = 0; p < two.num_paths(); ++p) {
        const int sign = sgn(total_gain(two, index, *c.witness, p));
        EXPECT_GE(sign, 0);
        if (!s2.omega_star.contains(p)) EXPECT_GT(sign, 0);
      }
    }
  }
}

TEST(OmegaStarProperties, PermutationChangesOnlyLabels) {
  for (const Market& m : random_markets(20, 4000)) {
    std::vector<std::size_t> order(m.num_paths());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = order.size() - 1 - i;
    }
    const PathSet a = compute_omega_star(m).omega_star;
    const PathSet b = compute_omega_star(permute_market(m, order)).omega_star;
    std::vector<std::size_t> mapped;
    for (std::size_t k : b) mapped.push_back(order[k]);
    EXPECT_EQ(PathSet(mapped), a);
  }
}

}  // namespace
}  // namespace superhedge
