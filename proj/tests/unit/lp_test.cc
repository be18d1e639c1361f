#include "superhedge/lp.h"

#include <gtest/gtest.h>

#include <random>

#include "testing.h"

namespace superhedge {
namespace {

using testing::R;
using testing::Rs;

LinearProgram one_variable(Sense sense, const char* cost) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = Rs({cost});
  return lp;
}

TEST(Rational, ParsesExactly) {
  EXPECT_EQ(R("1.5"), Rational(3, 2));
  EXPECT_EQ(R("2/6"), Rational(1, 3));
  EXPECT_EQ(R("-0.25"), Rational(-1, 4));
  EXPECT_EQ(R("+7"), Rational(7));
  EXPECT_EQ(to_string(R("2/6")), "1/3");
  for (const char* bad : {"", "1/0", "1.", ".5", "1e3", "nan", "inf", "1/-2",
                          "3/ 4", "0x10", "--1"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(ExtendedRational, TotalOrder) {
  const auto lo = ExtendedRational::minus_infinity();
  const auto hi = ExtendedRational::plus_infinity();
  EXPECT_LT(lo, ExtendedRational(R("-1000000")));
  EXPECT_LT(ExtendedRational(R("1000000")), hi);
  EXPECT_LT(lo, hi);
  EXPECT_EQ(ExtendedRational(R("1/2")), ExtendedRational(R("2/4")));
  EXPECT_EQ(to_string(lo), "-inf");
  EXPECT_EQ(parse_extended_rational("inf"), hi);
  EXPECT_EQ(parse_extended_rational("-3/9"), ExtendedRational(R("-1/3")));
}

TEST(Solve, SingleBoundBinds) {
  LinearProgram lp = one_variable(Sense::kMaximize, "1");
  lp.add_constraint(Rs({"1"}), Relation::kLessEqual, 1);
  lp.add_constraint(Rs({"1"}), Relation::kGreaterEqual, 0);
  const LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, ExtendedRational(1));
  EXPECT_EQ(out.solution, Rs({"1"}));
}

TEST(Solve, ContradictoryBoundsAreInfeasible) {
  LinearProgram lp = one_variable(Sense::kMinimize, "0");
  lp.add_constraint(Rs({"1"}), Relation::kLessEqual, -1);
  lp.add_constraint(Rs({"1"}), Relation::kGreaterEqual, 0);
  const LpOutcome out = solve(lp);
  EXPECT_EQ(out.status, LpStatus::kInfeasible);
  EXPECT_EQ(out.value, ExtendedRational::plus_infinity());
  EXPECT_TRUE(is_farkas_certificate(lp.constraints, 1, {}, out.farkas));
}

TEST(Solve, MissingUpperBoundIsUnbounded) {
  LinearProgram lp = one_variable(Sense::kMaximize, "1");
  lp.add_constraint(Rs({"1"}), Relation::kGreaterEqual, 0);
  const LpOutcome out = solve(lp);
  EXPECT_EQ(out.status, LpStatus::kUnbounded);
  EXPECT_EQ(out.value, ExtendedRational::plus_infinity());
}

TEST(Solve, ReturnsAVertex) {
  LinearProgram lp;
  lp.objective = Rs({"1", "1"});
  lp.bounds = {VariableBounds::nonnegative(), VariableBounds::nonnegative()};
  lp.add_constraint(Rs({"1", "1"}), Relation::kGreaterEqual, R("1/3"));
  const LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, ExtendedRational(R("1/3")));
  // The two vertices of the optimal face.
  EXPECT_TRUE(out.solution == Rs({"1/3", "0"}) ||
              out.solution == Rs({"0", "1/3"}));
}

TEST(Solve, BlandTerminatesOnBealeCyclingExample) {
  LinearProgram lp;
  lp.objective = Rs({"-3/4", "20", "-1/2", "6"});
  lp.bounds.assign(4, VariableBounds::nonnegative());
  lp.add_constraint(Rs({"1/4", "-8", "-1", "9"}), Relation::kLessEqual, 0);
  lp.add_constraint(Rs({"1/2", "-12", "-1/2", "3"}), Relation::kLessEqual, 0);
  lp.add_constraint(Rs({"0", "0", "1", "0"}), Relation::kLessEqual, 1);
  const LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, ExtendedRational(R("-5/4")));
  EXPECT_EQ(dual_objective(lp, out), R("-5/4"));
}

TEST(Solve, HandlesEveryBoundShape) {
  // minimise 2x - y + z with x in [-2, 3], y <= 5, z free, x + z >= -1,
  // z <= 4.  2x + z = x + (x + z) >= -3, so x = -2, y = 5, z = 1.
  LinearProgram lp;
  lp.objective = Rs({"2", "-1", "1"});
  lp.bounds = {VariableBounds::between(-2, 3), {std::nullopt, Rational(5)},
               VariableBounds::free()};
  lp.add_constraint(Rs({"1", "0", "1"}), Relation::kGreaterEqual, -1);
  lp.add_constraint(Rs({"0", "0", "1"}), Relation::kLessEqual, 4);
  const LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, ExtendedRational(-8));
  EXPECT_EQ(out.solution, Rs({"-2", "5", "1"}));
  EXPECT_EQ(dual_objective(lp, out), -8);
}

TEST(Solve, RejectsMalformedPrograms) {
  LinearProgram lp;
  lp.objective = Rs({"1", "1"});
  lp.add_constraint(Rs({"1"}), Relation::kEqual, 0);
  EXPECT_THROW(solve(lp), std::invalid_argument);
  lp.constraints.clear();
  lp.bounds = {VariableBounds::between(1, 0), VariableBounds::free()};
  EXPECT_THROW(solve(lp), std::invalid_argument);
}

TEST(Feasibility, ContradictoryEqualities) {
  const std::vector<Constraint> rows = {{Rs({"1"}), Relation::kEqual, 1},
                                        {Rs({"1"}), Relation::kEqual, 2}};
  const FeasibilityOutcome out = solve_feasibility(rows, 1);
  EXPECT_FALSE(out.feasible);
  EXPECT_EQ(out.certificate, Rs({"1", "-1"}));
  EXPECT_TRUE(is_farkas_certificate(rows, 1, {}, out.certificate));
}

TEST(Feasibility, PinnedVariable) {
  const std::vector<Constraint> rows = {
      {Rs({"1"}), Relation::kGreaterEqual, 0},
      {Rs({"1"}), Relation::kLessEqual, 0}};
  const FeasibilityOutcome out = solve_feasibility(rows, 1);
  EXPECT_TRUE(out.feasible);
  EXPECT_EQ(out.witness, Rs({"0"}));
}

TEST(Feasibility, MartingaleMassOnTheRisingPath) {
  // q_flat, q_up >= 0; total mass 1; E[dS] = q_up = 0; q_up >= 1/10.
  const std::vector<Constraint> rows = {
      {Rs({"1", "1"}), Relation::kEqual, 1},
      {Rs({"0", "1"}), Relation::kEqual, 0},
      {Rs({"0", "1"}), Relation::kGreaterEqual, R("1/10")}};
  const std::vector<VariableBounds> bounds(2, VariableBounds::nonnegative());
  const FeasibilityOutcome out = solve_feasibility(rows, 2, bounds);
  EXPECT_FALSE(out.feasible);
  EXPECT_TRUE(is_farkas_certificate(rows, 2, bounds, out.certificate));
}

// Random bounded LPs with a mix of relations and bound shapes.
LinearProgram random_lp(std::mt19937_64& rng) {
  const auto draw = [&](int span) {
    return Rational(static_cast<long>(rng() % (2 * span + 1)) - span,
                    static_cast<long>(1 + rng() % 3));
  };
  LinearProgram lp;
  const std::size_t n = 2 + rng() % 4;
  const std::size_t m = 1 + rng() % 5;
  lp.sense = rng() % 2 ? Sense::kMaximize : Sense::kMinimize;
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = draw(4);
    c.canonicalize();
    lp.objective.push_back(c);
    switch (rng() % 4) {
      case 0:
        lp.bounds.push_back(VariableBounds::nonnegative());
        break;
      case 1:
        lp.bounds.push_back(VariableBounds::between(-2, 3));
        break;
      case 2:
        lp.bounds.push_back({std::nullopt, Rational(4)});
        break;
      default:
        lp.bounds.push_back(VariableBounds::between(-1, 1));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row;
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = draw(3);
      a.canonicalize();
      row.push_back(a);
    }
    Rational b = draw(5);
    b.canonicalize();
    const Relation rel = static_cast<Relation>(rng() % 3);
    lp.add_constraint(std::move(row), rel, b);
  }
  return lp;
}

Rational activity(const Constraint& c, const RationalVector& x) {
  return dot(c.coefficients, x);
}

TEST(SolveProperties, ExactnessDualityAndSlackness) {
  std::mt19937_64 rng(2024);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const LinearProgram lp = random_lp(rng);
    const LpOutcome out = solve(lp);
    EXPECT_EQ(out, solve(lp)) << "nondeterministic at trial " << trial;
    if (out.status == LpStatus::kInfeasible) {
      ++infeasible;
      EXPECT_TRUE(is_farkas_certificate(lp.constraints, lp.num_variables(),
                                        lp.bounds, out.farkas));
      continue;
    }
    if (out.status == LpStatus::kUnbounded) {
      ++unbounded;
      continue;
    }
    ++optimal;
    ASSERT_TRUE(satisfies(lp, out.solution)) << trial;
    EXPECT_EQ(out.value, ExtendedRational(dot(lp.objective, out.solution)));
    EXPECT_EQ(dual_objective(lp, out), out.value.value()) << trial;
    // objective = A^T y + r
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      Rational sum = out.reduced_costs[j];
      for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        sum += lp.constraints[i].coefficients[j] * out.duals[i];
      }
      EXPECT_EQ(sum, lp.objective[j]) << trial;
    }
    const int flip = lp.sense == Sense::kMinimize ? 1 : -1;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      const Constraint& c = lp.constraints[i];
      const Rational y = flip * out.duals[i];
      if (c.relation == Relation::kGreaterEqual) EXPECT_GE(sgn(y), 0);
      if (c.relation == Relation::kLessEqual) EXPECT_LE(sgn(y), 0);
      if (sgn(y) != 0) EXPECT_EQ(activity(c, out.solution), c.rhs) << trial;
    }
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      const Rational r = flip * out.reduced_costs[j];
      const VariableBounds b = lp.bounds_of(j);
      if (sgn(r) > 0) EXPECT_EQ(b.lower, out.solution[j]) << trial;
      if (sgn(r) < 0) EXPECT_EQ(b.upper, out.solution[j]) << trial;
    }
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 5);
}

TEST(SolveProperties, MaximizeIsNegatedMinimize) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    LinearProgram lp = random_lp(rng);
    lp.sense = Sense::kMaximize;
    const LpOutcome max_out = solve(lp);
    lp.sense = Sense::kMinimize;
    for (Rational& c : lp.objective) c = -c;
    const LpOutcome min_out = solve(lp);
    ASSERT_EQ(max_out.status, min_out.status);
    if (max_out.status == LpStatus::kOptimal) {
      EXPECT_EQ(max_out.value.value(), -min_out.value.value());
    }
  }
}

}  // namespace
}  // namespace superhedge
