#ifndef SUPERHEDGE_CASEBOOK_H_
#define SUPERHEDGE_CASEBOOK_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superhedge/market.h"
#include "superhedge/rational.h"

namespace superhedge {

// Where an expected value comes from.
enum class Provenance { kPaper, kTrivial, kDerived };
std::string to_string(Provenance provenance);

struct ExpectedValue {
  ExtendedRational value;
  Provenance provenance = Provenance::kDerived;
};

struct ExpectedSet {
  PathSet paths;
  Provenance provenance = Provenance::kDerived;
};

struct GoldenCase {
  std::string name;
  Market market;
  std::map<std::string, Payoff> payoffs;
  std::map<std::string, ExpectedValue> expected;
  std::map<std::string, ExpectedSet> expected_sets;
};

// One-period market with a butterfly phi0 on [K0, K0 + 2] (cost 0) and
// phi1 = (x^2 - K1)^+ (cost c1). Paths are the grid points.
struct Section4Config {
  Rational s0{3, 2};
  Rational K0{2};
  Rational K1{25};
  Rational c1{1, 10};
  RationalVector grid;
};

Section4Config default_section4_config();

// Throws std::invalid_argument naming the violated condition or the missing
// witness point.
void validate(const Section4Config& cfg);

// Payoffs "g1" = 1_(K0, K0+2) and "g2" = 1_[K0, K0+2]. Expected entries:
//   set   "omega_phi"     grid minus the interior of (K0, K0 + 2)
//   value "pi_phi_g1"     0
//   value "pi_all_g1"     min{s0 / K0, 1}
//   value "pi_all_g2"     option-constrained dual value of g2
GoldenCase gen_section4(const Section4Config& cfg);

// All 2^T up/down paths, ids over {u, d}. Requires u > d > 0, s0 > 0,
// 1 <= T <= 16.
Market gen_binomial(const Rational& u, const Rational& d, const Rational& s0,
                    std::size_t steps);

// All k^T paths over the given multiplicative factors (distinct, positive,
// k >= 2). Ids are the factor indices per step, dot separated.
Market gen_trinomial(const RationalVector& factors, const Rational& s0,
                     std::size_t steps);

struct RandomTreeConfig {
  std::uint64_t seed = 0;
  std::size_t assets = 1;
  std::size_t steps = 2;
  std::size_t branching = 3;
  bool arbitrage_free = true;
  std::size_t max_paths = 40;
};

// Random single-root tree. With arbitrage_free every node's child increments
// admit a strictly positive martingale weighting, so Omega* is everything.
// Siblings occasionally repeat, giving paths that share a level set.
Market gen_random_tree(const RandomTreeConfig& cfg);

// Small rationals, deterministic in seed.
Payoff gen_random_payoff(std::uint64_t seed, std::size_t num_paths);

// (S^asset_T - strike)^+.
Payoff call_payoff(const Market& market, const Rational& strike,
                   std::size_t asset = 0);

// Binomial u = 2, d = 1/2, S0 = 1, T = 1 with the at-the-money call.
GoldenCase golden_binomial();
// Trinomial {1/2, 1, 2}, S0 = 1, T = 1 with the at-the-money call.
GoldenCase golden_trinomial();

}  // namespace superhedge

#endif  // SUPERHEDGE_CASEBOOK_H_
