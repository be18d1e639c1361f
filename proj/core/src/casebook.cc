#include "superhedge/casebook.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "superhedge/dual.h"

namespace superhedge {
namespace {

Rational positive_part(const Rational& x) {
  return sgn(x) > 0 ? x : Rational(0);
}

Rational small_rational(std::mt19937_64& rng, int span, int max_den) {
  Rational value(static_cast<long>(rng() % (2 * span + 1)) - span,
                 static_cast<long>(1 + rng() % max_den));
  value.canonicalize();
  return value;
}

std::string index_id(const std::vector<std::size_t>& digits) {
  std::string id;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) id += '.';
    id += std::to_string(digits[i]);
  }
  return id;
}

// Multiplicative tree over every sequence of factors.
Market product_tree(const RationalVector& factors, const Rational& s0,
                    std::size_t steps,
                    std::string (*name)(const std::vector<std::size_t>&)) {
  std::size_t count = 1;
  for (std::size_t t = 0; t < steps; ++t) {
    count *= factors.size();
    if (count > (1u << 16)) throw std::invalid_argument("tree too large");
  }
  Market market;
  market.assets = 1;
  market.steps = steps;
  std::vector<std::size_t> digits(steps, 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t rest = k;
    for (std::size_t t = steps; t-- > 0;) {
      digits[t] = rest % factors.size();
      rest /= factors.size();
    }
    Path path;
    path.id = name(digits);
    path.prices.assign(1, RationalVector{s0});
    for (std::size_t t = 0; t < steps; ++t) {
      path.prices[0].push_back(path.prices[0].back() * factors[digits[t]]);
    }
    market.paths.push_back(std::move(path));
  }
  return market;
}

}  // namespace

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kPaper:
      return "PAPER";
    case Provenance::kTrivial:
      return "TRIVIAL";
    case Provenance::kDerived:
      return "DERIVED";
  }
  return "DERIVED";
}

Section4Config default_section4_config() {
  Section4Config cfg;
  for (const char* point : {"0", "1", "2", "5/2", "3", "7/2", "4", "9/2",
                            "24/5", "6"}) {
    cfg.grid.push_back(parse_rational(point));
  }
  return cfg;
}

void validate(const Section4Config& cfg) {
  if (sgn(cfg.s0) <= 0) throw std::invalid_argument("section4: s0 must be > 0");
  if (!(cfg.K0 > cfg.s0)) throw std::invalid_argument("section4: need K0 > s0");
  const Rational top = cfg.K0 + 2;
  if (!(cfg.K1 > top * top)) {
    throw std::invalid_argument("section4: need K1 > (K0 + 2)^2");
  }
  if (sgn(cfg.c1) <= 0) throw std::invalid_argument("section4: c1 must be > 0");
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    if (sgn(cfg.grid[i]) < 0) {
      throw std::invalid_argument("section4: grid points must be nonnegative");
    }
    if (i > 0 && !(cfg.grid[i - 1] < cfg.grid[i])) {
      throw std::invalid_argument("section4: grid must be strictly increasing");
    }
  }
  const auto has = [&](const Rational& x) {
    return std::binary_search(cfg.grid.begin(), cfg.grid.end(), x);
  };
  const auto any = [&](auto predicate) {
    return std::any_of(cfg.grid.begin(), cfg.grid.end(), predicate);
  };
  if (!has(Rational(0))) {
    throw std::invalid_argument("section4: grid lacks the witness point 0");
  }
  if (!has(cfg.K0) || !has(cfg.K0 + 1) || !has(top)) {
    throw std::invalid_argument("section4: grid lacks one of K0, K0+1, K0+2");
  }
  if (!any([&](const Rational& x) { return cfg.K0 < x && x < top; })) {
    throw std::invalid_argument(
        "section4: grid lacks a point inside (K0, K0+2)");
  }
  if (!any([&](const Rational& x) { return top <= x && x * x < cfg.K1; })) {
    throw std::invalid_argument(
        "section4: grid lacks the witness point in [K0+2, sqrt(K1))");
  }
  if (!any([&](const Rational& x) { return x * x > cfg.K1 + cfg.c1; })) {
    throw std::invalid_argument(
        "section4: grid lacks the witness point above sqrt(K1 + c1)");
  }
}

GoldenCase gen_section4(const Section4Config& cfg) {
  validate(cfg);
  const Rational top = cfg.K0 + 2;

  GoldenCase gc;
  gc.name = "section4";
  Market& market = gc.market;
  market.assets = 1;
  market.steps = 1;
  StaticOption butterfly{"phi0", {}, Rational(0)};
  StaticOption power{"phi1", {}, cfg.c1};
  Payoff g1, g2;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    const Rational& x = cfg.grid[i];
    market.paths.push_back({to_string(x), {{cfg.s0, x}}});
    butterfly.payoff.push_back(positive_part(x - cfg.K0) -
                               2 * positive_part(x - (cfg.K0 + 1)) +
                               positive_part(x - top));
    power.payoff.push_back(positive_part(x * x - cfg.K1));
    const bool inside = cfg.K0 < x && x < top;
    g1.values.push_back(inside ? 1 : 0);
    g2.values.push_back(cfg.K0 <= x && x <= top ? 1 : 0);
    if (!inside) kept.push_back(i);
  }
  market.options = {std::move(butterfly), std::move(power)};

  const Rational ratio = cfg.s0 / cfg.K0;
  gc.expected_sets["omega_phi"] = {PathSet(std::move(kept)), Provenance::kPaper};
  gc.expected["pi_phi_g1"] = {Rational(0), Provenance::kPaper};
  gc.expected["pi_all_g1"] = {ratio < 1 ? ratio : Rational(1),
                              Provenance::kPaper};
  gc.expected["pi_all_g2"] = {dual_value(market, g2, true).value,
                              Provenance::kPaper};
  gc.payoffs["g1"] = std::move(g1);
  gc.payoffs["g2"] = std::move(g2);
  return gc;
}

Market gen_binomial(const Rational& u, const Rational& d, const Rational& s0,
                    std::size_t steps) {
  if (!(u > d) || sgn(d) <= 0) {
    throw std::invalid_argument("binomial: need u > d > 0");
  }
  if (sgn(s0) <= 0) throw std::invalid_argument("binomial: need s0 > 0");
  if (steps < 1 || steps > 16) {
    throw std::invalid_argument("binomial: need 1 <= T <= 16");
  }
  return product_tree({u, d}, s0, steps,
                      [](const std::vector<std::size_t>& digits) {
                        std::string id;
                        for (std::size_t k : digits) id += k == 0 ? 'u' : 'd';
                        return id;
                      });
}

Market gen_trinomial(const RationalVector& factors, const Rational& s0,
                     std::size_t steps) {
  if (factors.size() < 2) {
    throw std::invalid_argument("trinomial: need at least two factors");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (sgn(factors[i]) <= 0) {
      throw std::invalid_argument("trinomial: factors must be > 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[i] == factors[j]) {
        throw std::invalid_argument("trinomial: factors must be distinct");
      }
    }
  }
  if (sgn(s0) <= 0) throw std::invalid_argument("trinomial: need s0 > 0");
  if (steps < 1) throw std::invalid_argument("trinomial: need T >= 1");
  return product_tree(factors, s0, steps, index_id);
}

Market gen_random_tree(const RandomTreeConfig& cfg) {
  if (cfg.assets < 1 || cfg.steps < 1 || cfg.branching < 1 ||
      cfg.max_paths < 1) {
    throw std::invalid_argument("random tree: sizes must be positive");
  }
  std::mt19937_64 rng(cfg.seed);

  struct Node {
    std::vector<RationalVector> prices;  // [asset][0..t]
    std::vector<std::size_t> digits;
  };
  Node root;
  for (std::size_t a = 0; a < cfg.assets; ++a) {
    root.prices.push_back({Rational(static_cast<long>(1 + rng() % 5))});
  }
  std::vector<Node> frontier{root};

  for (std::size_t t = 0; t < cfg.steps; ++t) {
    std::vector<Node> next;
    for (std::size_t n = 0; n < frontier.size(); ++n) {
      // Leaves already committed plus one per remaining frontier node.
      const std::size_t budget =
          cfg.max_paths - next.size() - (frontier.size() - n - 1);
      std::size_t children = 1 + rng() % cfg.branching;
      children = std::min(children, budget);

      std::vector<RationalVector> deltas(children,
                                         RationalVector(cfg.assets));
      if (cfg.arbitrage_free) {
        // Strictly positive weights p with sum_i p_i delta_i = 0.
        RationalVector weights(children);
        for (Rational& p : weights) p = static_cast<long>(1 + rng() % 4);
        for (std::size_t c = 0; c + 1 < children; ++c) {
          for (Rational& x : deltas[c]) x = small_rational(rng, 3, 2);
        }
        if (children >= 3 && rng() % 5 == 0) deltas[1] = deltas[0];
        for (std::size_t a = 0; a < cfg.assets; ++a) {
          Rational sum = 0;
          for (std::size_t c = 0; c + 1 < children; ++c) {
            sum += weights[c] * deltas[c][a];
          }
          deltas[children - 1][a] = -sum / weights[children - 1];
        }
      } else {
        const bool one_sided = rng() % 3 == 0;
        for (std::size_t c = 0; c < children; ++c) {
          for (std::size_t a = 0; a < cfg.assets; ++a) {
            deltas[c][a] = small_rational(rng, 3, 2);
            if (one_sided && a == 0) deltas[c][a] = abs(deltas[c][a]) + 1;
          }
        }
        if (children >= 2 && rng() % 5 == 0) deltas[1] = deltas[0];
      }

      for (std::size_t c = 0; c < children; ++c) {
        Node child = frontier[n];
        child.digits.push_back(c);
        for (std::size_t a = 0; a < cfg.assets; ++a) {
          child.prices[a].push_back(child.prices[a].back() + deltas[c][a]);
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  Market market;
  market.assets = cfg.assets;
  market.steps = cfg.steps;
  for (Node& node : frontier) {
    market.paths.push_back({"p" + index_id(node.digits), std::move(node.prices)});
  }
  return market;
}

Payoff gen_random_payoff(std::uint64_t seed, std::size_t num_paths) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Payoff payoff;
  for (std::size_t p = 0; p < num_paths; ++p) {
    payoff.values.push_back(small_rational(rng, 5, 3));
  }
  return payoff;
}

Payoff call_payoff(const Market& market, const Rational& strike,
                   std::size_t asset) {
  if (asset >= market.assets) throw std::invalid_argument("call: no such asset");
  Payoff payoff;
  for (const Path& path : market.paths) {
    payoff.values.push_back(positive_part(path.prices[asset].back() - strike));
  }
  return payoff;
}

GoldenCase golden_binomial() {
  GoldenCase gc;
  gc.name = "binomial";
  gc.market = gen_binomial(2, Rational(1, 2), 1, 1);
  gc.payoffs["call"] = call_payoff(gc.market, 1);
  // q = (1 - 1/2) / (2 - 1/2) = 1/3 on the up state, call pays 1 there.
  gc.expected["price_call"] = {Rational(1, 3), Provenance::kDerived};
  gc.expected["delta_call"] = {Rational(2, 3), Provenance::kDerived};
  gc.expected_sets["omega_star"] = {PathSet::all(2), Provenance::kTrivial};
  return gc;
}

GoldenCase golden_trinomial() {
  GoldenCase gc;
  gc.name = "trinomial";
  gc.market = gen_trinomial({Rational(1, 2), 1, 2}, 1, 1);
  gc.payoffs["call"] = call_payoff(gc.market, 1);
  // Extreme measures: {1/2: 2/3, 2: 1/3} and {1: 1}; the call has mean 1/3
  // and 0 under them.
  gc.expected["price_call"] = {Rational(1, 3), Provenance::kDerived};
  gc.expected["subprice_call"] = {Rational(0), Provenance::kDerived};
  gc.expected_sets["omega_star"] = {PathSet::all(3), Provenance::kTrivial};
  return gc;
}

}  // namespace superhedge
