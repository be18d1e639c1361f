#ifndef SUPERHEDGE_RATIONAL_H_
#define SUPERHEDGE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superhedge {

// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Malformed input: bad numbers, schema violations, unreadable files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input on which the requested quantity is undefined
// (e.g. no martingale measure exists, several roots for a single price).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "[+-]int", "[+-]int/int" (den > 0) or "[+-]int.frac" exactly.
// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational dot(const RationalVector& a, const RationalVector& b);

// Element of R u {-inf, +inf} with the obvious total order.
class ExtendedRational {
 public:
  enum class Kind { kMinusInfinity, kFinite, kPlusInfinity };

  ExtendedRational() = default;
  ExtendedRational(Rational value)  // NOLINT: implicit by intent
      : kind_(Kind::kFinite), value_(std::move(value)) {}
  ExtendedRational(int value) : ExtendedRational(Rational(value)) {}  // NOLINT

  static ExtendedRational plus_infinity() {
    return ExtendedRational(Kind::kPlusInfinity);
  }
  static ExtendedRational minus_infinity() {
    return ExtendedRational(Kind::kMinusInfinity);
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_plus_infinity() const { return kind_ == Kind::kPlusInfinity; }
  bool is_minus_infinity() const { return kind_ == Kind::kMinusInfinity; }

  // Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_;
};

// "inf", "-inf" or the canonical rational.
std::string to_string(const ExtendedRational& value);
ExtendedRational parse_extended_rational(std::string_view text);

}  // namespace superhedge

#endif  // SUPERHEDGE_RATIONAL_H_
