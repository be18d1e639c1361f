#include "superhedge/rational.h"

#include <algorithm>
#include <cctype>

namespace superhedge {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

[[noreturn]] void malformed(std::string_view text) {
  throw ParseError("malformed rational \"" + std::string(text) + "\"");
}

mpz_class to_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    mpz_class d = to_integer(den);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    result = Rational(to_integer(num), d);
    result.canonicalize();
  } else if (const auto dot_pos = body.find('.');
             dot_pos != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot_pos);
    const std::string_view frac = body.substr(dot_pos + 1);
    if (!all_digits(whole) || !all_digits(frac)) malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(to_integer(whole) * scale + to_integer(frac), scale);
    result.canonicalize();
  } else {
    if (!all_digits(body)) malformed(text);
    result = Rational(to_integer(body));
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: vectors of different length");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

const Rational& ExtendedRational::value() const {
  if (!is_finite()) {
    throw std::logic_error("ExtendedRational::value() on an infinite value");
  }
  return value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

std::string to_string(const ExtendedRational& value) {
  switch (value.kind()) {
    case ExtendedRational::Kind::kMinusInfinity:
      return "-inf";
    case ExtendedRational::Kind::kPlusInfinity:
      return "inf";
    case ExtendedRational::Kind::kFinite:
      break;
  }
  return to_string(value.value());
}

ExtendedRational parse_extended_rational(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtendedRational::plus_infinity();
  if (text == "-inf") return ExtendedRational::minus_infinity();
  return parse_rational(text);
}

}  // namespace superhedge
