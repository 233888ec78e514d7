#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace progdisc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. The backend keeps the canonical form invariants:
// always in lowest terms, denominator strictly positive.
using Rational = boost::multiprecision::cpp_rational;

// num/den reduced to lowest terms with a positive denominator. Accepts any
// sign on either argument (the backend's two-argument constructor does not);
// throws std::invalid_argument when den is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

// C(n, k) by the multiplicative formula with exact integers.
// Returns 0 when k < 0 or k > n, so out-of-range splits vanish naturally.
BigInt binomial(long long n, long long k);

// True when v is the square of an integer. v < 0 returns false.
bool is_square(const BigInt& v);

// Nearest binary64 value.
double to_double(const Rational& r);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or zero denominator. The sign may only prefix p.
Rational parse_fraction(const std::string& text);

// Exact value s * sqrt(q) with s in {-1, 0, +1} and q a nonnegative rational.
// Closed under multiplication. Addition is defined only when both operands
// share the same radicand or one is zero; that is the only case the chain
// calculus ever produces, and anything else throws std::logic_error.
class SqrtRational {
 public:
  SqrtRational() = default;  // zero

  // s * sqrt(q); throws std::invalid_argument when q < 0 or s not in {-1,0,1}.
  static SqrtRational from_square(int s, const Rational& q);

  // sqrt(q) for q >= 0.
  static SqrtRational sqrt_of(const Rational& q);

  // Embeds a rational exactly: sign(r) * sqrt(r^2).
  static SqrtRational of_rational(const Rational& r);

  int sign() const { return sign_; }
  const Rational& square() const { return square_; }
  bool is_zero() const { return sign_ == 0; }

  SqrtRational operator*(const SqrtRational& o) const;
  SqrtRational operator-() const;
  SqrtRational operator+(const SqrtRational& o) const;
  bool operator==(const SqrtRational& o) const;
  bool operator!=(const SqrtRational& o) const { return !(*this == o); }

  // True when the value is exactly rational (radicand a perfect square).
  bool is_perfect_square() const;

  // Exact rational value; throws std::domain_error unless is_perfect_square().
  Rational as_rational() const;

  double value() const;

 private:
  int sign_ = 0;
  Rational square_ = 0;
};

}  // namespace progdisc
