#include "progdisc/rational.hpp"

#include <cctype>
#include <cmath>

namespace progdisc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) return Rational(BigInt(-num), BigInt(-den));
  return Rational(num, den);
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // r stays integral after every division: r is C(n-k+i choose i) at step i.
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

bool is_square(const BigInt& v) {
  if (v < 0) return false;
  BigInt s = boost::multiprecision::sqrt(v);
  return s * s == v;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_fraction(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
    neg = num[0] == '-';
    num = num.substr(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a fraction literal: " + text);
  }
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational r(BigInt(num), d);
  return neg ? Rational(-r) : r;
}

SqrtRational SqrtRational::from_square(int s, const Rational& q) {
  if (q < 0) throw std::invalid_argument("negative radicand");
  if (s < -1 || s > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
  SqrtRational out;
  if (s == 0 || q == 0) return out;
  out.sign_ = s;
  out.square_ = q;
  return out;
}

SqrtRational SqrtRational::sqrt_of(const Rational& q) { return from_square(1, q); }

SqrtRational SqrtRational::of_rational(const Rational& r) {
  if (r == 0) return SqrtRational();
  return from_square(r > 0 ? 1 : -1, Rational(r * r));
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
  return from_square(sign_ * o.sign_, Rational(square_ * o.square_));
}

SqrtRational SqrtRational::operator-() const { return from_square(-sign_, square_); }

SqrtRational SqrtRational::operator+(const SqrtRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (square_ != o.square_) {
    throw std::logic_error("sum of sqrt terms with distinct radicands");
  }
  if (sign_ != o.sign_) return SqrtRational();
  // s*sqrt(q) + s*sqrt(q) = s*sqrt(4q).
  return from_square(sign_, Rational(4 * square_));
}

bool SqrtRational::operator==(const SqrtRational& o) const {
  return sign_ == o.sign_ && square_ == o.square_;
}

bool SqrtRational::is_perfect_square() const {
  if (sign_ == 0) return true;
  return is_square(numerator(square_)) && is_square(denominator(square_));
}

Rational SqrtRational::as_rational() const {
  if (sign_ == 0) return 0;
  if (!is_perfect_square()) throw std::domain_error("irrational sqrt value");
  Rational root(boost::multiprecision::sqrt(numerator(square_)),
                boost::multiprecision::sqrt(denominator(square_)));
  return sign_ > 0 ? root : Rational(-root);
}

double SqrtRational::value() const {
  return sign_ * std::sqrt(to_double(square_));
}

}  // namespace progdisc
