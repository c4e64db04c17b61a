#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tiltwall {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  explicit Rational(mpq_class value);
  explicit Rational(const mpz_class& n) : value_(n) {}

  /// Parses "a" or "a/b" (ASCII, optional leading '-', no whitespace).
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class floor() const;
  mpz_class ceil() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// Integer value; throws DomainError if not integral or out of `long` range.
  long to_long() const;

  /// "a" for integers, "a/b" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact real number p + q*sqrt(d) with rational p, q and d >= 0.
///
/// Canonical form: q = 0 and d = 0 whenever the square root is rational;
/// otherwise d is a positive integer with small square factors moved into q.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Rational p);  // NOLINT(google-explicit-constructor)

  /// Canonicalizing constructor; throws Error("NegativeRadicand") if d < 0.
  static QuadraticValue from(const Rational& p, const Rational& q, const Rational& d);

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  const Rational& d() const noexcept { return d_; }
  bool is_rational() const { return q_.is_zero(); }

  /// "p" when rational, else "p + q*sqrt(d)".
  std::string str() const;

  /// Greatest integer <= value (exact).
  mpz_class floor() const;
  mpz_class ceil() const;

  QuadraticValue operator-() const;
  friend QuadraticValue operator+(const QuadraticValue& x, const Rational& r);
  friend QuadraticValue operator-(const QuadraticValue& x, const Rational& r);
  friend QuadraticValue operator*(const QuadraticValue& x, const Rational& r);
  friend QuadraticValue operator+(const Rational& r, const QuadraticValue& x) { return x + r; }
  friend QuadraticValue operator-(const Rational& r, const QuadraticValue& x) { return -x + r; }
  friend QuadraticValue operator*(const Rational& r, const QuadraticValue& x) { return x * r; }

  /// Sum/product of values sharing a radicand (or where one side is
  /// rational). Mixed radicands throw Error("MixedRadicand").
  friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
  friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
  friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);

  friend bool operator==(const QuadraticValue& x, const QuadraticValue& y);
  friend std::strong_ordering operator<=>(const QuadraticValue& x, const QuadraticValue& y);

 private:
  Rational p_, q_, d_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticValue& x);

QuadraticValue qv_from(const Rational& p, const Rational& q, const Rational& d);

/// Exact sign (-1, 0, +1) of p + q*sqrt(d).
int qv_sign(const QuadraticValue& x);

/// Exact total order; distinct radicands are handled by sign-tracked squaring.
std::strong_ordering qv_cmp(const QuadraticValue& x, const QuadraticValue& y);

/// Exact sign of a + b*sqrt(m) + c*sqrt(n) for rationals with m, n >= 0.
int sign_of_two_radicals(const Rational& a, const Rational& b, const Rational& m,
                         const Rational& c, const Rational& n);

}  // namespace tiltwall
