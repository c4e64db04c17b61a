#include "tiltwall/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::strong_ordering to_ordering(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// sign(u + v) given sign(u), sign(v) and the sign of u^2 - v^2.
template <typename SquareDiff>
int sign_of_sum(int su, int sv, SquareDiff&& square_diff_sign) {
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  const int d = square_diff_sign();
  return d > 0 ? su : (d < 0 ? sv : 0);
}

// Sign of p + q*sqrt(d); the single-radicand base case.
int sign_single(const Rational& p, const Rational& q, const Rational& d) {
  const int sq = d.is_zero() ? 0 : q.sign();
  return sign_of_sum(p.sign(), sq, [&] { return (p * p - q * q * d).sign(); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("invalid rational literal '" + original + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + original + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw Error("DomainError", "expected a machine integer, got " + str());
  }
  return value_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("DivisionByZero", "division of " + str() + " by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// QuadraticValue

QuadraticValue::QuadraticValue(Rational p) : p_(std::move(p)) {}

QuadraticValue QuadraticValue::from(const Rational& p, const Rational& q, const Rational& d) {
  if (d.sign() < 0) throw Error("NegativeRadicand", "radicand " + d.str() + " is negative");
  QuadraticValue out(p);
  if (q.is_zero() || d.is_zero()) return out;

  // sqrt(n/m) = sqrt(n*m)/m
  mpz_class radicand = d.numerator() * d.denominator();
  mpz_class scale = 1;
  for (unsigned long k = 2; k < 1000; ++k) {
    const mpz_class sq = k * k;
    if (sq > radicand) break;
    while (mpz_divisible_p(radicand.get_mpz_t(), sq.get_mpz_t())) {
      radicand /= sq;
      scale *= k;
    }
  }
  Rational coeff = q * Rational(mpq_class(scale, d.denominator()));
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    out.p_ += coeff * Rational(root);
    return out;
  }
  out.q_ = std::move(coeff);
  out.d_ = Rational(radicand);
  return out;
}

std::string QuadraticValue::str() const {
  if (is_rational()) return p_.str();
  const std::string root = (q_.abs() == 1 ? "" : q_.abs().str() + "*") + "sqrt(" + d_.str() + ")";
  const std::string sign = q_.sign() < 0 ? "-" : "";
  if (p_.sign() == 0) return sign + root;
  return p_.str() + (sign.empty() ? " + " : " - ") + root;
}

mpz_class QuadraticValue::floor() const {
  if (is_rational()) return p_.floor();
  // Seed from a high-precision estimate, then settle exactly.
  const mp_bitcnt_t bits = 128 + mpz_sizeinbase(d_.numerator().get_mpz_t(), 2) +
                           mpz_sizeinbase(q_.numerator().get_mpz_t(), 2) +
                           mpz_sizeinbase(p_.numerator().get_mpz_t(), 2);
  mpf_class root(d_.value(), bits);
  root = sqrt(root);
  mpf_class approx(p_.value(), bits);
  approx += mpf_class(q_.value(), bits) * root;
  mpf_class fl(0, bits);
  mpf_floor(fl.get_mpf_t(), approx.get_mpf_t());
  mpz_class k(fl);
  while (qv_cmp(*this, Rational(k)) < 0) --k;
  while (qv_cmp(*this, Rational(mpz_class(k + 1))) >= 0) ++k;
  return k;
}

mpz_class QuadraticValue::ceil() const {
  mpz_class f = floor();
  if (qv_cmp(*this, Rational(f)) != 0) f += 1;
  return f;
}

QuadraticValue QuadraticValue::operator-() const {
  QuadraticValue out(-p_);
  out.q_ = -q_;
  out.d_ = d_;
  return out;
}

QuadraticValue operator+(const QuadraticValue& x, const Rational& r) {
  QuadraticValue out = x;
  out.p_ += r;
  return out;
}

QuadraticValue operator-(const QuadraticValue& x, const Rational& r) { return x + (-r); }

QuadraticValue operator*(const QuadraticValue& x, const Rational& r) {
  if (r.is_zero()) return QuadraticValue();
  QuadraticValue out = x;
  out.p_ *= r;
  out.q_ *= r;
  return out;
}

namespace {

const Rational& shared_radicand(const QuadraticValue& x, const QuadraticValue& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw Error("MixedRadicand", "cannot combine " + x.str() + " and " + y.str());
}

}  // namespace

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
  const Rational d = shared_radicand(x, y);
  QuadraticValue out(x.p_ + y.p_);
  out.q_ = x.q_ + y.q_;
  out.d_ = out.q_.is_zero() ? Rational() : d;
  return out;
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) { return x + (-y); }

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
  const Rational d = shared_radicand(x, y);
  QuadraticValue out(x.p_ * y.p_ + x.q_ * y.q_ * d);
  out.q_ = x.p_ * y.q_ + y.p_ * x.q_;
  out.d_ = out.q_.is_zero() ? Rational() : d;
  return out;
}

bool operator==(const QuadraticValue& x, const QuadraticValue& y) { return qv_cmp(x, y) == 0; }

std::strong_ordering operator<=>(const QuadraticValue& x, const QuadraticValue& y) { return qv_cmp(x, y); }

std::ostream& operator<<(std::ostream& os, const QuadraticValue& x) { return os << x.str(); }

QuadraticValue qv_from(const Rational& p, const Rational& q, const Rational& d) {
  return QuadraticValue::from(p, q, d);
}

int qv_sign(const QuadraticValue& x) { return sign_single(x.p(), x.q(), x.d()); }

int sign_of_two_radicals(const Rational& a, const Rational& b, const Rational& m, const Rational& c,
                         const Rational& n) {
  if (m.sign() < 0 || n.sign() < 0) throw Error("NegativeRadicand", "radicand is negative");
  const int su = m.is_zero() ? 0 : b.sign();
  const int sv = n.is_zero() ? 0 : c.sign();
  // T = b*sqrt(m) + c*sqrt(n)
  const int st = sign_of_sum(su, sv, [&] { return (b * b * m - c * c * n).sign(); });
  // a + T: compare a^2 against T^2 = b^2 m + c^2 n + 2bc sqrt(mn)
  return sign_of_sum(a.sign(), st, [&] {
    const int t2_minus_a2 = sign_single(b * b * m + c * c * n - a * a, Rational(2) * b * c, m * n);
    return -t2_minus_a2;
  });
}

std::strong_ordering qv_cmp(const QuadraticValue& x, const QuadraticValue& y) {
  if (x.d() == y.d() || y.is_rational() || x.is_rational()) {
    const Rational& d = x.is_rational() ? y.d() : x.d();
    if (x.is_rational() || y.is_rational() || x.d() == y.d()) {
      const Rational q = (x.is_rational() ? Rational() : x.q()) - (y.is_rational() ? Rational() : y.q());
      return to_ordering(sign_single(x.p() - y.p(), q, d));
    }
  }
  return to_ordering(sign_of_two_radicals(x.p() - y.p(), x.q(), x.d(), -y.q(), y.d()));
}

}  // namespace tiltwall
