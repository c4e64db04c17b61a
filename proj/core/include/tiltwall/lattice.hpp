#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltwall/exactnum.hpp"

namespace tiltwall {

/// Polarized threefold data: H^3 and the Todd class coefficients of H, H^2, H^3.
struct Variety {
  int h3 = 3;
  Rational todd1;
  Rational todd2;
  Rational todd3;
};

/// The smooth cubic threefold (H^3 = 3, td = 1 + H + 2/3 H^2 + 1/3 H^3).
const Variety& cubic_threefold();

/// ch_{<=2}, each component the coefficient of H^i.
struct TruncatedCharacter {
  Rational ch0, ch1, ch2;

  TruncatedCharacter& operator+=(const TruncatedCharacter& o);
  TruncatedCharacter& operator-=(const TruncatedCharacter& o);
  friend TruncatedCharacter operator+(TruncatedCharacter a, const TruncatedCharacter& b) { return a += b; }
  friend TruncatedCharacter operator-(TruncatedCharacter a, const TruncatedCharacter& b) { return a -= b; }
  friend TruncatedCharacter operator*(const Rational& t, const TruncatedCharacter& v) {
    return {t * v.ch0, t * v.ch1, t * v.ch2};
  }
  TruncatedCharacter operator-() const { return {-ch0, -ch1, -ch2}; }

  friend bool operator==(const TruncatedCharacter&, const TruncatedCharacter&) = default;
  friend std::strong_ordering operator<=>(const TruncatedCharacter&, const TruncatedCharacter&) = default;
};

/// Full Chern character (ch0, ch1, ch2, ch3), coefficients of H^i.
/// Components are rational so the type is closed under rational scaling;
/// lattice membership is checked by validate().
struct ChernCharacter {
  Rational ch0, ch1, ch2, ch3;

  TruncatedCharacter truncate() const { return {ch0, ch1, ch2}; }

  ChernCharacter& operator+=(const ChernCharacter& o);
  ChernCharacter& operator-=(const ChernCharacter& o);
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
  friend ChernCharacter operator*(const Rational& t, const ChernCharacter& v) {
    return {t * v.ch0, t * v.ch1, t * v.ch2, t * v.ch3};
  }
  ChernCharacter operator-() const { return {-ch0, -ch1, -ch2, -ch3}; }

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
  friend std::strong_ordering operator<=>(const ChernCharacter&, const ChernCharacter&) = default;
};

/// Mumford slope, +infinity for rank zero.
class Slope {
 public:
  static Slope infinity() { return Slope(); }
  explicit Slope(Rational value) : value_(std::move(value)) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Finite value; throws DomainError on +infinity.
  const Rational& value() const;
  std::string str() const { return value_ ? value_->str() : "+inf"; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Slope() = default;
  std::optional<Rational> value_;
};

ChernCharacter twist(const ChernCharacter& v, const Rational& beta);
TruncatedCharacter twist(const TruncatedCharacter& v, const Rational& beta);
ChernCharacter dual(const ChernCharacter& v);

Slope mu_H(const TruncatedCharacter& v);
inline Slope mu_H(const ChernCharacter& v) { return mu_H(v.truncate()); }

/// H-discriminant (H^2 ch1)^2 - 2 (H^3 ch0)(H ch2).
Rational delta(const TruncatedCharacter& v);
/// Normalized discriminant delta / (H^3)^2.
Rational delta_bar(const TruncatedCharacter& v);

/// Euler characteristic by Hirzebruch-Riemann-Roch.
Rational chi1(const ChernCharacter& v);
/// Euler pairing chi(v, w) = chi1(dual(v) * w).
Rational chi2(const ChernCharacter& v, const ChernCharacter& w);
/// Graded product of characters truncated at degree 3.
ChernCharacter product(const ChernCharacter& v, const ChernCharacter& w);

struct CurveCharacters {
  ChernCharacter sheaf;   // (0, 1, (2d-3)/6, -1/6)
  ChernCharacter kernel;  // d*(1,0,0,0) - sheaf
  std::optional<std::string> warning;
};

/// Characters of the degree-d surface sheaf and its kernel; DomainError for d < 3.
CurveCharacters curve_characters(long d);

/// Integrality violations; empty iff v is a lattice point.
std::vector<std::string> validate(const ChernCharacter& v);
std::vector<std::string> validate(const TruncatedCharacter& v);

/// "r,c1,c2,c3" and "r,c1,c2"; ParseError on anything else.
ChernCharacter parse_character(std::string_view text);
TruncatedCharacter parse_truncated(std::string_view text);
/// Accepts either form; a truncated literal gets ch3 = 0.
ChernCharacter parse_character_lenient(std::string_view text, bool* had_ch3 = nullptr);

std::string format(const ChernCharacter& v);
std::string format(const TruncatedCharacter& v);

}  // namespace tiltwall
