#include "tiltwall/lattice.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

const Rational kHalf(1, 2);
const Rational kSixth(1, 6);

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<Rational> parse_components(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& part : split_commas(text)) {
    try {
      out.push_back(Rational::parse(part));
    } catch (const ParseError&) {
      throw ParseError("invalid character literal '" + std::string(text) + "'");
    }
  }
  return out;
}

bool is_even(const Rational& r) { return r.is_integer() && mpz_even_p(r.value().get_num_mpz_t()); }

void check_low_degrees(const Rational& ch0, const Rational& ch1, const Rational& ch2,
                       std::vector<std::string>& out) {
  if (!ch0.is_integer()) out.push_back("ch0 not integral");
  if (!ch1.is_integer()) out.push_back("ch1 not integral");
  const Rational six_ch2 = Rational(6) * ch2;
  if (!six_ch2.is_integer()) {
    out.push_back("6*ch2 not integral");
  } else if (ch1.is_integer() && !is_even(six_ch2 - ch1)) {
    out.push_back("parity: 6*ch2 = " + six_ch2.str() + " is not congruent to ch1 = " + ch1.str() + " (mod 2)");
  }
}

}  // namespace

const Variety& cubic_threefold() {
  static const Variety x{3, Rational(1), Rational(2, 3), Rational(1, 3)};
  return x;
}

TruncatedCharacter& TruncatedCharacter::operator+=(const TruncatedCharacter& o) {
  ch0 += o.ch0;
  ch1 += o.ch1;
  ch2 += o.ch2;
  return *this;
}

TruncatedCharacter& TruncatedCharacter::operator-=(const TruncatedCharacter& o) {
  ch0 -= o.ch0;
  ch1 -= o.ch1;
  ch2 -= o.ch2;
  return *this;
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
  ch0 += o.ch0;
  ch1 += o.ch1;
  ch2 += o.ch2;
  ch3 += o.ch3;
  return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
  ch0 -= o.ch0;
  ch1 -= o.ch1;
  ch2 -= o.ch2;
  ch3 -= o.ch3;
  return *this;
}

const Rational& Slope::value() const {
  if (!value_) throw Error("DomainError", "slope is +infinity");
  return *value_;
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

ChernCharacter twist(const ChernCharacter& v, const Rational& beta) {
  const Rational b2 = beta * beta * kHalf;
  const Rational b3 = beta * beta * beta * kSixth;
  return {v.ch0, v.ch1 - beta * v.ch0, v.ch2 - beta * v.ch1 + b2 * v.ch0,
          v.ch3 - beta * v.ch2 + b2 * v.ch1 - b3 * v.ch0};
}

TruncatedCharacter twist(const TruncatedCharacter& v, const Rational& beta) {
  return {v.ch0, v.ch1 - beta * v.ch0, v.ch2 - beta * v.ch1 + beta * beta * kHalf * v.ch0};
}

ChernCharacter dual(const ChernCharacter& v) { return {v.ch0, -v.ch1, v.ch2, -v.ch3}; }

Slope mu_H(const TruncatedCharacter& v) {
  if (v.ch0.is_zero()) return Slope::infinity();
  return Slope(v.ch1 / v.ch0);
}

Rational delta(const TruncatedCharacter& v) {
  const Rational h3(cubic_threefold().h3);
  const Rational c = h3 * v.ch1;
  return c * c - Rational(2) * (h3 * v.ch0) * (h3 * v.ch2);
}

Rational delta_bar(const TruncatedCharacter& v) {
  const Rational h3(cubic_threefold().h3);
  return delta(v) / (h3 * h3);
}

Rational chi1(const ChernCharacter& v) {
  const Variety& x = cubic_threefold();
  return Rational(x.h3) * (v.ch3 + x.todd1 * v.ch2 + x.todd2 * v.ch1 + x.todd3 * v.ch0);
}

ChernCharacter product(const ChernCharacter& v, const ChernCharacter& w) {
  return {v.ch0 * w.ch0, v.ch0 * w.ch1 + v.ch1 * w.ch0, v.ch0 * w.ch2 + v.ch1 * w.ch1 + v.ch2 * w.ch0,
          v.ch0 * w.ch3 + v.ch1 * w.ch2 + v.ch2 * w.ch1 + v.ch3 * w.ch0};
}

Rational chi2(const ChernCharacter& v, const ChernCharacter& w) { return chi1(product(dual(v), w)); }

CurveCharacters curve_characters(long d) {
  if (d < 3) throw Error("DomainError", "curve degree must be at least 3, got " + std::to_string(d));
  CurveCharacters out;
  out.sheaf = {Rational(0), Rational(1), Rational(2 * d - 3, 6), -kSixth};
  out.kernel = Rational(d) * ChernCharacter{Rational(1), Rational(0), Rational(0), Rational(0)} - out.sheaf;
  if (d > 6) out.warning = "degree " + std::to_string(d) + " lies outside the studied range 4..6";
  if (d == 3) out.warning = "degree 3 lies outside the studied range 4..6";
  return out;
}

std::vector<std::string> validate(const ChernCharacter& v) {
  std::vector<std::string> out;
  check_low_degrees(v.ch0, v.ch1, v.ch2, out);
  if (!(Rational(6) * v.ch3).is_integer()) out.push_back("6*ch3 not integral");
  return out;
}

std::vector<std::string> validate(const TruncatedCharacter& v) {
  std::vector<std::string> out;
  check_low_degrees(v.ch0, v.ch1, v.ch2, out);
  return out;
}

ChernCharacter parse_character(std::string_view text) {
  const auto c = parse_components(text);
  if (c.size() != 4) throw ParseError("expected 'r,c1,c2,c3', got '" + std::string(text) + "'");
  return {c[0], c[1], c[2], c[3]};
}

TruncatedCharacter parse_truncated(std::string_view text) {
  const auto c = parse_components(text);
  if (c.size() != 3) throw ParseError("expected 'r,c1,c2', got '" + std::string(text) + "'");
  return {c[0], c[1], c[2]};
}

ChernCharacter parse_character_lenient(std::string_view text, bool* had_ch3) {
  const auto c = parse_components(text);
  if (c.size() != 3 && c.size() != 4) {
    throw ParseError("expected 'r,c1,c2' or 'r,c1,c2,c3', got '" + std::string(text) + "'");
  }
  if (had_ch3) *had_ch3 = c.size() == 4;
  return {c[0], c[1], c[2], c.size() == 4 ? c[3] : Rational()};
}

std::string format(const ChernCharacter& v) {
  return v.ch0.str() + "," + v.ch1.str() + "," + v.ch2.str() + "," + v.ch3.str();
}

std::string format(const TruncatedCharacter& v) { return v.ch0.str() + "," + v.ch1.str() + "," + v.ch2.str(); }

}  // namespace tiltwall
