#include "tiltwall/tilt.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

const Rational kHalf(1, 2);

Rational h3() { return Rational(cubic_threefold().h3); }

void require_rank(const TruncatedCharacter& v) {
  if (v.ch0.is_zero()) throw Error("RankZero", "character " + format(v) + " has rank zero");
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

HalfPlanePoint::HalfPlanePoint(Rational alpha_sq, Rational beta)
    : alpha_sq_(std::move(alpha_sq)), beta_(std::move(beta)) {
  if (alpha_sq_.sign() <= 0) throw Error("NonPositiveAlpha", "alpha^2 = " + alpha_sq_.str() + " is not positive");
}

CentralCharge central_charge(const TruncatedCharacter& v, const HalfPlanePoint& pt) {
  const TruncatedCharacter t = twist(v, pt.beta());
  return {kHalf * pt.alpha_sq() * h3() * t.ch0 - h3() * t.ch2, h3() * t.ch1};
}

std::strong_ordering slope_cmp(const TruncatedCharacter& v, const TruncatedCharacter& w,
                               const HalfPlanePoint& pt) {
  const CentralCharge zv = central_charge(v, pt);
  const CentralCharge zw = central_charge(w, pt);
  if (zv.im.is_zero() || zw.im.is_zero()) return zv.im.is_zero() <=> zw.im.is_zero();
  return (-zv.re / zv.im) <=> (-zw.re / zw.im);
}

std::string describe(const WallLocus& w) {
  return std::visit(overloaded{
                        [](const wall::Circle& c) {
                          return "circle center " + c.center.str() + " radius^2 " + c.radius_sq.str();
                        },
                        [](const wall::VerticalLine& l) { return "vertical line beta = " + l.beta.str(); },
                        [](const wall::Everywhere&) { return std::string("everywhere"); },
                        [](const wall::Empty& e) {
                          if (!e.center) return std::string("empty");
                          return "empty (center " + e.center->str() + " radius^2 " + e.radius_sq->str() + ")";
                        },
                    },
                    w);
}

WallLocus numerical_wall(const TruncatedCharacter& v, const TruncatedCharacter& w) {
  // Equal slopes <=> x/2 (alpha^2 + beta^2) - y beta + z = 0.
  const Rational x = v.ch0 * w.ch1 - w.ch0 * v.ch1;
  const Rational y = v.ch0 * w.ch2 - w.ch0 * v.ch2;
  const Rational z = v.ch1 * w.ch2 - w.ch1 * v.ch2;
  if (x.is_zero()) {
    if (!y.is_zero()) return wall::VerticalLine{z / y};
    if (z.is_zero()) return wall::Everywhere{};
    return wall::Empty{};
  }
  Rational center = y / x;
  Rational radius_sq = center * center - Rational(2) * z / x;
  if (radius_sq.sign() <= 0) return wall::Empty{std::move(center), std::move(radius_sq)};
  return wall::Circle{std::move(center), std::move(radius_sq)};
}

std::pair<QuadraticValue, QuadraticValue> beta_pm(const TruncatedCharacter& v) {
  const ZeroSlopeLocus z = zero_slope_locus(v);
  return {qv_from(z.mu, Rational(-1), z.rhs), qv_from(z.mu, Rational(1), z.rhs)};
}

ZeroSlopeLocus zero_slope_locus(const TruncatedCharacter& v) {
  require_rank(v);
  const Rational r = h3() * v.ch0;
  return {v.ch1 / v.ch0, delta(v) / (r * r)};
}

std::string LiVerdict::str() const {
  switch (kind) {
    case Kind::Outside:
      return "outside";
    case Kind::Inside:
      return "inside";
    case Kind::Boundary:
      return rank_ok ? "boundary(rank ok)" : "boundary(rank not 1 or 2)";
  }
  return {};
}

LiVerdict li_admissible(const TruncatedCharacter& v) {
  require_rank(v);
  const Rational x = v.ch1 / v.ch0;
  const Rational y = v.ch2 / v.ch0;
  const Rational n((x + kHalf).floor());
  const Rational b = n * x - n * n * kHalf;
  if (y < b) return {LiVerdict::Kind::Outside};
  if (y > b) return {LiVerdict::Kind::Inside};
  const Rational r = v.ch0.abs();
  return {LiVerdict::Kind::Boundary, r == Rational(1) || r == Rational(2)};
}

bool region_V_contains(const Rational& alpha, const Rational& beta) {
  if (alpha.sign() <= 0) throw Error("NonPositiveAlpha", "alpha = " + alpha.str() + " is not positive");
  const Rational half(-1, 2);
  if (beta >= half) return alpha < -beta;
  return beta > Rational(-1) && alpha <= Rational(1) + beta;
}

AlphaSqAt wall_alpha_sq_at(const WallLocus& wall, const Rational& beta0) {
  return std::visit(overloaded{
                        [&](const wall::Circle& c) {
                          const Rational d = beta0 - c.center;
                          const Rational a = c.radius_sq - d * d;
                          if (a.sign() > 0) return AlphaSqAt{AlphaSqAt::Kind::Point, a};
                          return AlphaSqAt{};
                        },
                        [&](const wall::VerticalLine& l) {
                          if (l.beta == beta0) return AlphaSqAt{AlphaSqAt::Kind::WholeLine, Rational()};
                          return AlphaSqAt{};
                        },
                        [](const wall::Everywhere&) { return AlphaSqAt{AlphaSqAt::Kind::WholeLine, Rational()}; },
                        [](const wall::Empty&) { return AlphaSqAt{}; },
                    },
                    wall);
}

}  // namespace tiltwall
