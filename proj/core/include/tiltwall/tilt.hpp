#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "tiltwall/exactnum.hpp"
#include "tiltwall/lattice.hpp"

namespace tiltwall {

/// A point (alpha, beta) of the upper half plane, carried as alpha^2.
class HalfPlanePoint {
 public:
  /// Throws Error("NonPositiveAlpha") unless alpha_sq > 0.
  HalfPlanePoint(Rational alpha_sq, Rational beta);

  const Rational& alpha_sq() const noexcept { return alpha_sq_; }
  const Rational& beta() const noexcept { return beta_; }

 private:
  Rational alpha_sq_, beta_;
};

struct CentralCharge {
  Rational re, im;
  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

CentralCharge central_charge(const TruncatedCharacter& v, const HalfPlanePoint& pt);

/// Compares tilt slopes -Re Z / Im Z, with Im Z = 0 read as +infinity.
std::strong_ordering slope_cmp(const TruncatedCharacter& v, const TruncatedCharacter& w,
                               const HalfPlanePoint& pt);

namespace wall {

/// (beta - center)^2 + alpha^2 = radius_sq with radius_sq > 0.
struct Circle {
  Rational center, radius_sq;
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct VerticalLine {
  Rational beta;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

struct Everywhere {
  friend bool operator==(const Everywhere&, const Everywhere&) = default;
};

/// No point of the half plane. Circle data (radius_sq <= 0) is kept when the
/// equation has one; two non-proportional rank-zero classes have none.
struct Empty {
  std::optional<Rational> center, radius_sq;
  friend bool operator==(const Empty&, const Empty&) = default;
};

}  // namespace wall

using WallLocus = std::variant<wall::Circle, wall::VerticalLine, wall::Everywhere, wall::Empty>;

std::string describe(const WallLocus& w);

/// Locus where mu_{alpha,beta}(v) = mu_{alpha,beta}(w).
WallLocus numerical_wall(const TruncatedCharacter& v, const TruncatedCharacter& w);

/// (beta_-, beta_+) = mu_H(v) -/+ sqrt(delta(v) / (H^3 ch0)^2); RankZero for ch0 = 0.
std::pair<QuadraticValue, QuadraticValue> beta_pm(const TruncatedCharacter& v);

struct ZeroSlopeLocus {
  Rational mu, rhs;  // (beta - mu)^2 - alpha^2 = rhs
  friend bool operator==(const ZeroSlopeLocus&, const ZeroSlopeLocus&) = default;
};

ZeroSlopeLocus zero_slope_locus(const TruncatedCharacter& v);

struct LiVerdict {
  enum class Kind { Outside, Boundary, Inside };
  Kind kind;
  bool rank_ok = false;  // meaningful for Boundary only

  /// Outside, or Boundary with |ch0| in {1, 2}.
  bool admissible() const { return kind == Kind::Outside || (kind == Kind::Boundary && rank_ok); }
  std::string str() const;
  friend bool operator==(const LiVerdict&, const LiVerdict&) = default;
};

LiVerdict li_admissible(const TruncatedCharacter& v);

/// Membership in {-1/2 <= beta, alpha < -beta} u {-1 < beta < -1/2, alpha <= 1 + beta}.
bool region_V_contains(const Rational& alpha, const Rational& beta);

struct AlphaSqAt {
  enum class Kind { None, Point, WholeLine };
  Kind kind = Kind::None;
  Rational value;  // set for Point
  friend bool operator==(const AlphaSqAt&, const AlphaSqAt&) = default;
};

/// Where a wall crosses the vertical line beta = beta0.
AlphaSqAt wall_alpha_sq_at(const WallLocus& wall, const Rational& beta0);

}  // namespace tiltwall
