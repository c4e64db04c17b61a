#include <gtest/gtest.h>

#include "properties.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/tilt.hpp"

using namespace tiltwall;

namespace {

TruncatedCharacter tr(const char* s) { return parse_truncated(s); }
Rational q(const char* s) { return Rational::parse(s); }
WallLocus circle(const char* c, const char* r2) { return wall::Circle{q(c), q(r2)}; }
const TruncatedCharacter kNu = tr("4,-1,-5/6");

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST(Tilt, HalfPlanePointNeedsPositiveAlpha) {
  EXPECT_EQ(error_name([] { HalfPlanePoint(0, 1); }), "NonPositiveAlpha");
  EXPECT_EQ(error_name([] { HalfPlanePoint(-1, 1); }), "NonPositiveAlpha");
}

TEST(Tilt, CentralCharge) {
  EXPECT_EQ(central_charge(tr("1,0,0"), HalfPlanePoint(1, 0)), (CentralCharge{q("3/2"), 0}));
  EXPECT_EQ(central_charge(kNu, HalfPlanePoint(5, q("-1/4"))).im, 0);
  EXPECT_EQ(central_charge(tr("0,1,5/6"), HalfPlanePoint(q("2/7"), q("-9"))).im, 3);
}

TEST(Tilt, SlopeComparison) {
  const HalfPlanePoint pt(1, 0);
  EXPECT_EQ(slope_cmp(kNu, kNu, pt), std::strong_ordering::equal);
  // A point on W(-17/18, 1/18): beta = -17/18, alpha^2 = 1/324.
  EXPECT_EQ(slope_cmp(kNu, tr("-1,1,-1/2"), HalfPlanePoint(q("1/324"), q("-17/18"))),
            std::strong_ordering::equal);
  // (0,1,5/6): Z = -5/2 + 3i, slope 5/6; O: Z = 3/2, slope +inf.
  EXPECT_EQ(slope_cmp(tr("0,1,5/6"), tr("1,0,0"), pt), std::strong_ordering::less);
  EXPECT_EQ(slope_cmp(tr("0,1,5/6"), tr("0,2,5/3"), pt), std::strong_ordering::equal);
}

TEST(Tilt, QuotedWalls) {
  EXPECT_EQ(numerical_wall(kNu, tr("-1,1,-1/2")), circle("-17/18", "1/324"));
  EXPECT_EQ(numerical_wall(kNu, tr("3,-1,-1/6")), circle("-11/6", "73/36"));
  EXPECT_EQ(numerical_wall(tr("0,1,5/6"), tr("-1,0,1/3")), circle("5/6", "1/36"));
  EXPECT_EQ(numerical_wall(tr("0,1,1/6"), tr("-1,0,0")), circle("1/6", "1/36"));
  EXPECT_EQ(numerical_wall(tr("0,1,1/6"), tr("1,2,2")), circle("1/6", "121/36"));
  EXPECT_EQ(numerical_wall(tr("0,1,5/6"), tr("-1,2,-2")), circle("5/6", "289/36"));
  EXPECT_EQ(numerical_wall(tr("-1,1,5/6"), tr("-3,0,0")), circle("5/6", "25/36"));
  EXPECT_EQ(numerical_wall(tr("5,-2,-1/3"), tr("-5,12,-41/3")), circle("-7/5", "53/75"));
  EXPECT_EQ(numerical_wall(kNu, kNu), WallLocus(wall::Everywhere{}));
}

TEST(Tilt, DegenerateWalls) {
  // Same slope, different discriminants: the vertical wall.
  EXPECT_EQ(numerical_wall(tr("1,0,0"), tr("1,0,-1")), WallLocus(wall::VerticalLine{0}));
  EXPECT_EQ(numerical_wall(tr("0,1,0"), tr("0,1,1")), WallLocus(wall::Empty{}));
  const WallLocus e = numerical_wall(tr("1,0,-1"), tr("0,1,0"));
  ASSERT_TRUE(std::holds_alternative<wall::Empty>(e));
  EXPECT_EQ(std::get<wall::Empty>(e), (wall::Empty{Rational(0), Rational(-2)}));
  EXPECT_EQ(numerical_wall(tr("1,0,0"), tr("1,1,1")), WallLocus(wall::Circle{1, 1}));
}

TEST(Tilt, BetaPm) {
  const auto [a, b] = beta_pm(tr("1,0,0"));
  EXPECT_EQ(a, QuadraticValue(0));
  EXPECT_EQ(b, QuadraticValue(0));
  const auto [m, p] = beta_pm(kNu);
  EXPECT_EQ(m, qv_from(q("-1/4"), q("-1/12"), 69));
  EXPECT_EQ(p, qv_from(q("-1/4"), q("1/12"), 69));
  EXPECT_GT(m, QuadraticValue(-1));
  const auto [m5, p5] = beta_pm(tr("5,-2,-1/3"));
  EXPECT_EQ(m5, qv_from(q("-2/5"), q("-1/15"), 66));
  EXPECT_EQ(p5, qv_from(q("-2/5"), q("1/15"), 66));
  EXPECT_EQ(error_name([] { beta_pm(tr("0,1,0")); }), "RankZero");
}

TEST(Tilt, ZeroSlopeLocus) {
  EXPECT_EQ(zero_slope_locus(kNu), (ZeroSlopeLocus{q("-1/4"), q("23/48")}));
  EXPECT_EQ(zero_slope_locus(tr("1,0,0")), (ZeroSlopeLocus{0, 0}));
  EXPECT_EQ(zero_slope_locus(tr("5,-2,-1/3")), (ZeroSlopeLocus{q("-2/5"), q("66/225")}));
  EXPECT_EQ(error_name([] { zero_slope_locus(tr("0,1,0")); }), "RankZero");
}

TEST(Tilt, LiBound) {
  using K = LiVerdict::Kind;
  EXPECT_EQ(li_admissible(tr("3,-2,2/3")).kind, K::Inside);
  EXPECT_EQ(li_admissible(tr("-3,1,-1/6")).kind, K::Inside);
  EXPECT_EQ(li_admissible(kNu).kind, K::Outside);
  EXPECT_EQ(li_admissible(tr("2,-1,1/2")).kind, K::Inside);
  EXPECT_EQ(li_admissible(tr("1,0,0")), (LiVerdict{K::Boundary, true}));
  EXPECT_EQ(li_admissible(tr("-2,-2,-1")), (LiVerdict{K::Boundary, true}));
  EXPECT_EQ(li_admissible(tr("3,0,0")), (LiVerdict{K::Boundary, false}));
  EXPECT_FALSE(li_admissible(tr("3,0,0")).admissible());
  // Half-integer x: both neighbouring segments agree.
  EXPECT_EQ(li_admissible(tr("2,1,0")), (LiVerdict{K::Boundary, true}));
  EXPECT_EQ(error_name([] { li_admissible(tr("0,1,0")); }), "RankZero");
}

TEST(Tilt, LiImpliesBogomolov) {
  for (long r = 1; r <= 8; ++r)
    for (long c = -20; c <= 20; ++c)
      for (long n = -80; n <= 80; ++n) {
        const TruncatedCharacter v{r, c, Rational(n, 6)};
        if (li_admissible(v).admissible()) EXPECT_GE(delta(v).sign(), 0) << format(v);
      }
}

TEST(Tilt, RegionV) {
  EXPECT_TRUE(region_V_contains(q("1/4"), q("-1/2")));
  EXPECT_FALSE(region_V_contains(q("1/2"), q("-1/4")));
  EXPECT_FALSE(region_V_contains(q("1/5"), q("-9/10")));
  EXPECT_TRUE(region_V_contains(q("1/10"), q("-9/10")));
  EXPECT_FALSE(region_V_contains(q("1/100"), q("-1")));
  EXPECT_EQ(error_name([] { region_V_contains(0, 0); }), "NonPositiveAlpha");
}

TEST(Tilt, WallAlphaAt) {
  using K = AlphaSqAt::Kind;
  EXPECT_EQ(wall_alpha_sq_at(circle("5/6", "1/36"), q("5/6")), (AlphaSqAt{K::Point, q("1/36")}));
  EXPECT_EQ(wall_alpha_sq_at(circle("-17/18", "1/324"), -1).kind, K::None);
  EXPECT_EQ(wall_alpha_sq_at(circle("1/6", "1/36"), 0).kind, K::None);
  EXPECT_EQ(wall_alpha_sq_at(wall::VerticalLine{2}, 2).kind, K::WholeLine);
  EXPECT_EQ(wall_alpha_sq_at(wall::VerticalLine{2}, 1).kind, K::None);
}

TEST(TiltProperty, WallSymmetry) {
  const auto r = props::wall_symmetry(31, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TiltProperty, PencilInvariance) {
  const auto r = props::pencil_invariance(32, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TiltProperty, TwistEquivariance) {
  const auto r = props::twist_equivariance(33, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TiltProperty, ApexOnHyperbola) {
  const auto r = props::apex_on_hyperbola(34, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TiltProperty, RankZeroApexLine) {
  const auto r = props::rank_zero_apex_line(35, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TiltProperty, WallsDoNotCross) {
  const auto r = props::walls_non_crossing(36, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TiltProperty, BetaPmAreRoots) {
  const auto r = props::beta_pm_roots(37, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
