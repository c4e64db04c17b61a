#include <gtest/gtest.h>

#include "tiltwall/error.hpp"
#include "tiltwall/serialize.hpp"

using namespace tiltwall;
using nlohmann::json;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST(Serialize, Scalars) {
  EXPECT_EQ(io::encode(q("-17/18")), json("-17/18"));
  EXPECT_EQ(io::decode_rational(json("4/6")), q("2/3"));
  const QuadraticValue x = qv_from(q("-1/4"), q("-1/12"), 69);
  EXPECT_EQ(io::decode_quadratic(io::encode(x)), x);
  EXPECT_EQ(io::decode_quadratic(json("5/7")), QuadraticValue(q("5/7")));
  EXPECT_THROW(io::decode_rational(json("1/0")), ParseError);
  EXPECT_EQ(io::decode_rational(json(3)), 3);
  EXPECT_THROW(io::decode_rational(json(1.5)), ParseError);
}

TEST(Serialize, Characters) {
  const ChernCharacter v = parse_character("4,-1,-5/6,1/6");
  EXPECT_EQ(io::encode(v), json("4,-1,-5/6,1/6"));
  EXPECT_EQ(io::decode_character(io::encode(v)), v);
  const TruncatedCharacter t = parse_truncated("-1,1,-1/2");
  EXPECT_EQ(io::decode_truncated(io::encode(t)), t);
  EXPECT_THROW(io::decode_truncated(json("1,2")), ParseError);
}

TEST(Serialize, Walls) {
  const std::vector<WallLocus> walls{wall::Circle{q("-17/18"), q("1/324")}, wall::VerticalLine{q("1/2")},
                                     wall::Everywhere{}, wall::Empty{q("1/2"), q("-3")}, wall::Empty{}};
  for (const auto& w : walls) EXPECT_EQ(io::decode_wall(io::encode(w)), w) << describe(w);
  EXPECT_EQ(io::encode(walls[0]), (json{{"type", "circle"}, {"center", "-17/18"}, {"radius_sq", "1/324"}}));
  EXPECT_THROW(io::decode_wall(json{{"type", "ellipse"}}), ParseError);
}

TEST(Serialize, KuClasses) {
  EXPECT_EQ(io::decode_ku(io::encode(KuClass{-1, 3})), (KuClass{-1, 3}));
  EXPECT_EQ(io::decode_ku(json("3,-2")), (KuClass{3, -2}));
}

TEST(Serialize, ReportsRoundTrip) {
  ScanBounds b;
  b.rank_max = 8;
  b.workers = 1;
  const ScanReport r = scan_vertical(parse_truncated("5,-2,-1/3"), -1, b);
  const json j = io::encode(r);
  EXPECT_EQ(io::decode_report(j), r);
  EXPECT_EQ(io::decode_report(json::parse(j.dump())), r);
  const ScanReport left = scan_region_left(parse_truncated("4,-1,-5/6"), b);
  EXPECT_EQ(io::decode_report(io::encode(left)), left);
}
