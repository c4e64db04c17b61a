#include "tiltwall/serialize.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const std::string& text(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

std::vector<CandidatePair> decode_pairs(const json& j) {
  if (!j.is_array()) throw ParseError("candidate list must be an array");
  std::vector<CandidatePair> out;
  for (const auto& e : j) out.push_back(decode_candidate(e));
  return out;
}

json encode_pairs(const std::vector<CandidatePair>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(encode(c));
  return out;
}

}  // namespace

json encode(const Rational& r) { return r.str(); }

json encode(const QuadraticValue& x) {
  return {{"p", x.p().str()}, {"q", x.q().str()}, {"d", x.d().str()}};
}

json encode(const ChernCharacter& v) { return format(v); }
json encode(const TruncatedCharacter& v) { return format(v); }

json encode(const WallLocus& w) {
  if (const auto* c = std::get_if<wall::Circle>(&w)) {
    return {{"type", "circle"}, {"center", c->center.str()}, {"radius_sq", c->radius_sq.str()}};
  }
  if (const auto* l = std::get_if<wall::VerticalLine>(&w)) return {{"type", "vertical"}, {"beta", l->beta.str()}};
  if (std::holds_alternative<wall::Everywhere>(w)) return {{"type", "everywhere"}};
  const auto& e = std::get<wall::Empty>(w);
  json out{{"type", "empty"}};
  if (e.center) {
    out["center"] = e.center->str();
    out["radius_sq"] = e.radius_sq->str();
  }
  return out;
}

json encode(const KuClass& k) { return {{"a", k.a}, {"b", k.b}}; }

json encode(const LiVerdict& l) {
  switch (l.kind) {
    case LiVerdict::Kind::Outside:
      return {{"kind", "outside"}};
    case LiVerdict::Kind::Inside:
      return {{"kind", "inside"}};
    case LiVerdict::Kind::Boundary:
      return {{"kind", "boundary"}, {"rank_ok", l.rank_ok}};
  }
  return {};
}

json encode(const CandidatePair& c) {
  json verdicts = json::object();
  for (const auto& [name, v] : c.verdicts) {
    verdicts[name] = v.pass ? json{{"pass", true}} : json{{"pass", false}, {"reason", v.reason}};
  }
  return {{"p", encode(c.p)},
          {"q", encode(c.q)},
          {"wall", encode(c.wall)},
          {"alpha_sq_at_ref", c.alpha_sq_at_ref ? encode(*c.alpha_sq_at_ref) : json(nullptr)},
          {"verdicts", verdicts}};
}

json encode(const ScanReport& r) {
  return {{"target", encode(r.target)},     {"query", r.query},
          {"survivors", encode_pairs(r.survivors)}, {"rejected", encode_pairs(r.rejected)},
          {"counts", r.counts},             {"warnings", r.warnings},
          {"tangent", encode_pairs(r.tangent)}};
}

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(text(j, "rational"));
}

QuadraticValue decode_quadratic(const json& j) {
  if (j.is_string() || j.is_number_integer()) return QuadraticValue(decode_rational(j));
  return qv_from(decode_rational(field(j, "p")), decode_rational(field(j, "q")), decode_rational(field(j, "d")));
}

ChernCharacter decode_character(const json& j) { return parse_character(text(j, "character")); }
TruncatedCharacter decode_truncated(const json& j) { return parse_truncated(text(j, "character")); }

WallLocus decode_wall(const json& j) {
  const std::string& type = text(field(j, "type"), "wall type");
  if (type == "circle") {
    return wall::Circle{decode_rational(field(j, "center")), decode_rational(field(j, "radius_sq"))};
  }
  if (type == "vertical") return wall::VerticalLine{decode_rational(field(j, "beta"))};
  if (type == "everywhere") return wall::Everywhere{};
  if (type == "empty") {
    wall::Empty e;
    if (j.contains("center")) {
      e.center = decode_rational(field(j, "center"));
      e.radius_sq = decode_rational(field(j, "radius_sq"));
    }
    return e;
  }
  throw ParseError("unknown wall type '" + type + "'");
}

KuClass decode_ku(const json& j) {
  if (j.is_string()) return parse_ku_class(j.get<std::string>());
  const json& a = field(j, "a");
  const json& b = field(j, "b");
  if (!a.is_number_integer() || !b.is_number_integer()) throw ParseError("Ku class coordinates must be integers");
  return {a.get<std::int64_t>(), b.get<std::int64_t>()};
}

CandidatePair decode_candidate(const json& j) {
  CandidatePair c;
  c.p = decode_truncated(field(j, "p"));
  c.q = decode_truncated(field(j, "q"));
  c.wall = decode_wall(field(j, "wall"));
  if (j.contains("alpha_sq_at_ref") && !j.at("alpha_sq_at_ref").is_null()) {
    c.alpha_sq_at_ref = decode_quadratic(j.at("alpha_sq_at_ref"));
  }
  if (j.contains("verdicts")) {
    for (const auto& [name, v] : j.at("verdicts").items()) {
      const json& pass = field(v, "pass");
      if (!pass.is_boolean()) throw ParseError("verdict 'pass' must be boolean");
      c.verdicts[name] = Verdict{pass.get<bool>(), v.contains("reason") ? text(v.at("reason"), "reason") : ""};
    }
  }
  return c;
}

ScanReport decode_report(const json& j) {
  ScanReport r;
  r.target = decode_truncated(field(j, "target"));
  r.query = text(field(j, "query"), "query");
  r.survivors = decode_pairs(field(j, "survivors"));
  r.rejected = decode_pairs(field(j, "rejected"));
  for (const auto& [name, n] : field(j, "counts").items()) {
    if (!n.is_number_integer()) throw ParseError("count must be an integer");
    r.counts[name] = n.get<long>();
  }
  for (const auto& w : field(j, "warnings")) r.warnings.push_back(text(w, "warning"));
  r.tangent = decode_pairs(field(j, "tangent"));
  return r;
}

}  // namespace tiltwall::io
