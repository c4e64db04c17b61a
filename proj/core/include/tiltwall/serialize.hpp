#pragma once

#include <nlohmann/json.hpp>

#include "tiltwall/exactnum.hpp"
#include "tiltwall/kuznetsov.hpp"
#include "tiltwall/lattice.hpp"
#include "tiltwall/tilt.hpp"
#include "tiltwall/wallfinder.hpp"

// JSON encoding. Numbers are exact rational strings; characters use the
// "r,c1,c2[,c3]" literal. Decoders throw ParseError on malformed input.
namespace tiltwall::io {

using nlohmann::json;

json encode(const Rational& r);
json encode(const QuadraticValue& x);
json encode(const ChernCharacter& v);
json encode(const TruncatedCharacter& v);
json encode(const WallLocus& w);
json encode(const KuClass& k);
json encode(const LiVerdict& l);
json encode(const CandidatePair& c);
json encode(const ScanReport& r);

Rational decode_rational(const json& j);
QuadraticValue decode_quadratic(const json& j);
ChernCharacter decode_character(const json& j);
TruncatedCharacter decode_truncated(const json& j);
WallLocus decode_wall(const json& j);
KuClass decode_ku(const json& j);
CandidatePair decode_candidate(const json& j);
ScanReport decode_report(const json& j);

}  // namespace tiltwall::io
