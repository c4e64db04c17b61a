#include "tiltwall/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "tiltwall/error.hpp"
#include "tiltwall/kuznetsov.hpp"
#include "tiltwall/serialize.hpp"
#include "tiltwall/tilt.hpp"
#include "tiltwall/wallfinder.hpp"

namespace tiltwall {

namespace {

using nlohmann::json;
using Pair = std::pair<TruncatedCharacter, TruncatedCharacter>;

const std::set<std::string> kProvenance{"paper", "trivial", "derived"};

// Field access that reports the failing path as MalformedFixture.
class Reader {
 public:
  explicit Reader(std::string file) : file_(std::move(file)) {}

  const json& at(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object() || !obj.contains(key)) throw MalformedFixture(file_, path + key, "missing");
    return obj.at(key);
  }

  template <typename F>
  auto decode(const json& obj, const std::string& key, const std::string& path, F&& f) const {
    const json& v = at(obj, key, path);
    try {
      return f(v);
    } catch (const ParseError& e) {
      throw MalformedFixture(file_, path + key, e.what());
    }
  }

  const std::string& file() const { return file_; }

 private:
  std::string file_;
};

std::string show(const std::set<Pair>& s) {
  std::string out = "{";
  for (const auto& [p, q] : s) out += " (" + format(p) + " | " + format(q) + ")";
  return out + " }";
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <typename T>
std::string str_of(const T& v) {
  return io::encode(v).dump();
}

Outcome run_scan_fixture(const Reader& rd, const json& params, const json& expect, bool vertical,
                         std::vector<std::string>& warnings, const std::string& name) {
  const TruncatedCharacter target = rd.decode(params, "target", "params.", io::decode_truncated);
  std::vector<long> ranks;
  const json& rm = rd.at(params, "rank_max", "params.");
  if (rm.is_number_integer()) {
    ranks.push_back(rm.get<long>());
  } else if (rm.is_array() && !rm.empty() &&
             std::all_of(rm.begin(), rm.end(), [](const json& x) { return x.is_number_integer(); })) {
    for (const auto& x : rm) ranks.push_back(x.get<long>());
  } else {
    throw MalformedFixture(rd.file(), "params.rank_max", "integer or non-empty integer list expected");
  }
  FilterSet filters;
  if (params.contains("li")) {
    if (!params.at("li").is_boolean()) throw MalformedFixture(rd.file(), "params.li", "boolean expected");
    filters.li_on_p = filters.li_on_q = params.at("li").get<bool>();
  }
  ScanBounds bounds;
  if (params.contains("ch2_sixths")) {
    const json& r = params.at("ch2_sixths");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
      throw MalformedFixture(rd.file(), "params.ch2_sixths", "[lo, hi] integers expected");
    }
    bounds.ch2_sixths = std::make_pair(r[0].get<long>(), r[1].get<long>());
  }

  const json& surv = rd.at(expect, "survivors", "expect.");
  if (!surv.is_array()) throw MalformedFixture(rd.file(), "expect.survivors", "array expected");
  std::set<Pair> want;
  std::map<Pair, WallLocus> want_walls;
  for (std::size_t i = 0; i < surv.size(); ++i) {
    const std::string path = "expect.survivors[" + std::to_string(i) + "].";
    const auto p = rd.decode(surv[i], "p", path, io::decode_truncated);
    const auto q = rd.decode(surv[i], "q", path, io::decode_truncated);
    if (p + q != target) throw MalformedFixture(rd.file(), path + "q", "p + q differs from the target");
    const Pair key = canonical_pair(p, q);
    want.insert(key);
    if (surv[i].contains("wall")) want_walls[key] = rd.decode(surv[i], "wall", path, io::decode_wall);
  }

  Outcome out;
  for (long rank_max : ranks) {
    bounds.rank_max = rank_max;
    for (const auto& [p, q] : want) {
      if (std::max(p.ch0.abs(), q.ch0.abs()) > Rational(rank_max)) {
        warnings.push_back("BoundsTooSmall: " + name + ": expected candidate (" + format(p) + " | " + format(q) +
                           ") exceeds rank_max " + std::to_string(rank_max));
      }
    }
    Rational beta;
    const ScanReport report = [&] {
      if (vertical) {
        beta = rd.decode(params, "beta", "params.", io::decode_rational);
        return scan_vertical(target, beta, bounds, filters);
      }
      return scan_region_left(target, bounds, filters);
    }();
    std::set<Pair> got;
    for (const auto& c : report.survivors) got.insert({c.p, c.q});
    out.expect(got == want, "rank_max " + std::to_string(rank_max) + ": survivors " + show(got) +
                                ", expected " + show(want));
    for (const auto& c : report.survivors) {
      const auto it = want_walls.find({c.p, c.q});
      if (it != want_walls.end()) {
        out.expect(it->second == c.wall, "wall for (" + format(c.p) + " | " + format(c.q) + "): " +
                                             describe(c.wall) + ", expected " + describe(it->second));
      }
    }
  }
  return out;
}

Outcome run_query(const Reader& rd, const std::string& query, const json& params, const json& expect,
                  std::vector<std::string>& warnings, const std::string& name) {
  Outcome out;
  auto expect_rational = [&](const Rational& got, const char* key) {
    const Rational want = rd.decode(expect, key, "expect.", io::decode_rational);
    out.expect(got == want, std::string(key) + " = " + got.str() + ", expected " + want.str());
  };
  auto expect_int = [&](std::int64_t got, const char* key) {
    const json& w = rd.at(expect, key, "expect.");
    if (!w.is_number_integer()) throw MalformedFixture(rd.file(), std::string("expect.") + key, "integer expected");
    out.expect(got == w.get<std::int64_t>(),
               std::string(key) + " = " + std::to_string(got) + ", expected " + w.dump());
  };
  auto expect_bool = [&](bool got, const char* key) {
    const json& w = rd.at(expect, key, "expect.");
    if (!w.is_boolean()) throw MalformedFixture(rd.file(), std::string("expect.") + key, "boolean expected");
    out.expect(got == w.get<bool>(), std::string(key) + " = " + (got ? "true" : "false"));
  };
  auto character = [&](const char* key) { return rd.decode(params, key, "params.", io::decode_character); };
  auto truncated = [&](const char* key) { return rd.decode(params, key, "params.", io::decode_truncated); };
  auto ku = [&](const char* key) { return rd.decode(params, key, "params.", io::decode_ku); };

  if (query == "chi") {
    const ChernCharacter v = character("v");
    const Rational got = params.contains("w") ? chi2(v, character("w")) : chi1(v);
    expect_rational(got, "value");
  } else if (query == "wall") {
    const WallLocus got = numerical_wall(truncated("v"), truncated("w"));
    const WallLocus want = rd.decode(expect, "wall", "expect.", io::decode_wall);
    out.expect(got == want, describe(got) + ", expected " + describe(want));
  } else if (query == "scan_vertical" || query == "scan_region") {
    return run_scan_fixture(rd, params, expect, query == "scan_vertical", warnings, name);
  } else if (query == "ku") {
    const std::string op = rd.decode(params, "op", "params.", [](const json& j) {
      if (!j.is_string()) throw ParseError("string expected");
      return j.get<std::string>();
    });
    if (op == "decompose") {
      const KuClass got = from_chern(character("v"));
      const KuClass want = rd.decode(expect, "value", "expect.", io::decode_ku);
      out.expect(got == want, "got " + ku_label(got) + ", expected " + ku_label(want));
    } else if (op == "compose") {
      const ChernCharacter got = to_chern(ku("k"));
      const ChernCharacter want = rd.decode(expect, "value", "expect.", io::decode_character);
      out.expect(got == want, "got " + format(got) + ", expected " + format(want));
    } else if (op == "membership") {
      expect_bool(ku_numeric_membership(character("v")), "value");
    } else if (op == "serre") {
      bool shift = false;
      if (params.contains("shift")) {
        if (!params.at("shift").is_boolean()) throw MalformedFixture(rd.file(), "params.shift", "boolean expected");
        shift = params.at("shift").get<bool>();
      }
      const KuClass got = serre_apply(ku("k"), shift);
      const KuClass want = rd.decode(expect, "value", "expect.", io::decode_ku);
      out.expect(got == want, "got " + ku_label(got) + ", expected " + ku_label(want));
    } else if (op == "pairing") {
      const IntMatrix2 got = pairing_matrix();
      const json& w = rd.at(expect, "matrix", "expect.");
      out.expect(json(got) == w, "pairing " + json(got).dump() + ", expected " + w.dump());
    } else {
      throw MalformedFixture(rd.file(), "params.op", "unknown ku op '" + op + "'");
    }
  } else if (query == "orbit") {
    const auto got = serre_orbit(ku("k"));
    const json& w = rd.at(expect, "orbit", "expect.");
    if (!w.is_array() || w.size() != 3) throw MalformedFixture(rd.file(), "expect.orbit", "three classes expected");
    for (std::size_t i = 0; i < 3; ++i) {
      KuClass want;
      try {
        want = io::decode_ku(w[i]);
      } catch (const ParseError& e) {
        throw MalformedFixture(rd.file(), "expect.orbit[" + std::to_string(i) + "]", e.what());
      }
      out.expect(got[i] == want, "node " + std::to_string(i) + ": " + ku_label(got[i]) + ", expected " +
                                     ku_label(want));
    }
  } else if (query == "dim") {
    const ChernCharacter v = params.contains("k") ? to_chern(ku("k")) : character("v");
    expect_int(expected_dim(v), "value");
  } else if (query == "bound") {
    expect_rational(derived_bound_report(truncated("target")).k, "k");
  } else if (query == "hyperbola") {
    const ZeroSlopeLocus z = zero_slope_locus(truncated("v"));
    expect_rational(z.mu, "mu");
    expect_rational(z.rhs, "rhs");
  } else if (query == "beta") {
    const auto [minus, plus] = beta_pm(truncated("v"));
    const QuadraticValue want_minus = rd.decode(expect, "minus", "expect.", io::decode_quadratic);
    const QuadraticValue want_plus = rd.decode(expect, "plus", "expect.", io::decode_quadratic);
    out.expect(minus == want_minus && plus == want_plus,
               "got (" + minus.str() + ", " + plus.str() + "), expected (" + want_minus.str() + ", " +
                   want_plus.str() + ")");
  } else if (query == "oplus") {
    const json& r = rd.at(params, "r", "params.");
    if (!r.is_number_integer()) throw MalformedFixture(rd.file(), "params.r", "integer expected");
    expect_bool(oplus_exclusion(r.get<long>()), "value");
  } else {
    throw MalformedFixture(rd.file(), "query", "unknown query '" + query + "'");
  }
  return out;
}

}  // namespace

std::size_t VerifySummary::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

FixtureResult run_fixture(const json& fixture, const std::string& file, std::vector<std::string>& warnings) {
  const Reader rd(file);
  auto string_field = [&](const char* key) {
    const json& v = rd.at(fixture, key, "");
    if (!v.is_string()) throw MalformedFixture(file, key, "string expected");
    return v.get<std::string>();
  };
  FixtureResult result;
  result.file = file;
  result.name = string_field("name");
  string_field("paper_ref");
  if (!kProvenance.count(string_field("provenance"))) {
    throw MalformedFixture(file, "provenance", "must be one of paper, trivial, derived");
  }
  const std::string query = string_field("query");
  const json& params = rd.at(fixture, "params", "");
  const json& expect = rd.at(fixture, "expect", "");
  if (!params.is_object()) throw MalformedFixture(file, "params", "object expected");
  if (!expect.is_object()) throw MalformedFixture(file, "expect", "object expected");
  try {
    const Outcome o = run_query(rd, query, params, expect, warnings, result.name);
    result.passed = o.ok;
    result.detail = o.detail;
  } catch (const MalformedFixture&) {
    throw;
  } catch (const Error& e) {
    result.passed = false;
    result.detail = e.what();
  }
  return result;
}

VerifySummary verify_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  VerifySummary summary;
  if (!fs::is_directory(dir)) throw Error("DomainError", "fixture directory '" + dir.string() + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) summary.warnings.push_back("no fixture files in '" + dir.string() + "'");
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    std::ifstream in(path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw MalformedFixture(name, "<document>", "invalid JSON");
    if (doc.is_object()) doc = json::array({doc});
    if (!doc.is_array()) throw MalformedFixture(name, "<document>", "object or array of fixtures expected");
    for (const auto& f : doc) summary.results.push_back(run_fixture(f, name, summary.warnings));
  }
  return summary;
}

}  // namespace tiltwall
