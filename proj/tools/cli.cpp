#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tiltwall/error.hpp"
#include "tiltwall/fixtures.hpp"
#include "tiltwall/kuznetsov.hpp"
#include "tiltwall/serialize.hpp"
#include "tiltwall/tilt.hpp"
#include "tiltwall/wallfinder.hpp"

namespace tiltwall::cli {

namespace {

using nlohmann::json;

struct Style {
  bool color = false;
  std::string green(const std::string& s) const { return color ? "\033[32m" + s + "\033[0m" : s; }
  std::string red(const std::string& s) const { return color ? "\033[31m" + s + "\033[0m" : s; }
};

TruncatedCharacter truncated_arg(const std::string& s) { return parse_character_lenient(s).truncate(); }

void print_pairs(std::ostream& out, const std::vector<CandidatePair>& pairs, bool with_reason) {
  for (const auto& c : pairs) {
    out << "  " << format(c.p) << "  |  " << format(c.q) << "  " << describe(c.wall);
    if (with_reason) {
      const std::string f = c.first_failure();
      out << "  [" << f << ": " << c.verdicts.at(f).reason << "]";
    } else if (c.alpha_sq_at_ref) {
      out << "  alpha^2 = " << c.alpha_sq_at_ref->str();
    }
    out << "\n";
  }
}

void print_report(std::ostream& out, const ScanReport& r, bool verbose) {
  out << "target " << format(r.target) << " (" << r.query << ")\n";
  out << "survivors: " << r.survivors.size() << "\n";
  print_pairs(out, r.survivors, false);
  out << "rejected: " << r.rejected.size() << "\n";
  for (const auto& [name, n] : r.counts) {
    if (n) out << "  " << name << ": " << n << "\n";
  }
  if (!r.tangent.empty()) {
    out << "tangent (alpha^2 = 0 on the reference line): " << r.tangent.size() << "\n";
    print_pairs(out, r.tangent, false);
  }
  if (verbose) {
    out << "rejected candidates:\n";
    print_pairs(out, r.rejected, true);
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
}

void write_svg(const std::string& path, const WallLocus& w) {
  std::ofstream svg(path);
  if (!svg) throw Error("DomainError", "cannot write '" + path + "'");
  const double scale = 100.0;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-400 -400 800 420\">\n"
      << "<line x1=\"-400\" y1=\"0\" x2=\"400\" y2=\"0\" stroke=\"#888\"/>\n";
  if (const auto* c = std::get_if<wall::Circle>(&w)) {
    const double cx = c->center.value().get_d() * scale;
    const double r = std::sqrt(c->radius_sq.value().get_d()) * scale;
    svg << "<path d=\"M " << cx - r << " 0 A " << r << " " << r << " 0 0 1 " << cx + r
        << " 0\" fill=\"none\" stroke=\"#c33\"/>\n";
  } else if (const auto* l = std::get_if<wall::VerticalLine>(&w)) {
    const double x = l->beta.value().get_d() * scale;
    svg << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"-400\" stroke=\"#c33\"/>\n";
  }
  svg << "</svg>\n";
}

struct Options {
  bool json = false;
  std::string v, w, target, beta, alpha, fixtures = TILTWALL_DEFAULT_FIXTURES, svg, ch2_range;
  long rank_max = 6;
  long r = 5;
  unsigned workers = 0;
  bool no_li = false, shift = false, verbose = false;
};

std::pair<long, long> parse_range(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected 'lo,hi', got '" + s + "'");
  const Rational lo = Rational::parse(s.substr(0, comma));
  const Rational hi = Rational::parse(s.substr(comma + 1));
  if (!lo.is_integer() || !hi.is_integer()) throw ParseError("range bounds must be integers");
  return {lo.to_long(), hi.to_long()};
}

class Commands {
 public:
  Commands(std::ostream& out, std::ostream& err, Style style) : out_(out), err_(err), style_(style) {}

  int chi(const Options& o) {
    const ChernCharacter v = parse_character(o.v);
    const Rational x = o.w.empty() ? chi1(v) : chi2(v, parse_character(o.w));
    if (o.json) return emit({{"chi", x.str()}});
    out_ << x << "\n";
    return kOk;
  }

  int delta_cmd(const Options& o) {
    const TruncatedCharacter v = truncated_arg(o.v);
    if (o.json) return emit({{"delta", delta(v).str()}, {"delta_bar", delta_bar(v).str()}});
    out_ << delta(v) << "\n";
    return kOk;
  }

  int wall_cmd(const Options& o) {
    const WallLocus w = numerical_wall(truncated_arg(o.v), truncated_arg(o.w));
    if (!o.svg.empty()) write_svg(o.svg, w);
    if (o.json) return emit(io::encode(w));
    out_ << describe(w) << "\n";
    return kOk;
  }

  int scan(const Options& o, bool vertical) {
    ScanBounds bounds;
    bounds.rank_max = o.rank_max;
    bounds.workers = o.workers;
    if (!o.ch2_range.empty()) bounds.ch2_sixths = parse_range(o.ch2_range);
    const FilterSet filters = o.no_li ? FilterSet::without_li() : FilterSet{};
    const TruncatedCharacter target = truncated_arg(o.target);
    const ScanReport report = vertical ? scan_vertical(target, Rational::parse(o.beta), bounds, filters)
                                       : scan_region_left(target, bounds, filters);
    if (o.json) return emit(io::encode(report));
    print_report(out_, report, o.verbose);
    return kOk;
  }

  int ku(const Options& o, const std::string& op) {
    if (op == "decompose") {
      const KuClass k = from_chern(parse_character(o.v));
      if (o.json) return emit(io::encode(k));
      out_ << ku_label(k) << "\n";
    } else if (op == "compose") {
      const ChernCharacter v = to_chern(parse_ku_class(o.v));
      if (o.json) return emit(io::encode(v));
      out_ << format(v) << "\n";
    } else if (op == "serre") {
      const KuClass k = serre_apply(parse_ku_class(o.v), o.shift);
      if (o.json) return emit(io::encode(k));
      out_ << ku_label(k) << "\n";
    } else if (op == "orbit") {
      const auto orbit = serre_orbit(parse_ku_class(o.v));
      if (o.json) {
        json arr = json::array();
        for (const auto& k : orbit) arr.push_back(io::encode(k));
        return emit({{"orbit", arr}, {"labels", {ku_label(orbit[0]), ku_label(orbit[1]), ku_label(orbit[2])}}});
      }
      out_ << ku_label(orbit[0]) << " -S-> " << ku_label(orbit[1]) << " -S[1]-> " << ku_label(orbit[2])
           << " -S-> " << ku_label(serre_apply(orbit[2], false)) << "\n";
    } else if (op == "dim") {
      const ChernCharacter v = o.v.find(',') == o.v.rfind(',') ? to_chern(parse_ku_class(o.v)) : parse_character(o.v);
      const auto d = expected_dim(v);
      if (o.json) return emit({{"dim", d}});
      out_ << d << "\n";
    } else if (op == "membership") {
      const bool m = ku_numeric_membership(parse_character(o.v));
      if (o.json) return emit({{"member", m}});
      out_ << (m ? "true" : "false") << "\n";
    } else if (op == "pairing") {
      const IntMatrix2 p = pairing_matrix();
      const IntMatrix2 s = derived_serre_matrix();
      if (o.json) return emit({{"pairing", p}, {"serre", s}});
      out_ << "pairing " << json(p).dump() << "\nserre " << json(s).dump() << "\n";
    }
    return kOk;
  }

  int bound(const Options& o) {
    const BoundReport b = derived_bound_report(truncated_arg(o.target));
    if (o.json) return emit({{"k", b.k.str()}, {"text", b.text}});
    out_ << b.text << "\n";
    return kOk;
  }

  int locus(const Options& o) {
    const TruncatedCharacter v = truncated_arg(o.v);
    const ZeroSlopeLocus z = zero_slope_locus(v);
    const auto [minus, plus] = beta_pm(v);
    if (o.json) {
      return emit({{"mu", z.mu.str()}, {"rhs", z.rhs.str()}, {"beta_minus", io::encode(minus)},
                   {"beta_plus", io::encode(plus)}});
    }
    const std::string shift = z.mu.sign() < 0 ? " + " + (-z.mu).str() : " - " + z.mu.str();
    out_ << "(beta" << (z.mu.is_zero() ? "" : shift) << ")^2 - alpha^2 = " << z.rhs << "\n"
         << "beta_- = " << minus << "\nbeta_+ = " << plus << "\n";
    return kOk;
  }

  int li(const Options& o) {
    const LiVerdict l = li_admissible(truncated_arg(o.v));
    if (o.json) return emit(io::encode(l));
    out_ << l.str() << "\n";
    return kOk;
  }

  int region(const Options& o) {
    const bool in = region_V_contains(Rational::parse(o.alpha), Rational::parse(o.beta));
    if (o.json) return emit({{"contains", in}});
    out_ << (in ? "true" : "false") << "\n";
    return kOk;
  }

  int oplus(const Options& o) {
    const bool excluded = oplus_exclusion(o.r);
    if (o.json) return emit({{"excluded", excluded}});
    out_ << (excluded ? "excluded" : "not excluded") << "\n";
    return kOk;
  }

  int verify(const Options& o) {
    const VerifySummary s = verify_directory(o.fixtures);
    if (o.json) {
      json results = json::array();
      for (const auto& r : s.results) {
        results.push_back({{"file", r.file}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      emit({{"results", results}, {"warnings", s.warnings}, {"failures", s.failures()}});
    } else {
      for (const auto& r : s.results) {
        out_ << (r.passed ? style_.green("PASS") : style_.red("FAIL")) << "  " << r.file << "  " << r.name;
        if (!r.passed) out_ << "\n      " << r.detail;
        out_ << "\n";
      }
      for (const auto& w : s.warnings) err_ << "warning: " << w << "\n";
      out_ << s.results.size() - s.failures() << "/" << s.results.size() << " fixtures passed\n";
    }
    return s.ok() ? kOk : kVerifyFailed;
  }

 private:
  int emit(const json& j) {
    out_ << j.dump(2) << "\n";
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  Style style_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tilt-stability wall computations on a cubic threefold", "tiltwall"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  const char* kChar = "Character 'r,c1,c2,c3'";
  const char* kTrunc = "Character 'r,c1,c2' (a trailing ch3 is ignored)";

  auto* chi = app.add_subcommand("chi", "Euler characteristic chi(v), or the pairing chi(v, w)");
  chi->add_option("--v", o.v, kChar)->required();
  chi->add_option("--w", o.w, kChar);

  auto* del = app.add_subcommand("delta", "H-discriminant");
  del->add_option("--v", o.v, kTrunc)->required();

  auto* wal = app.add_subcommand("wall", "Numerical wall of two classes");
  wal->add_option("--v", o.v, kTrunc)->required();
  wal->add_option("--w", o.w, kTrunc)->required();
  wal->add_option("--svg", o.svg, "Also draw the wall to an SVG file");

  auto* scan = app.add_subcommand("scan", "Enumerate destabilizing candidates");
  scan->require_subcommand(1);
  auto* vert = scan->add_subcommand("vertical", "Scan along a vertical line beta = beta0");
  auto* left = scan->add_subcommand("left", "Scan left of the vertical wall on beta = beta_-(target)");
  for (auto* s : {vert, left}) {
    s->add_option("--target", o.target, kTrunc)->required();
    s->add_option("--rank-max", o.rank_max, "Bound on |ch0| of both pieces")->required();
    s->add_flag("--no-li", o.no_li, "Disable the Li admissibility filters");
    s->add_option("--ch2-range", o.ch2_range, "Explicit range 'lo,hi' for 6*ch2 of the enumerated piece");
    s->add_option("--workers", o.workers, "Worker threads (0 = hardware)");
    s->add_flag("--verbose", o.verbose, "List rejected candidates with reasons");
  }
  vert->add_option("--beta", o.beta, "Rational beta0")->required();

  auto* ku = app.add_subcommand("ku", "Kuznetsov component lattice");
  ku->require_subcommand(1);
  std::string ku_op;
  for (const auto& [name, help, arg] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"decompose", "Coordinates (a,b) of a character", kChar},
           {"compose", "Character of a class", "Class 'a,b'"},
           {"serre", "Numerical Serre action", "Class 'a,b'"},
           {"orbit", "Serre orbit as diagram labels", "Class 'a,b'"},
           {"dim", "Expected moduli dimension 1 - chi(v,v)", "Character or class 'a,b'"},
           {"membership", "Numerical membership test", kChar},
       }) {
    auto* sub = ku->add_subcommand(name, help);
    sub->add_option("--v", o.v, arg)->required();
    if (name == "serre") sub->add_flag("--shift", o.shift, "Apply S[1] instead of S");
    sub->callback([&ku_op, n = name] { ku_op = n; });
  }
  ku->add_subcommand("pairing", "Pairing and derived Serre matrices")->callback([&ku_op] { ku_op = "pairing"; });

  auto* bnd = app.add_subcommand("bound", "Discriminant inequality family 3b^2 - K <= ac <= 3b^2");
  bnd->add_option("--target", o.target, kTrunc)->required();

  auto* loc = app.add_subcommand("locus", "Zero tilt-slope hyperbola and beta_-/+");
  loc->add_option("--v", o.v, kTrunc)->required();

  auto* li = app.add_subcommand("li", "Li admissibility verdict");
  li->add_option("--v", o.v, kTrunc)->required();

  auto* reg = app.add_subcommand("region", "Membership in the region V");
  reg->add_option("--alpha", o.alpha, "Rational alpha > 0")->required();
  reg->add_option("--beta", o.beta, "Rational beta")->required();

  auto* opl = app.add_subcommand("oplus", "Exclusion inequality for O^r[1] quotients on W(5/6, 5/6)");
  opl->add_option("--r", o.r, "r >= 5")->required();

  auto* ver = app.add_subcommand("verify", "Run the golden fixture corpus");
  ver->add_option("--fixtures", o.fixtures, "Fixture directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  const char* no_color = std::getenv("NO_COLOR");
  Style style{(no_color == nullptr || *no_color == '\0') && &out == &std::cout && isatty(STDOUT_FILENO)};
  Commands cmd(out, err, style);
  try {
    if (*chi) return cmd.chi(o);
    if (*del) return cmd.delta_cmd(o);
    if (*wal) return cmd.wall_cmd(o);
    if (*vert) return cmd.scan(o, true);
    if (*left) return cmd.scan(o, false);
    if (*ku) return cmd.ku(o, ku_op);
    if (*bnd) return cmd.bound(o);
    if (*loc) return cmd.locus(o);
    if (*li) return cmd.li(o);
    if (*reg) return cmd.region(o);
    if (*opl) return cmd.oplus(o);
    if (*ver) return cmd.verify(o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const MalformedFixture& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tiltwall::cli
