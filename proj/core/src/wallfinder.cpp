#include "tiltwall/wallfinder.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

using Pair = std::pair<TruncatedCharacter, TruncatedCharacter>;

const Verdict kPass{};

Verdict fail(std::string reason) { return {false, std::move(reason)}; }

// Reference line of a scan: a rational beta0 or beta_-(target).
struct ScanContext {
  TruncatedCharacter target;
  QuadraticValue beta;
  QuadraticValue heart_top;  // ch1^beta(target)
  Rational delta_target;
  bool region_left = false;
  FilterSet filters;
  ScanBounds bounds;
};

QuadraticValue heart_value(const ScanContext& ctx, const TruncatedCharacter& v) {
  return QuadraticValue(v.ch1) - ctx.beta * v.ch0;
}

bool rank_pass(const TruncatedCharacter& v) { return v.ch0.sign() > 0; }

Verdict check_heart(const ScanContext& ctx, const Pair& pq) {
  const QuadraticValue h = heart_value(ctx, pq.first);
  if (qv_sign(h) > 0 && h < ctx.heart_top) return kPass;
  return fail("ch1^beta(p) = " + h.str() + " outside (0, " + ctx.heart_top.str() + ")");
}

Verdict check_parity(const Pair& pq) {
  for (const auto* v : {&pq.first, &pq.second}) {
    const auto bad = validate(*v);
    if (!bad.empty()) return fail(format(*v) + ": " + bad.front());
  }
  return kPass;
}

Verdict check_discriminant(const ScanContext& ctx, const Pair& pq) {
  std::vector<const TruncatedCharacter*> pieces;
  const Rational rp = pq.first.ch0.abs();
  const Rational rq = pq.second.ch0.abs();
  if (ctx.filters.discriminant_scope == DiscriminantScope::Both || ctx.region_left || rp == rq) {
    pieces = {&pq.first, &pq.second};
  } else {
    pieces = {rp > rq ? &pq.first : &pq.second};
  }
  for (const auto* v : pieces) {
    const Rational d = delta(*v);
    if (d.sign() < 0 || d > ctx.delta_target) {
      return fail("delta(" + format(*v) + ") = " + d.str() + " outside [0, " + ctx.delta_target.str() + "]");
    }
  }
  return kPass;
}

Verdict check_additivity(const ScanContext& ctx, const Pair& pq) {
  const Rational sum = delta(pq.first) + delta(pq.second);
  if (sum <= ctx.delta_target) return kPass;
  return fail("delta(p) + delta(q) = " + sum.str() + " > " + ctx.delta_target.str());
}

Verdict check_rank_slope(const ScanContext& ctx, const Pair& pq, const WallLocus& wall) {
  const TruncatedCharacter& t = ctx.target;
  if (!rank_pass(t)) return kPass;
  const Rational mu_t = t.ch1 / t.ch0;
  const bool circle = std::holds_alternative<wall::Circle>(wall);
  for (const auto* a : {&pq.first, &pq.second}) {
    if (!rank_pass(*a)) continue;
    const Rational mu_a = a->ch1 / a->ch0;
    if (mu_a > mu_t) continue;
    if (ctx.region_left && circle) {
      if (!(mu_a < mu_t)) continue;
      if (!(ctx.beta < beta_pm(*a).first)) continue;
    }
    return kPass;
  }
  return fail(ctx.region_left && circle ? "no positive-rank piece with beta_-(T) < beta_-(A), mu(A) < mu(T)"
                                        : "no positive-rank piece with mu(A) <= mu(T)");
}

Verdict check_li(const TruncatedCharacter& v) {
  if (v.ch0.is_zero()) return kPass;
  const LiVerdict l = li_admissible(v);
  if (l.admissible()) return kPass;
  return fail(format(v) + " " + l.str());
}

std::optional<QuadraticValue> alpha_sq_on_line(const WallLocus& wall, const QuadraticValue& beta) {
  std::optional<Rational> center, radius_sq;
  if (const auto* c = std::get_if<wall::Circle>(&wall)) {
    center = c->center;
    radius_sq = c->radius_sq;
  } else if (const auto* e = std::get_if<wall::Empty>(&wall); e && e->center) {
    center = e->center;
    radius_sq = e->radius_sq;
  } else {
    return std::nullopt;
  }
  const QuadraticValue d = beta - *center;
  return QuadraticValue(*radius_sq) - d * d;
}

Verdict check_region(const ScanContext& ctx, const WallLocus& wall) {
  const auto* c = std::get_if<wall::Circle>(&wall);
  if (!c) return fail("wall is not a semicircle: " + describe(wall));
  if (ctx.region_left && !(c->center < ctx.target.ch1 / ctx.target.ch0)) {
    return fail("wall center " + c->center.str() + " not left of the vertical wall");
  }
  return kPass;
}

struct Evaluated {
  CandidatePair pair;
  bool tangent = false;
};

Evaluated evaluate(const ScanContext& ctx, const Pair& pq) {
  Evaluated out;
  CandidatePair& cp = out.pair;
  cp.p = pq.first;
  cp.q = pq.second;
  cp.wall = numerical_wall(ctx.target, cp.p);
  cp.alpha_sq_at_ref = alpha_sq_on_line(cp.wall, ctx.beta);

  const FilterSet& f = ctx.filters;
  auto step = [&](bool enabled, const char* name, auto&& check) {
    if (!enabled) return true;
    Verdict v = check();
    const bool ok = v.pass;
    cp.verdicts.emplace(name, std::move(v));
    return ok;
  };
  step(f.heart, "heart", [&] { return check_heart(ctx, pq); }) &&
      step(f.parity, "parity", [&] { return check_parity(pq); }) &&
      step(f.discriminant, "discriminant", [&] { return check_discriminant(ctx, pq); }) &&
      step(f.discriminant_additivity, "discriminant_additivity", [&] { return check_additivity(ctx, pq); }) &&
      step(f.rank_slope, "rank_slope", [&] { return check_rank_slope(ctx, pq, cp.wall); }) &&
      step(f.li_on_p, "li_on_p", [&] { return check_li(cp.p); }) &&
      step(f.li_on_q, "li_on_q", [&] { return check_li(cp.q); }) &&
      step(f.alpha_positive, "alpha_positive",
           [&] {
             if (!cp.alpha_sq_at_ref) return fail("wall does not cross the reference line: " + describe(cp.wall));
             const int s = qv_sign(*cp.alpha_sq_at_ref);
             if (s > 0) return kPass;
             if (s == 0) {
               out.tangent = true;
               return fail("tangent: alpha^2 = 0 on the reference line");
             }
             return fail("alpha^2 = " + cp.alpha_sq_at_ref->str() + " <= 0 on the reference line");
           }) &&
      step(f.region, "region", [&] { return check_region(ctx, cp.wall); });
  return out;
}

// Inclusive range of 6*ch2(p) from 0 <= 9 c^2 - 3 r n <= delta(target).
std::optional<std::pair<mpz_class, mpz_class>> sixths_range(const ScanContext& ctx, long r, const mpz_class& c) {
  if (ctx.bounds.ch2_sixths) {
    return std::make_pair(mpz_class(ctx.bounds.ch2_sixths->first), mpz_class(ctx.bounds.ch2_sixths->second));
  }
  if (r == 0 || ctx.delta_target.sign() < 0) return std::nullopt;
  const Rational top(mpz_class(9 * c * c));
  const Rational r3(3 * r);
  Rational a = (top - ctx.delta_target) / r3;
  Rational b = top / r3;
  if (a > b) std::swap(a, b);
  return std::make_pair(a.ceil(), b.floor());
}

std::vector<Pair> enumerate(const ScanContext& ctx, std::vector<std::string>& warnings) {
  const long rank_max = ctx.bounds.rank_max;
  const Rational t0 = ctx.target.ch0;
  std::set<Pair> keys;
  if (t0.is_zero() && !ctx.bounds.ch2_sixths) {
    warnings.push_back("rank-zero pieces of a rank-zero target need an explicit ch2 range; skipped");
  }
  for (long r = -rank_max; r <= rank_max; ++r) {
    if ((t0 - Rational(r)).abs() > Rational(rank_max)) continue;
    const QuadraticValue lo = ctx.beta * Rational(r);
    const mpz_class c_lo = lo.ceil();
    const mpz_class c_hi = (lo + ctx.heart_top).floor();
    for (mpz_class c = c_lo; c <= c_hi; ++c) {
      const auto range = sixths_range(ctx, r, c);
      if (!range) continue;
      for (mpz_class n = range->first; n <= range->second; ++n) {
        if (ctx.filters.parity && mpz_class(n - c) % 2 != 0) continue;
        const TruncatedCharacter p{Rational(r), Rational(c), Rational(mpq_class(n, mpz_class(6)))};
        keys.insert(canonical_pair(p, ctx.target - p));
      }
    }
  }
  return {keys.begin(), keys.end()};
}

ScanReport run_scan(const ScanContext& ctx, std::string query) {
  ScanReport report;
  report.target = ctx.target;
  report.query = std::move(query);
  const std::vector<Pair> keys = enumerate(ctx, report.warnings);

  std::vector<Evaluated> results(keys.size());
  unsigned workers = ctx.bounds.workers ? ctx.bounds.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, keys.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < keys.size();) results[i] = evaluate(ctx, keys[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& name : filter_names()) report.counts[name] = 0;
  for (auto& e : results) {
    const std::string failed = e.pair.first_failure();
    if (failed.empty()) {
      report.survivors.push_back(std::move(e.pair));
      continue;
    }
    ++report.counts[failed];
    if (e.tangent) report.tangent.push_back(e.pair);
    report.rejected.push_back(std::move(e.pair));
  }
  return report;
}

std::string describe_bounds(const ScanBounds& b, const FilterSet& f) {
  std::string s = " rank_max=" + std::to_string(b.rank_max);
  if (b.ch2_sixths) {
    s += " ch2_sixths=[" + std::to_string(b.ch2_sixths->first) + "," + std::to_string(b.ch2_sixths->second) + "]";
  }
  if (!f.li_on_p || !f.li_on_q) s += " li=off";
  return s;
}

void check_target(const TruncatedCharacter& target, const ScanBounds& bounds) {
  const auto bad = validate(target);
  if (!bad.empty()) throw Error("InvalidTarget", format(target) + ": " + bad.front());
  if (bounds.rank_max < 1) throw Error("InvalidTarget", "rank_max must be at least 1");
  if (bounds.ch2_sixths && bounds.ch2_sixths->first > bounds.ch2_sixths->second) {
    throw Error("InvalidTarget", "empty ch2 range");
  }
}

}  // namespace

const std::vector<std::string>& filter_names() {
  static const std::vector<std::string> names{"heart",   "parity",  "discriminant",   "discriminant_additivity",
                                              "rank_slope", "li_on_p", "li_on_q", "alpha_positive",
                                              "region"};
  return names;
}

std::string CandidatePair::first_failure() const {
  for (const auto& name : filter_names()) {
    const auto it = verdicts.find(name);
    if (it != verdicts.end() && !it->second.pass) return name;
  }
  return {};
}

std::pair<TruncatedCharacter, TruncatedCharacter> canonical_pair(const TruncatedCharacter& a,
                                                                 const TruncatedCharacter& b) {
  if (b < a) return {b, a};
  return {a, b};
}

ScanReport scan_vertical(const TruncatedCharacter& target, const Rational& beta0, const ScanBounds& bounds,
                         const FilterSet& filters) {
  check_target(target, bounds);
  ScanContext ctx;
  ctx.target = target;
  ctx.beta = QuadraticValue(beta0);
  ctx.heart_top = QuadraticValue(twist(target, beta0).ch1);
  ctx.delta_target = delta(target);
  ctx.filters = filters;
  ctx.bounds = bounds;
  if (qv_sign(ctx.heart_top) <= 0) {
    throw Error("InvalidTarget", format(target) + " has ch1^beta <= 0 at beta = " + beta0.str());
  }
  return run_scan(ctx, "vertical beta=" + beta0.str() + describe_bounds(bounds, filters));
}

ScanReport scan_region_left(const TruncatedCharacter& target, const ScanBounds& bounds, const FilterSet& filters) {
  check_target(target, bounds);
  if (target.ch0.sign() <= 0) throw Error("InvalidTarget", format(target) + " must have positive rank");
  ScanContext ctx;
  ctx.target = target;
  ctx.beta = beta_pm(target).first;
  ctx.heart_top = QuadraticValue(target.ch1) - ctx.beta * target.ch0;
  ctx.delta_target = delta(target);
  ctx.region_left = true;
  ctx.filters = filters;
  ctx.bounds = bounds;
  return run_scan(ctx, "left beta=" + ctx.beta.str() + describe_bounds(bounds, filters));
}

BoundReport derived_bound_report(const TruncatedCharacter& target) {
  const Rational k = delta(target) / Rational(3);
  return {k, "3b^2-" + k.str() + " <= ac <= 3b^2"};
}

bool oplus_exclusion(long r) {
  if (r <= 4) throw Error("DomainError", "r = " + std::to_string(r) + " must exceed 4");
  const Rational lhs(25, 36);
  const Rational rhs = Rational(23, 3) / Rational(4 * r * (r - 4));
  return lhs > rhs;
}

}  // namespace tiltwall
