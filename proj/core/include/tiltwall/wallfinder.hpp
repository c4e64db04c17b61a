#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltwall/exactnum.hpp"
#include "tiltwall/lattice.hpp"
#include "tiltwall/tilt.hpp"

namespace tiltwall {

struct ScanBounds {
  long rank_max = 1;
  /// Inclusive range for 6*ch2(p); default derives it from 0 <= delta(p) <= delta(target).
  std::optional<std::pair<long, long>> ch2_sixths;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Which pieces of a pair the bound 0 <= delta <= delta(target) constrains.
enum class DiscriminantScope {
  /// The piece of larger |ch0| (both on a tie); the role-swap normal form.
  LargerRank,
  Both,
};

struct FilterSet {
  bool heart = true;
  bool parity = true;
  bool discriminant = true;
  bool discriminant_additivity = true;
  bool rank_slope = true;
  bool li_on_p = true;
  bool li_on_q = true;
  bool alpha_positive = true;
  bool region = true;
  DiscriminantScope discriminant_scope = DiscriminantScope::LargerRank;

  static FilterSet without_li() {
    FilterSet f;
    f.li_on_p = f.li_on_q = false;
    return f;
  }
};

/// Filter names in pipeline order.
const std::vector<std::string>& filter_names();

struct Verdict {
  bool pass = true;
  std::string reason;  // empty on pass
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// An unordered decomposition target = p + q, stored with p < q.
struct CandidatePair {
  TruncatedCharacter p, q;
  WallLocus wall;
  /// alpha^2 where the wall meets the reference line (beta0, or beta_-(target)).
  std::optional<QuadraticValue> alpha_sq_at_ref;
  /// Filter name -> verdict, for every filter evaluated (stops at the first failure).
  std::map<std::string, Verdict> verdicts;

  /// First failing filter name, or empty for survivors.
  std::string first_failure() const;
  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct ScanReport {
  TruncatedCharacter target;
  std::string query;
  std::vector<CandidatePair> survivors;
  std::vector<CandidatePair> rejected;
  /// Rejections per filter (filters that rejected nothing appear with 0).
  std::map<std::string, long> counts;
  std::vector<std::string> warnings;
  /// Candidates rejected because alpha^2 = 0 at the reference line.
  std::vector<CandidatePair> tangent;
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Canonical unordered representative: (min, max) under (ch0, ch1, ch2) order.
std::pair<TruncatedCharacter, TruncatedCharacter> canonical_pair(const TruncatedCharacter& a,
                                                                 const TruncatedCharacter& b);

/// Candidates destabilizing target along beta = beta0. Throws Error("InvalidTarget").
ScanReport scan_vertical(const TruncatedCharacter& target, const Rational& beta0, const ScanBounds& bounds,
                         const FilterSet& filters = {});

/// Candidates with semicircular walls left of the vertical wall, tested on beta = beta_-(target).
ScanReport scan_region_left(const TruncatedCharacter& target, const ScanBounds& bounds,
                            const FilterSet& filters = {});

/// The inequality family 3b^2 - K <= ac <= 3b^2 with K = delta(target)/3.
struct BoundReport {
  Rational k;
  std::string text;
};
BoundReport derived_bound_report(const TruncatedCharacter& target);

/// (5/6)^2 > (23/3) / (4r(r-4)); DomainError for r <= 4.
bool oplus_exclusion(long r);

}  // namespace tiltwall
