#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridtrail/grid.hpp"
#include "gridtrail/quad_ext.hpp"

namespace gridtrail::bounds {

/// Lower bound (n^k - 1)/(n - 1) for P(n,k), n >= 3, k >= 3. Also evaluates
/// the un-simplified ceiling expression and throws std::logic_error if the two
/// disagree.
Integer lower_trivial(long n, long k);

/// The un-simplified form
///   ceil((n^k - (k-2)n^2 + (k-2)n - n + n((k-2)n - k + 2)) / (n-1)) + 1.
Integer lower_trivial_long_form(long n, long k);

/// Counting lower bound for G(n1,...,nk), n1 >= 3:
///   ceil(3 (prod n_i - sum_{i<=k-2} n_i + k - 3) / (2 n_k + n_{k-1} - 3)) + k - 2.
Integer lower_general(const Grid& g);

/// Best known upper bound for P(n,3):
///   floor(3n^2/2) - floor((n-1)/4) + floor((n+1)/4) - floor((n+2)/4) + floor(n/4) + n - 2.
Integer upper_3d(long n);

/// (upper_3d(n) + 1) * n^(k-3) - 1 for k >= 3.
Integer upper_k(long n, long k);

/// k/(k-1) * n^(k-1) + c * n^(k-2).
Rational kranakis_rhs(long n, long k, const Rational& c);

/// r + s*sqrt(radicand), with r, s rational and radicand a positive integer.
/// Perfect-square radicands are folded into r.
struct SurdValue {
  Rational rational;
  Rational coeff;
  long radicand = 1;

  /// Exact sign of (this - x).
  int compare(const Rational& x) const;
  std::string to_string() const;
  std::string to_decimal(int digits) const;
};

/// k/(k-1) * n^(k-1) + n^(k-3/2), kept as r + n^(k-2) * sqrt(n).
SurdValue bereg_rhs(long n, long k);

enum class Provenance { eq9, keszegh_k2, trivial_small };
std::string to_string(Provenance p);

struct ExactValue {
  Integer value;
  Provenance provenance;
};

/// Exactly known minimum link-lengths: (3^k-1)/2 for n = 3; 2n-2 for k = 2,
/// n >= 3; 0 for a single point; 1 for k = 1, n >= 2. Empty otherwise.
std::optional<ExactValue> exact_known(long n, long k);

/// Upper bounds quoted from the literature for specific hypercubes
/// (h(4,3) <= 23, h(5,3) <= 36).
struct LiteratureBound {
  Integer value;
  std::string source;
};
std::optional<LiteratureBound> literature_upper(long n, long k);

struct Sandwich {
  bool kranakis_below = false;  // kranakis_rhs(3,k,1) < h(3,k)
  bool bereg_above = false;     // h(3,k) <= bereg_rhs(3,k)
  bool both() const { return kranakis_below && bereg_above; }
};
Sandwich sandwich_check(long k);

/// (n^2 - n - 2)/(3n + 2), n >= 2.
Rational efficiency_loss_bound(long n);

struct StrictInequality {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs < rhs; }
};
/// (3^k - 1)/2 < 3^(k-1) + 3/2 * 3^(k-2), with negative powers taken as
/// rationals (k = 1 gives 1 < 3/2).
StrictInequality eq10(long k);
bool eq10_check(long k);

/// Smallest k in [2, k_max] with (3^k-1)/2 > kranakis_rhs(3,k,c).
std::optional<long> first_kranakis_violation(const Rational& c, long k_max);

enum class Basis { exact, upper_bound, lower_bound };
std::string to_string(Basis b);

/// A value standing in for h(n,k), with where it came from.
struct LinkEstimate {
  Integer value;
  Basis basis;
  std::string source;
};

struct RatioReport {
  long n = 0;
  long k = 0;
  Integer h;
  Basis basis = Basis::exact;
  std::string source;
  Rational points_per_link;  // n^k / h
  Rational ratio;            // n^k / ((n-1) h)
  Rational loss_bound;       // efficiency_loss_bound(n)
  /// Average new points per link below n - 1, i.e. h > n^k/(n-1).
  bool below_ideal_rate() const { return ratio < 1; }
};

RatioReport ratio_report(long n, long k, const LinkEstimate& estimate);

struct RatioChain {
  std::optional<RatioReport> left;   // n
  std::optional<RatioReport> right;  // n + 1
  std::optional<bool> verdict;       // left.ratio > right.ratio
  std::optional<bool> k2_identity;   // only for k = 2
  std::string unavailable;           // why verdict is empty
};

/// Compares n^k/((n-1)h(n,k)) against (n+1)^k/(n h(n+1,k)). A missing
/// estimate leaves the verdict empty with a reason; nothing is substituted.
RatioChain ratio_chain(long n, long k, const std::optional<LinkEstimate>& h_n,
                       const std::optional<LinkEstimate>& h_next);

/// n^2/((n-1)(2n-2)) == 1/(2(n-1)^2) + 1/(n-1) + 1/2.
bool k2_identity(long n);

/// Default estimate for h(n,k) under a basis preference: exact values when
/// known, otherwise the best closed-form or quoted bound of the requested
/// kind. Empty if nothing applies.
std::optional<LinkEstimate> default_estimate(long n, long k, Basis preference);

struct Labeled {
  std::optional<Integer> value;
  std::string note;  // "n/a: ..." when the formula does not apply
};

struct BoundsReport {
  Grid grid;
  Labeled lower_trivial;
  Labeled lower_general;
  Labeled upper_3d;
  Labeled upper_k;
  std::optional<LiteratureBound> literature;
  std::vector<std::pair<Rational, Rational>> kranakis;  // (c, value)
  std::optional<SurdValue> bereg;
  std::optional<ExactValue> exact;
  std::optional<Sandwich> sandwich;
  std::optional<StrictInequality> eq10;
  std::optional<Rational> loss_bound;
  std::optional<Integer> line_cover_lb;

  std::optional<Integer> max_lower() const;
  std::optional<Integer> min_upper() const;
  /// Violations of lower <= exact <= upper; empty when consistent.
  std::vector<std::string> consistency_errors() const;
};

BoundsReport make_report(const Grid& g, const std::vector<Rational>& constants);

/// Smallest known upper bound on the link-length for this grid, if any.
std::optional<Integer> best_known_upper(const Grid& g);

}  // namespace gridtrail::bounds
