#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridtrail/grid.hpp"
#include "gridtrail/trail.hpp"

namespace gridtrail {

/// True iff p lies on the closed segment [a, b]. Decided exactly: every 2x2
/// minor of the rows (p - a), (b - a) vanishes and 0 <= (p-a).(b-a) <= |b-a|^2.
/// Throws DomainError when a == b and StructuralError on a dimension mismatch.
bool point_on_segment(const LatticePoint& p, const Vertex& a, const Vertex& b);

enum class Severity { warning, error };

struct Diagnostic {
  Severity severity;
  std::string code;  // zero_length_link, repeated_link, collinear_links, ...
  std::string message;
};

/// Structural checks on a trail: at least one link, consistent dimension,
/// no zero-length link, no segment used twice, cycle flag matching v0 == vm.
/// Consecutive collinear links are reported as warnings.
std::vector<Diagnostic> validate_trail(const Trail& t);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct CoverageReport {
  Grid grid;
  Trail trail;
  std::size_t link_count = 0;
  std::vector<std::vector<LatticePoint>> per_link_covered;
  std::vector<LatticePoint> covered;    // lexicographic
  std::vector<LatticePoint> uncovered;  // lexicographic
  bool is_covering = false;
  std::size_t revisit_count = 0;  // points on two or more links
  std::vector<Diagnostic> diagnostics;
  std::optional<Integer> best_known_upper;
  /// Covering with fewer links than the best known upper bound. Either a
  /// new construction or a bug; callers should make noise about it.
  bool beats_best_known = false;
};

/// For each link of t, the indices into `points` that the link covers.
std::vector<std::vector<std::size_t>> cover_points(const Trail& t, std::span<const LatticePoint> points);

/// Exhaustive coverage check of every grid point against every link.
/// Throws StructuralError on dimension mismatch or when validate_trail
/// reports errors.
CoverageReport verify_trail(const Trail& t, const Grid& g);

// Reference constructions.

/// The six-link closed trail on the unit cube {0,1}^3:
///   A=(1-s,1-s,0) -> B=(s,s,0) -> T -> C=(s,1-s,0) -> D=(1-s,s,0) -> T -> A
/// with s = sqrt2 and apex T = (1/2, 1/2, height).
Trail apex_cycle(const QuadExt& height);

/// The apex height originally given for this cycle: 2*sqrt3 - sqrt(3/2).
/// It misses the z = 1 layer; see repaired_apex_height().
QuadExt published_apex_height();

/// Height at which the link from (s,s,0) to the apex passes through
/// (1,1,1): (3 + sqrt2)/2.
QuadExt repaired_apex_height();

/// Four-link covering of the 3x3 grid with two turns outside the hull.
Trail nine_dots_trail();

struct ApexAdjudication {
  CoverageReport published;
  std::optional<LatticePoint> first_uncovered;
  std::optional<CoverageReport> repaired;  // only computed if published fails
};

ApexAdjudication adjudicate_apex_cycle();

}  // namespace gridtrail
