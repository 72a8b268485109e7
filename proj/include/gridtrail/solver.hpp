#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridtrail/grid.hpp"
#include "gridtrail/lines.hpp"
#include "gridtrail/trail.hpp"

namespace gridtrail {

/// Explicit search limits. Zero means unlimited.
struct Budget {
  std::uint64_t node_limit = 0;
  double time_limit_seconds = 0;
};

enum class SearchStatus { optimal_restricted, upper_bound_only, infeasible_at_budget };
std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::infeasible_at_budget;
  std::optional<Trail> best_trail;
  std::size_t links = 0;
  std::size_t lower_bound_used = 0;
  std::uint64_t nodes_expanded = 0;
  bool budget_exhausted = false;
};

struct TrailSearchOptions {
  Budget budget;
  /// Sequential search; the witness is the first optimal sequence in
  /// candidate order. The search is always sequential at present, so this
  /// is informational.
  bool deterministic = true;
  /// Extra lower bound to start from (e.g. a line-cover size).
  std::size_t lower_bound_hint = 0;
  bool symmetry_reduction = true;
  bool memoize_failures = true;  // cache subtrees proven to fail
};

/// Depth-first branch and bound over chains of lattice lines, consecutive
/// lines meeting at their intersection point (the turn vertex). Lines through
/// a single grid point are admitted only for a final link when one point is
/// left. The result is optimal within that restricted family, not globally.
SearchResult min_covering_trail(const Grid& g, std::size_t max_links, const TrailSearchOptions& options = {});

struct LineCoverResult {
  SearchStatus status = SearchStatus::optimal_restricted;
  std::size_t size = 0;
  std::vector<CandidateLine> lines;
  std::vector<LatticePoint> singletons;  // points covered by a line through no other grid point
  std::uint64_t nodes_expanded = 0;
};

/// Minimum number of straight lines covering every grid point, by branch and
/// bound on set cover. On budget exhaustion returns the incumbent with status
/// upper_bound_only.
LineCoverResult min_line_cover(const Grid& g, const Budget& budget = {});

/// Largest number of distinct grid points covered by a chain of m links whose
/// lines each hold >= 2 grid points, consecutive lines meeting at a turn.
/// Exhaustive; throws ResourceError when more than `evaluation_limit` chains
/// would be scored (0 = unlimited).
std::size_t max_points_m_links(const Grid& g, std::size_t m, std::uint64_t evaluation_limit = 0);

}  // namespace gridtrail
