#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <bit>
#include <functional>
#include <set>

#include "gridtrail/errors.hpp"
#include "gridtrail/solver.hpp"
#include "gridtrail/verifier.hpp"

using namespace gridtrail;
using boost::multiprecision::cpp_rational;

namespace {

using PointIds = std::vector<std::size_t>;

bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const std::size_t k = a.coords.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Coord m = (b.coords[i] - a.coords[i]) * (c.coords[j] - a.coords[j]) -
                      (b.coords[j] - a.coords[j]) * (c.coords[i] - a.coords[i]);
      if (m != 0) return false;
    }
  }
  return true;
}

// Every maximal collinear point set of size >= 2, from all point pairs.
std::set<PointIds> oracle_lines(const std::vector<LatticePoint>& pts) {
  std::set<PointIds> lines;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      PointIds on;
      for (std::size_t c = 0; c < pts.size(); ++c) {
        if (collinear(pts[a], pts[b], pts[c])) on.push_back(c);
      }
      lines.insert(on);
    }
  }
  return lines;
}

// Smallest number of lines (or single points) covering everything, by
// trying all combinations of increasing size.
std::size_t oracle_line_cover(const std::vector<LatticePoint>& pts) {
  const auto set = oracle_lines(pts);
  std::vector<PointIds> lines(set.begin(), set.end());
  const std::size_t n = pts.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    std::function<bool(std::size_t, std::size_t, std::vector<int>&)> rec = [&](std::size_t depth, std::size_t from,
                                                                              std::vector<int>& cover) {
      if (depth == size) {
        std::size_t uncovered = 0;
        for (int c : cover) uncovered += c == 0;
        return uncovered == 0;
      }
      // Remaining slots may be singletons: count uncovered first.
      std::size_t uncovered = 0;
      for (int c : cover) uncovered += c == 0;
      if (uncovered <= size - depth) return true;
      for (std::size_t l = from; l < lines.size(); ++l) {
        for (std::size_t p : lines[l]) ++cover[p];
        const bool ok = rec(depth + 1, l + 1, cover);
        for (std::size_t p : lines[l]) --cover[p];
        if (ok) return true;
      }
      return false;
    };
    std::vector<int> cover(n, 0);
    if (rec(0, 0, cover)) return size;
  }
  return n;
}

// Three-link chains in the plane, scored directly: a ray on L1 ending at
// L1 ^ L2, the segment of L2 between the two crossings, a ray on L3 from
// L2 ^ L3.
std::size_t oracle_three_links_2d(const std::vector<LatticePoint>& pts) {
  const auto set = oracle_lines(pts);
  std::vector<PointIds> lines(set.begin(), set.end());
  struct L {
    cpp_rational bx, by, dx, dy;
  };
  std::vector<L> geo;
  for (const auto& l : lines) {
    const auto& p = pts[l[0]];
    const auto& q = pts[l[1]];
    geo.push_back({p.coords[0], p.coords[1], cpp_rational(q.coords[0] - p.coords[0]), cpp_rational(q.coords[1] - p.coords[1])});
  }
  // Parameter of point c along line l.
  auto param = [&](std::size_t l, const cpp_rational& x, const cpp_rational& y) {
    return geo[l].dx != 0 ? (x - geo[l].bx) / geo[l].dx : (y - geo[l].by) / geo[l].dy;
  };
  auto cross = [&](std::size_t i, std::size_t j, cpp_rational& x, cpp_rational& y) {
    const cpp_rational det = geo[i].dx * geo[j].dy - geo[i].dy * geo[j].dx;
    if (det == 0) return false;
    const cpp_rational s = ((geo[j].bx - geo[i].bx) * geo[j].dy - (geo[j].by - geo[i].by) * geo[j].dx) / det;
    x = geo[i].bx + s * geo[i].dx;
    y = geo[i].by + s * geo[i].dy;
    return true;
  };
  // Parameter of every grid point along each of its lines.
  std::vector<std::vector<cpp_rational>> tpts(lines.size());
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (std::size_t p : lines[l]) tpts[l].push_back(param(l, pts[p].coords[0], pts[p].coords[1]));
  }
  // Points of line l with parameter on one side of t (inclusive).
  auto ray = [&](std::size_t l, const cpp_rational& t, int side) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < lines[l].size(); ++i) {
      if ((tpts[l][i] - t) * side >= 0) m |= std::uint64_t{1} << lines[l][i];
    }
    return m;
  };
  std::size_t best = 0;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = 0; b < lines.size(); ++b) {
      cpp_rational x1, y1;
      if (!cross(a, b, x1, y1)) continue;
      const cpp_rational ta = param(a, x1, y1), tb1 = param(b, x1, y1);
      const std::uint64_t rays_a = ray(a, ta, -1), rays_a2 = ray(a, ta, 1);
      for (std::size_t c = 0; c < lines.size(); ++c) {
        cpp_rational x2, y2;
        if (!cross(b, c, x2, y2)) continue;
        if (x1 == x2 && y1 == y2) continue;
        const cpp_rational tb2 = param(b, x2, y2), tc = param(c, x2, y2);
        std::uint64_t mid = 0;
        for (std::size_t i = 0; i < lines[b].size(); ++i) {
          if ((tpts[b][i] - tb1) * (tpts[b][i] - tb2) <= 0) mid |= std::uint64_t{1} << lines[b][i];
        }
        const std::uint64_t rc1 = ray(c, tc, -1), rc2 = ray(c, tc, 1);
        for (std::uint64_t first : {rays_a, rays_a2}) {
          for (std::uint64_t last : {rc1, rc2}) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(first | mid | last)));
          }
        }
      }
    }
  }
  return best;
}

void check_witness(const SearchResult& r, const Grid& g) {
  REQUIRE(r.best_trail.has_value());
  const CoverageReport rep = verify_trail(*r.best_trail, g);
  CHECK(rep.is_covering);
  CHECK(rep.link_count == r.links);
}

}  // namespace

TEST_CASE("enumerate_lines matches the pair oracle") {
  for (const auto& dims : std::vector<std::vector<Coord>>{{2, 2}, {3, 3}, {2, 2, 2}, {3, 4}, {2, 3, 3}, {1, 5}}) {
    const Grid g(dims);
    const auto pts = enumerate_points(g);
    const auto lines = enumerate_lines(g);
    std::set<PointIds> got;
    for (const auto& l : lines) {
      PointIds ids;
      for (const auto& p : l.covered) ids.push_back(g.index_of(p));
      std::sort(ids.begin(), ids.end());
      CHECK(l.covered.size() >= 2);
      CHECK(l.direction == primitive_direction(l.direction));
      for (std::size_t t = 0; t < l.covered.size(); ++t) {
        for (std::size_t a = 0; a < dims.size(); ++a) {
          CHECK(l.covered[t].coords[a] == l.base.coords[a] + static_cast<Coord>(t) * l.direction[a]);
        }
      }
      got.insert(ids);
    }
    CHECK(got.size() == lines.size());
    CHECK(got == oracle_lines(pts));
  }
  CHECK(enumerate_lines(Grid::hypercube(2, 2)).size() == 6);
  CHECK(enumerate_lines(Grid::hypercube(3, 2)).size() == 20);
  CHECK(enumerate_lines(Grid::hypercube(2, 3)).size() == 28);
  CHECK(primitive_direction({-2, 4, 0}) == std::vector<Coord>{1, -2, 0});
  CHECK(primitive_direction({0, -3}) == std::vector<Coord>{0, 1});
  CHECK_THROWS_AS(enumerate_lines(Grid({100, 100})), SizeError);
}

TEST_CASE("min_line_cover") {
  CHECK(min_line_cover(Grid::hypercube(3, 2)).size == 3);
  CHECK(min_line_cover(Grid::hypercube(2, 3)).size == 4);
  for (Coord n = 1; n <= 6; ++n) CHECK(min_line_cover(Grid({1, n})).size == 1);
  for (const auto& dims : std::vector<std::vector<Coord>>{{2, 2}, {3, 3}, {2, 3}, {3, 4}, {2, 2, 2}, {2, 2, 3}, {4, 4}}) {
    const Grid g(dims);
    const LineCoverResult r = min_line_cover(g);
    CHECK(r.status == SearchStatus::optimal_restricted);
    CHECK(r.size == oracle_line_cover(enumerate_points(g)));
    CHECK(r.size == r.lines.size() + r.singletons.size());
    std::set<LatticePoint> covered(r.singletons.begin(), r.singletons.end());
    for (const auto& l : r.lines) covered.insert(l.covered.begin(), l.covered.end());
    CHECK(covered.size() == g.point_count());
  }
}

TEST_CASE("max_points_m_links") {
  for (Coord n = 3; n <= 5; ++n) CHECK(max_points_m_links(Grid::hypercube(n, 2), 3) == static_cast<std::size_t>(3 * n - 2));
  CHECK(max_points_m_links(Grid::hypercube(3, 2), 3) == 7);
  CHECK(max_points_m_links(Grid::hypercube(4, 2), 3) == 10);
  CHECK(max_points_m_links(Grid::hypercube(3, 2), 3) == oracle_three_links_2d(enumerate_points(Grid::hypercube(3, 2))));
  CHECK(max_points_m_links(Grid::hypercube(4, 2), 3) == oracle_three_links_2d(enumerate_points(Grid::hypercube(4, 2))));
  CHECK(max_points_m_links(Grid({3, 5}), 3) == oracle_three_links_2d(enumerate_points(Grid({3, 5}))));
  for (const auto& dims : std::vector<std::vector<Coord>>{{3, 3}, {2, 7}, {3, 4, 5}}) {
    const Grid g(dims);
    CHECK(max_points_m_links(g, 1) == static_cast<std::size_t>(g.largest()));
  }
  CHECK(max_points_m_links(Grid::hypercube(3, 2), 4) == 9);
  CHECK_THROWS_AS(max_points_m_links(Grid::hypercube(5, 2), 3, 10), ResourceError);
}

TEST_CASE("minimum covering trails on small planar grids") {
  const SearchResult r3 = min_covering_trail(Grid::hypercube(3, 2), 4);
  CHECK(r3.links == 4);
  CHECK(r3.status == SearchStatus::optimal_restricted);
  check_witness(r3, Grid::hypercube(3, 2));

  const SearchResult r4 = min_covering_trail(Grid::hypercube(4, 2), 6);
  CHECK(r4.links == 6);
  check_witness(r4, Grid::hypercube(4, 2));

  const SearchResult r2 = min_covering_trail(Grid::hypercube(2, 2), 3);
  CHECK(r2.links == 3);
  CHECK(r2.status == SearchStatus::optimal_restricted);
  check_witness(r2, Grid::hypercube(2, 2));

  const SearchResult none = min_covering_trail(Grid::hypercube(3, 2), 3);
  CHECK(none.status == SearchStatus::infeasible_at_budget);
  CHECK_FALSE(none.budget_exhausted);
  CHECK_FALSE(none.best_trail.has_value());

  const SearchResult point = min_covering_trail(Grid({1, 1}), 3);
  CHECK(point.status == SearchStatus::optimal_restricted);
  CHECK(point.links == 0);
}

TEST_CASE("failure memo and symmetry reduction do not change the optimum") {
  for (const auto& dims : std::vector<std::vector<Coord>>{{2, 2}, {3, 3}, {2, 3}, {2, 4}, {1, 5}, {3, 4}, {1, 2, 2}}) {
    const Grid g(dims);
    TrailSearchOptions plain;
    plain.memoize_failures = false;
    plain.symmetry_reduction = false;
    const SearchResult a = min_covering_trail(g, g.point_count());
    const SearchResult b = min_covering_trail(g, g.point_count(), plain);
    CHECK_MESSAGE(a.links == b.links, g.to_string());
    CHECK(a.status == SearchStatus::optimal_restricted);
    CHECK(b.status == SearchStatus::optimal_restricted);
    check_witness(a, g);
  }
}

TEST_CASE("solver results respect line cover and known values") {
  for (const auto& dims : std::vector<std::vector<Coord>>{{2, 2}, {3, 3}, {2, 3}, {3, 4}, {4, 4}, {2, 2, 2}, {3, 5}}) {
    const Grid g(dims);
    const LineCoverResult cover = min_line_cover(g);
    TrailSearchOptions opt;
    opt.lower_bound_hint = cover.size;
    const SearchResult r = min_covering_trail(g, g.point_count(), opt);
    REQUIRE(r.best_trail.has_value());
    CHECK(cover.size <= r.links);
    check_witness(r, g);
    if (g.is_hypercubic() && g.dims().front() >= 3 && g.dimension() == 2) {
      CHECK(r.links == static_cast<std::size_t>(2 * g.dims().front() - 2));
    }
  }
}

TEST_CASE("deterministic witnesses and budgets") {
  const Grid g = Grid::hypercube(3, 2);
  TrailSearchOptions opt;
  opt.deterministic = true;
  const SearchResult a = min_covering_trail(g, 5, opt);
  const SearchResult b = min_covering_trail(g, 5, opt);
  CHECK(a.best_trail == b.best_trail);

  TrailSearchOptions tight;
  tight.budget.node_limit = 5;
  const SearchResult c = min_covering_trail(Grid::hypercube(4, 2), 8, tight);
  CHECK(c.budget_exhausted);
  CHECK(c.status != SearchStatus::optimal_restricted);
  if (c.best_trail) {
    CHECK(c.status == SearchStatus::upper_bound_only);
    check_witness(c, Grid::hypercube(4, 2));
  }
}
