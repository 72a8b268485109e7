#include "gridtrail/lines.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gridtrail/errors.hpp"

namespace gridtrail {

std::vector<Coord> primitive_direction(std::vector<Coord> v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, c);
  if (g == 0) return v;
  const auto first = std::find_if(v.begin(), v.end(), [](Coord c) { return c != 0; });
  if (*first < 0) g = -g;
  for (Coord& c : v) c /= g;
  return v;
}

std::vector<CandidateLine> enumerate_lines(const Grid& g, std::uint64_t cap) {
  if (g.point_count() > cap) {
    throw SizeError("line enumeration: grid " + g.to_string() + " exceeds " + std::to_string(cap) + " points");
  }
  const std::vector<LatticePoint> points = enumerate_points(g);
  const std::size_t k = g.dimension();

  using Key = std::pair<std::vector<Coord>, std::vector<Coord>>;  // (direction, base)
  std::map<Key, bool> keys;
  LatticePoint walk{std::vector<Coord>(k)};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      std::vector<Coord> d(k);
      for (std::size_t a = 0; a < k; ++a) d[a] = points[j].coords[a] - points[i].coords[a];
      d = primitive_direction(std::move(d));
      walk = points[i];
      while (true) {
        for (std::size_t a = 0; a < k; ++a) walk.coords[a] -= d[a];
        if (!g.contains(walk)) break;
      }
      for (std::size_t a = 0; a < k; ++a) walk.coords[a] += d[a];
      keys.emplace(Key{d, walk.coords}, true);
    }
  }

  std::vector<CandidateLine> lines;
  lines.reserve(keys.size());
  for (const auto& [key, unused] : keys) {
    CandidateLine line{LatticePoint{key.second}, key.first, {}};
    for (LatticePoint p = line.base; g.contains(p);) {
      line.covered.push_back(p);
      for (std::size_t a = 0; a < k; ++a) p.coords[a] += line.direction[a];
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace gridtrail
