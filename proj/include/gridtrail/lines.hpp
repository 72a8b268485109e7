#pragma once

#include <cstdint>
#include <vector>

#include "gridtrail/grid.hpp"

namespace gridtrail {

/// Largest grid the line-based routines accept. Line enumeration is
/// quadratic in the point count.
inline constexpr std::uint64_t kLinePointCap = 4096;

/// A straight line through at least two grid points, in canonical form:
/// the direction is primitive with its first nonzero component positive,
/// and base is the lexicographically smallest grid point on the line.
/// covered[t] = base + t * direction.
struct CandidateLine {
  LatticePoint base;
  std::vector<Coord> direction;
  std::vector<LatticePoint> covered;

  std::size_t size() const { return covered.size(); }
  friend bool operator==(const CandidateLine&, const CandidateLine&) = default;
};

/// Every distinct line containing >= 2 grid points, sorted by
/// (direction, base).
std::vector<CandidateLine> enumerate_lines(const Grid& g, std::uint64_t cap = kLinePointCap);

/// Primitive form of an integer vector: divided by the gcd of its entries
/// and negated if needed so the first nonzero entry is positive.
std::vector<Coord> primitive_direction(std::vector<Coord> v);

}  // namespace gridtrail
