#pragma once

#include <string>
#include <vector>

#include "gridtrail/grid.hpp"
#include "gridtrail/quad_ext.hpp"

namespace gridtrail {

/// A turn point of a trail. May lie off the lattice and have irrational
/// coordinates.
struct Vertex {
  std::vector<QuadExt> coords;

  std::size_t dimension() const { return coords.size(); }
  friend bool operator==(const Vertex&, const Vertex&) = default;

  static Vertex from_point(const LatticePoint& p);
};

std::string to_string(const Vertex& v);

/// Polygonal chain v0 -> v1 -> ... -> vm. Link-length is m.
///
/// Construction does not enforce the trail invariants (distinct consecutive
/// vertices, no repeated segment, cycle flag); validate_trail() reports them
/// so malformed input can be diagnosed instead of rejected outright.
struct Trail {
  std::vector<Vertex> vertices;
  bool is_cycle = false;

  std::size_t link_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::size_t dimension() const { return vertices.empty() ? 0 : vertices.front().dimension(); }

  friend bool operator==(const Trail&, const Trail&) = default;
};

Trail reversed(const Trail& t);

/// Coordinate i of the result is coordinate perm[i] of the input.
Trail permute_axes(const Trail& t, const std::vector<std::size_t>& perm);

Trail translated(const Trail& t, const std::vector<Coord>& offset);

}  // namespace gridtrail
