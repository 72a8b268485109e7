#include "gridtrail/trail.hpp"

#include <algorithm>
#include <sstream>

namespace gridtrail {

Vertex Vertex::from_point(const LatticePoint& p) {
  Vertex v;
  v.coords.reserve(p.coords.size());
  for (Coord c : p.coords) v.coords.emplace_back(c);
  return v;
}

std::string to_string(const Vertex& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) os << ", ";
    os << v.coords[i];
  }
  os << ')';
  return os.str();
}

Trail reversed(const Trail& t) {
  Trail r = t;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

Trail permute_axes(const Trail& t, const std::vector<std::size_t>& perm) {
  Trail r;
  r.is_cycle = t.is_cycle;
  r.vertices.reserve(t.vertices.size());
  for (const Vertex& v : t.vertices) {
    Vertex w;
    w.coords.reserve(perm.size());
    for (std::size_t src : perm) w.coords.push_back(v.coords.at(src));
    r.vertices.push_back(std::move(w));
  }
  return r;
}

Trail translated(const Trail& t, const std::vector<Coord>& offset) {
  Trail r = t;
  for (Vertex& v : r.vertices) {
    for (std::size_t i = 0; i < v.coords.size() && i < offset.size(); ++i) {
      v.coords[i] += QuadExt(offset[i]);
    }
  }
  return r;
}

}  // namespace gridtrail
