#pragma once

#include <json.hpp>

#include <string>

#include "gridtrail/grid.hpp"
#include "gridtrail/trail.hpp"

namespace gridtrail {

/// Contents of a trail interchange file:
///   { "dims": [ints], "cycle": bool, "vertices": [[coord, ...], ...] }
/// A coord is a JSON integer, a rational string "p/q", or an array of four
/// rational strings [q0, q1, q2, q3] meaning q0 + q1 sqrt2 + q2 sqrt3 + q3 sqrt6.
/// Floating-point literals are rejected.
struct TrailFile {
  Grid grid;
  Trail trail;
};

Rational parse_rational(const std::string& text, const std::string& where);
QuadExt parse_coord(const nlohmann::json& j, const std::string& where);
nlohmann::ordered_json coord_to_json(const QuadExt& x);
std::string rational_to_string(const Rational& q);

/// Parses a trail object. If the file's dims are not ascending, the grid is
/// sorted and every vertex is permuted the same way. Throws ParseError whose
/// message begins with a JSON-pointer location.
TrailFile trail_from_json(const nlohmann::json& j);
nlohmann::ordered_json trail_to_json(const Grid& g, const Trail& t);

TrailFile parse_trail(const std::string& text);
std::string serialize_trail(const Grid& g, const Trail& t);

TrailFile load_trail_file(const std::string& path);

}  // namespace gridtrail
