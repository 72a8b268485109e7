#include "gridtrail/trail_json.hpp"

#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include "gridtrail/errors.hpp"

namespace gridtrail {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

}  // namespace

Rational parse_rational(const std::string& text, const std::string& where) {
  static const std::regex kRational(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kRational)) fail(where, "not a rational literal '" + text + "'");
  const auto slash = text.find('/');
  mpz_class num(text.substr(0, slash), 10);
  mpz_class den(1);
  if (slash != std::string::npos) {
    den = mpz_class(text.substr(slash + 1), 10);
    if (den == 0) fail(where, "zero denominator in '" + text + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

QuadExt parse_coord(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return QuadExt(Rational(mpz_class(std::to_string(j.get<std::uint64_t>()), 10)));
    }
    return QuadExt(j.get<std::int64_t>());
  }
  if (j.is_number_float()) fail(where, "floating-point literals are not accepted");
  if (j.is_string()) return QuadExt(parse_rational(j.get<std::string>(), where));
  if (j.is_array()) {
    if (j.size() != 4) fail(where, "expected [q0, q1, q2, q3]");
    std::array<Rational, 4> q;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string at = where + "/" + std::to_string(i);
      if (j[i].is_string()) {
        q[i] = parse_rational(j[i].get<std::string>(), at);
      } else if (j[i].is_number_integer() && !j[i].is_number_unsigned()) {
        q[i] = Rational(static_cast<long>(j[i].get<std::int64_t>()));
      } else {
        fail(at, "expected a rational string");
      }
    }
    return {q[0], q[1], q[2], q[3]};
  }
  fail(where, "expected an integer, a rational string or a 4-element array");
}

std::string rational_to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

ordered_json coord_to_json(const QuadExt& x) {
  if (x.is_rational()) {
    const Rational& q = x.coeff(0);
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return rational_to_string(q);
  }
  ordered_json arr = ordered_json::array();
  for (const auto& q : x.coeffs()) arr.push_back(rational_to_string(q));
  return arr;
}

TrailFile trail_from_json(const json& j) {
  if (!j.is_object()) fail("", "expected a JSON object");
  if (!j.contains("dims")) fail("/dims", "missing");
  if (!j.contains("vertices")) fail("/vertices", "missing");
  const json& jd = j["dims"];
  if (!jd.is_array() || jd.empty()) fail("/dims", "expected a non-empty array of positive integers");
  std::vector<Coord> dims;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    if (!jd[i].is_number_integer() || jd[i].get<std::int64_t>() < 1) {
      fail("/dims/" + std::to_string(i), "expected a positive integer");
    }
    dims.push_back(jd[i].get<std::int64_t>());
  }
  bool cycle = false;
  if (j.contains("cycle")) {
    if (!j["cycle"].is_boolean()) fail("/cycle", "expected true or false");
    cycle = j["cycle"].get<bool>();
  }
  const json& jv = j["vertices"];
  if (!jv.is_array()) fail("/vertices", "expected an array");

  Trail raw;
  raw.is_cycle = cycle;
  for (std::size_t v = 0; v < jv.size(); ++v) {
    const std::string at = "/vertices/" + std::to_string(v);
    if (!jv[v].is_array()) fail(at, "expected an array of coordinates");
    if (jv[v].size() != dims.size()) {
      fail(at, "vertex has " + std::to_string(jv[v].size()) + " coordinates, grid has " +
                   std::to_string(dims.size()) + " axes");
    }
    Vertex vert;
    for (std::size_t c = 0; c < jv[v].size(); ++c) {
      vert.coords.push_back(parse_coord(jv[v][c], at + "/" + std::to_string(c)));
    }
    raw.vertices.push_back(std::move(vert));
  }

  Grid grid(dims);
  Trail trail = grid.was_permuted() ? permute_axes(raw, grid.permutation()) : std::move(raw);
  return {std::move(grid), std::move(trail)};
}

ordered_json trail_to_json(const Grid& g, const Trail& t) {
  ordered_json out;
  out["dims"] = g.dims();
  out["cycle"] = t.is_cycle;
  ordered_json verts = ordered_json::array();
  for (const Vertex& v : t.vertices) {
    ordered_json row = ordered_json::array();
    for (const QuadExt& x : v.coords) row.push_back(coord_to_json(x));
    verts.push_back(std::move(row));
  }
  out["vertices"] = std::move(verts);
  return out;
}

TrailFile parse_trail(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  // Solver result files embed the trail under "trail".
  if (j.is_object() && j.contains("trail") && !j.contains("vertices")) {
    if (j["trail"].is_null()) throw ParseError("/trail: result holds no trail");
    try {
      return trail_from_json(j["trail"]);
    } catch (const ParseError& e) {
      throw ParseError(std::string("/trail") + e.what());
    }
  }
  return trail_from_json(j);
}

std::string serialize_trail(const Grid& g, const Trail& t) { return trail_to_json(g, t).dump(2) + "\n"; }

TrailFile load_trail_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_trail(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace gridtrail
