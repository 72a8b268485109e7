#include "gridtrail/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gridtrail/bounds.hpp"
#include "gridtrail/errors.hpp"

namespace gridtrail {

namespace {

// Precomputed data for testing many points against one segment.
class SegmentTest {
 public:
  SegmentTest(const Vertex& a, const Vertex& b) : a_(a) {
    if (a.dimension() != b.dimension()) throw StructuralError("segment endpoints differ in dimension");
    if (a == b) throw DomainError("degenerate segment: endpoints coincide");
    dir_.reserve(a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) dir_.push_back(b.coords[i] - a.coords[i]);
    for (const QuadExt& d : dir_) len2_ += d * d;
  }

  bool contains(const LatticePoint& p) const {
    if (p.dimension() != dir_.size()) throw StructuralError("point and segment differ in dimension");
    std::vector<QuadExt> w;
    w.reserve(dir_.size());
    for (std::size_t i = 0; i < dir_.size(); ++i) w.push_back(QuadExt(p.coords[i]) - a_.coords[i]);
    for (std::size_t i = 0; i < dir_.size(); ++i) {
      for (std::size_t j = i + 1; j < dir_.size(); ++j) {
        if (!(w[i] * dir_[j] - w[j] * dir_[i]).is_zero()) return false;
      }
    }
    QuadExt dot;
    for (std::size_t i = 0; i < dir_.size(); ++i) dot += w[i] * dir_[i];
    return sign(dot) >= 0 && sign(len2_ - dot) >= 0;
  }

 private:
  const Vertex& a_;
  std::vector<QuadExt> dir_;
  QuadExt len2_;
};

bool collinear(const Vertex& a, const Vertex& b, const Vertex& c, bool* same_direction) {
  const std::size_t k = a.dimension();
  std::vector<QuadExt> u, v;
  for (std::size_t i = 0; i < k; ++i) {
    u.push_back(b.coords[i] - a.coords[i]);
    v.push_back(c.coords[i] - b.coords[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    }
  }
  QuadExt dot;
  for (std::size_t i = 0; i < k; ++i) dot += u[i] * v[i];
  *same_direction = sign(dot) > 0;
  return true;
}

}  // namespace

bool point_on_segment(const LatticePoint& p, const Vertex& a, const Vertex& b) {
  return SegmentTest(a, b).contains(p);
}

std::vector<Diagnostic> validate_trail(const Trail& t) {
  std::vector<Diagnostic> out;
  auto add = [&](Severity s, std::string code, std::string msg) {
    out.push_back({s, std::move(code), std::move(msg)});
  };
  if (t.vertices.size() < 2) {
    add(Severity::error, "too_few_vertices", "a trail needs at least two vertices");
    return out;
  }
  const std::size_t k = t.vertices.front().dimension();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (t.vertices[i].dimension() != k) {
      add(Severity::error, "dimension_mismatch", "vertex " + std::to_string(i) + " has a different dimension");
      return out;
    }
  }
  const std::size_t m = t.link_count();
  std::set<std::pair<std::size_t, std::size_t>> seen;  // canonical vertex index pairs
  auto vertex_id = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t.vertices[j] == t.vertices[i]) return j;
    }
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const std::string link = "link " + std::to_string(i + 1);
    if (t.vertices[i] == t.vertices[i + 1]) {
      add(Severity::error, "zero_length_link", link + " has zero length");
      continue;
    }
    const std::size_t u = vertex_id(i), v = vertex_id(i + 1);
    const std::pair<std::size_t, std::size_t> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) add(Severity::error, "repeated_link", link + " repeats an earlier segment");
  }
  const bool closed = t.vertices.front() == t.vertices.back();
  if (closed != t.is_cycle) {
    add(Severity::error, "cycle_flag_mismatch",
        t.is_cycle ? "marked as a cycle but the last vertex differs from the first"
                   : "first and last vertex coincide but the trail is not marked as a cycle");
  }
  auto check_turn = [&](const Vertex& a, const Vertex& b, const Vertex& c, const std::string& where) {
    if (a == b || b == c) return;
    bool forward = false;
    if (collinear(a, b, c, &forward)) {
      add(Severity::warning, "collinear_links",
          where + (forward ? " continue in the same direction and could be merged" : " fold back along one line"));
    }
  };
  for (std::size_t i = 1; i < m; ++i) {
    check_turn(t.vertices[i - 1], t.vertices[i], t.vertices[i + 1],
               "links " + std::to_string(i) + " and " + std::to_string(i + 1));
  }
  if (closed && m >= 2) {
    check_turn(t.vertices[m - 1], t.vertices[0], t.vertices[1], "closing links " + std::to_string(m) + " and 1");
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::vector<std::vector<std::size_t>> cover_points(const Trail& t, std::span<const LatticePoint> points) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(t.link_count());
  for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) {
    const SegmentTest seg(t.vertices[i], t.vertices[i + 1]);
    std::vector<std::size_t> hit;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (seg.contains(points[p])) hit.push_back(p);
    }
    out.push_back(std::move(hit));
  }
  return out;
}

CoverageReport verify_trail(const Trail& t, const Grid& g) {
  if (!t.vertices.empty() && t.dimension() != g.dimension()) {
    throw StructuralError("trail has dimension " + std::to_string(t.dimension()) + ", grid has " +
                          std::to_string(g.dimension()));
  }
  CoverageReport r{g, t, t.link_count(), {}, {}, {}, false, 0, validate_trail(t), {}, false};
  if (has_errors(r.diagnostics)) {
    std::ostringstream os;
    os << "trail is structurally invalid:";
    for (const auto& d : r.diagnostics) {
      if (d.severity == Severity::error) os << ' ' << d.message << ';';
    }
    throw StructuralError(os.str());
  }
  const std::vector<LatticePoint> points = enumerate_points(g);
  const auto per_link = cover_points(t, points);
  std::vector<unsigned> hits(points.size(), 0);
  for (const auto& link : per_link) {
    std::vector<LatticePoint> pts;
    for (std::size_t idx : link) {
      ++hits[idx];
      pts.push_back(points[idx]);
    }
    r.per_link_covered.push_back(std::move(pts));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    (hits[i] ? r.covered : r.uncovered).push_back(points[i]);
    if (hits[i] >= 2) ++r.revisit_count;
  }
  r.is_covering = r.uncovered.empty();
  r.best_known_upper = bounds::best_known_upper(g);
  r.beats_best_known = r.is_covering && r.best_known_upper && Integer(static_cast<unsigned long>(r.link_count)) < *r.best_known_upper;
  return r;
}

Trail apex_cycle(const QuadExt& height) {
  const QuadExt s = QuadExt::sqrt2();
  const QuadExt one_minus_s = QuadExt(1) - s;
  const QuadExt half(Rational(1, 2));
  const Vertex a{{one_minus_s, one_minus_s, 0}};
  const Vertex b{{s, s, 0}};
  const Vertex apex{{half, half, height}};
  const Vertex c{{s, one_minus_s, 0}};
  const Vertex d{{one_minus_s, s, 0}};
  return Trail{{a, b, apex, c, d, apex, a}, true};
}

QuadExt published_apex_height() {
  // 2*sqrt3 - sqrt(3/2), and sqrt(3/2) = sqrt6/2.
  return {0, 0, 2, Rational(-1, 2)};
}

QuadExt repaired_apex_height() { return {Rational(3, 2), Rational(1, 2), 0, 0}; }

Trail nine_dots_trail() {
  auto v = [](Coord x, Coord y) { return Vertex::from_point(LatticePoint{{x, y}}); };
  return Trail{{v(0, 0), v(0, 3), v(3, 0), v(0, 0), v(2, 2)}, false};
}

ApexAdjudication adjudicate_apex_cycle() {
  const Grid cube = Grid::hypercube(2, 3);
  ApexAdjudication out{verify_trail(apex_cycle(published_apex_height()), cube), std::nullopt, std::nullopt};
  if (!out.published.is_covering) {
    out.first_uncovered = out.published.uncovered.front();
    out.repaired = verify_trail(apex_cycle(repaired_apex_height()), cube);
  }
  return out;
}

}  // namespace gridtrail
