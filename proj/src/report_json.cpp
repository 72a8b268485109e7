#include "gridtrail/report_json.hpp"

#include <iomanip>
#include <sstream>

#include "gridtrail/trail_json.hpp"

namespace gridtrail {

ordered_json exact_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json exact_json(const Rational& q) { return rational_to_string(q); }

std::string decimal_string(const Rational& q, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << mpf_class(q, 256);
  return os.str();
}

ordered_json to_json(const LatticePoint& p) { return p.coords; }

ordered_json to_json(const Diagnostic& d) {
  ordered_json j;
  j["severity"] = d.severity == Severity::error ? "error" : "warning";
  j["code"] = d.code;
  j["message"] = d.message;
  return j;
}

namespace {

ordered_json points_json(const std::vector<LatticePoint>& pts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? exact_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json to_json(const CoverageReport& r) {
  ordered_json j;
  j["dims"] = r.grid.dims();
  j["link_count"] = r.link_count;
  j["is_covering"] = r.is_covering;
  j["covered_count"] = r.covered.size();
  j["uncovered"] = points_json(r.uncovered);
  j["revisit_count"] = r.revisit_count;
  ordered_json links = ordered_json::array();
  for (const auto& pts : r.per_link_covered) links.push_back(points_json(pts));
  j["per_link_covered"] = std::move(links);
  ordered_json diags = ordered_json::array();
  for (const auto& d : r.diagnostics) diags.push_back(to_json(d));
  j["diagnostics"] = std::move(diags);
  j["best_known_upper"] = optional_json(r.best_known_upper);
  j["beats_best_known"] = r.beats_best_known;
  j["trail"] = trail_to_json(r.grid, r.trail);
  return j;
}

ordered_json to_json(const LineCoverResult& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["size"] = r.size;
  ordered_json lines = ordered_json::array();
  for (const auto& l : r.lines) {
    ordered_json lj;
    lj["base"] = to_json(l.base);
    lj["direction"] = l.direction;
    lj["covered"] = points_json(l.covered);
    lines.push_back(std::move(lj));
  }
  j["lines"] = std::move(lines);
  j["singletons"] = points_json(r.singletons);
  j["nodes_expanded"] = r.nodes_expanded;
  return j;
}

ordered_json to_json(const SearchResult& r, const Grid& g) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["links"] = r.best_trail || r.status == SearchStatus::optimal_restricted ? ordered_json(r.links) : ordered_json(nullptr);
  j["lower_bound_used"] = r.lower_bound_used;
  j["nodes_expanded"] = r.nodes_expanded;
  j["budget_exhausted"] = r.budget_exhausted;
  j["trail"] = r.best_trail ? trail_to_json(g, *r.best_trail) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const bounds::BoundsReport& r) {
  ordered_json j;
  ordered_json na = ordered_json::object();
  j["dims"] = r.grid.dims();
  auto put = [&](const char* name, const bounds::Labeled& v) {
    j[name] = optional_json(v.value);
    if (!v.value) na[name] = v.note;
  };
  put("lower_trivial", r.lower_trivial);
  put("lower_general", r.lower_general);
  put("upper_3d", r.upper_3d);
  put("upper_k", r.upper_k);
  if (r.literature) {
    j["literature_upper"] = {{"value", exact_json(r.literature->value)}, {"source", r.literature->source}};
  } else {
    j["literature_upper"] = nullptr;
  }
  if (r.exact) {
    j["exact"] = {{"value", exact_json(r.exact->value)}, {"provenance", bounds::to_string(r.exact->provenance)}};
  } else {
    j["exact"] = nullptr;
  }
  ordered_json kr = ordered_json::array();
  for (const auto& [c, v] : r.kranakis) kr.push_back({{"c", exact_json(c)}, {"value", exact_json(v)}});
  j["kranakis"] = std::move(kr);
  if (r.bereg) {
    j["bereg"] = {{"rational", exact_json(r.bereg->rational)},
                  {"sqrt_coeff", exact_json(r.bereg->coeff)},
                  {"radicand", r.bereg->radicand}};
  } else {
    j["bereg"] = nullptr;
  }
  if (r.sandwich) {
    j["sandwich"] = {{"kranakis_below", r.sandwich->kranakis_below},
                     {"bereg_above", r.sandwich->bereg_above},
                     {"both", r.sandwich->both()}};
  } else {
    j["sandwich"] = nullptr;
  }
  if (r.eq10) {
    j["eq10"] = {{"lhs", exact_json(r.eq10->lhs)}, {"rhs", exact_json(r.eq10->rhs)}, {"holds", r.eq10->holds()}};
  } else {
    j["eq10"] = nullptr;
  }
  j["loss_bound"] = optional_json(r.loss_bound);
  j["line_cover_lb"] = optional_json(r.line_cover_lb);
  ordered_json errs = ordered_json::array();
  for (const auto& e : r.consistency_errors()) errs.push_back(e);
  j["consistency_errors"] = std::move(errs);
  j["not_applicable"] = std::move(na);
  return j;
}

ordered_json to_json(const bounds::RatioReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["h"] = exact_json(r.h);
  j["basis"] = bounds::to_string(r.basis);
  j["source"] = r.source;
  j["points_per_link"] = exact_json(r.points_per_link);
  j["ratio"] = exact_json(r.ratio);
  j["below_ideal_rate"] = r.below_ideal_rate();
  j["loss_bound"] = exact_json(r.loss_bound);
  return j;
}

}  // namespace gridtrail
