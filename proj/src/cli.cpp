#include "gridtrail/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "gridtrail/bounds.hpp"
#include "gridtrail/errors.hpp"
#include "gridtrail/report_json.hpp"
#include "gridtrail/solver.hpp"
#include "gridtrail/svg.hpp"
#include "gridtrail/trail_json.hpp"
#include "gridtrail/verifier.hpp"

namespace gridtrail::cli {

namespace {

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      r.lo = std::stol(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      const std::string tail = text.substr(dots + 2);
      r.hi = std::stol(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw ParseError(std::string("--") + what + ": expected N or A..B, got '" + text + "'");
  }
  if (r.lo > r.hi) throw ParseError(std::string("--") + what + ": empty range '" + text + "'");
  return r;
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::ostringstream os;
    write(os, header_);
    for (const auto& r : rows_) write(os, r);
    return os.str();
  }

 private:
  static void write(std::ostream& os, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      const std::string& f = row[i];
      if (f.find_first_of(",\"\n") == std::string::npos) {
        os << f;
      } else {
        os << '"';
        for (char c : f) os << (c == '"' ? "\"\"" : std::string(1, c));
        os << '"';
      }
    }
    os << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Output {
  std::string path;
  std::string format = "json";
};

void emit(const std::string& text, const Output& o, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw ParseError(o.path + ": cannot open for writing");
  f << text;
}

std::string opt_str(const std::optional<Integer>& v) { return v ? v->get_str() : "n/a"; }
std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string grid, n, k;
  std::vector<std::string> constants{"1", "3/2"};
  Output output;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.grid.empty() == (a.n.empty() || a.k.empty())) {
    throw ParseError("bounds: give either --grid or both --n and --k");
  }
  std::vector<Rational> cs;
  for (const auto& c : a.constants) cs.push_back(parse_rational(c, "--c"));

  std::vector<Grid> grids;
  std::vector<std::vector<Coord>> inputs;
  if (!a.grid.empty()) {
    inputs.push_back(parse_dims(a.grid));
    grids.emplace_back(inputs.back());
  } else {
    const Range nr = parse_range(a.n, "n");
    const Range kr = parse_range(a.k, "k");
    if (nr.lo < 1 || kr.lo < 1) throw ParseError("bounds: n and k must be positive");
    for (long n = nr.lo; n <= nr.hi; ++n) {
      for (long k = kr.lo; k <= kr.hi; ++k) {
        inputs.emplace_back(static_cast<std::size_t>(k), n);
        grids.push_back(Grid::hypercube(n, static_cast<std::size_t>(k)));
      }
    }
  }

  std::vector<bounds::BoundsReport> reports;
  for (const Grid& g : grids) reports.push_back(bounds::make_report(g, cs));

  if (a.output.format == "csv") {
    std::vector<std::string> header{"dims", "lower_trivial", "lower_general", "upper_3d", "upper_k",
                                    "literature_upper", "exact", "exact_source"};
    for (const auto& c : cs) {
      header.push_back("kranakis_c=" + rational_to_string(c));
      header.push_back("kranakis_c=" + rational_to_string(c) + "_decimal");
    }
    for (const char* h : {"bereg", "bereg_decimal", "sandwich_kranakis_below", "sandwich_bereg_above", "eq10",
                          "loss_bound", "loss_bound_decimal"}) {
      header.emplace_back(h);
    }
    Csv csv(header);
    for (const auto& r : reports) {
      std::vector<std::string> row{r.grid.to_string(),         opt_str(r.lower_trivial.value),
                                   opt_str(r.lower_general.value), opt_str(r.upper_3d.value),
                                   opt_str(r.upper_k.value)};
      row.push_back(r.literature ? r.literature->value.get_str() : "n/a");
      row.push_back(r.exact ? r.exact->value.get_str() : "n/a");
      row.push_back(r.exact ? bounds::to_string(r.exact->provenance) : "n/a");
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i < r.kranakis.size()) {
          row.push_back(rational_to_string(r.kranakis[i].second));
          row.push_back(decimal_string(r.kranakis[i].second));
        } else {
          row.insert(row.end(), {"n/a", "n/a"});
        }
      }
      row.push_back(r.bereg ? r.bereg->to_string() : "n/a");
      row.push_back(r.bereg ? r.bereg->to_decimal(15) : "n/a");
      row.push_back(r.sandwich ? bool_str(r.sandwich->kranakis_below) : "n/a");
      row.push_back(r.sandwich ? bool_str(r.sandwich->bereg_above) : "n/a");
      row.push_back(r.eq10 ? bool_str(r.eq10->holds()) : "n/a");
      row.push_back(r.loss_bound ? rational_to_string(*r.loss_bound) : "n/a");
      row.push_back(r.loss_bound ? decimal_string(*r.loss_bound) : "n/a");
      csv.add(std::move(row));
    }
    emit(csv.str(), a.output, out);
  } else {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      ordered_json j = to_json(reports[i]);
      if (reports[i].grid.was_permuted()) {
        j["input_dims"] = inputs[i];
        j["permutation"] = reports[i].grid.permutation();
      }
      rows.push_back(std::move(j));
    }
    emit(ordered_json{{"rows", std::move(rows)}}.dump(2) + "\n", a.output, out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct TrailArgs {
  std::string file;
  std::string grid;
  Output output;
};

TrailFile load_with_grid(const TrailArgs& a) {
  TrailFile tf = load_trail_file(a.file);
  if (!a.grid.empty()) {
    const Grid g(parse_dims(a.grid));
    if (!(g == tf.grid)) {
      throw StructuralError("dimension mismatch: trail file is for grid " + tf.grid.to_string() + ", --grid is " +
                            g.to_string());
    }
  }
  return tf;
}

int cmd_verify(const TrailArgs& a, std::ostream& out, std::ostream& err) {
  const TrailFile tf = load_with_grid(a);
  const auto diags = validate_trail(tf.trail);
  if (has_errors(diags)) {
    ordered_json j;
    j["dims"] = tf.grid.dims();
    j["is_covering"] = false;
    ordered_json arr = ordered_json::array();
    for (const auto& d : diags) arr.push_back(to_json(d));
    j["structural_errors"] = std::move(arr);
    emit(j.dump(2) + "\n", a.output, out);
    err << "verify: trail is structurally invalid\n";
    return kNegative;
  }
  const CoverageReport report = verify_trail(tf.trail, tf.grid);
  if (report.beats_best_known) {
    err << "WARNING: covering trail with " << report.link_count << " links beats the best known upper bound "
        << report.best_known_upper->get_str() << " for grid " << tf.grid.to_string()
        << ". Either a new construction or a bug.\n";
  }
  ordered_json j = to_json(report);
  if (tf.grid.was_permuted()) j["permutation"] = tf.grid.permutation();
  emit(j.dump(2) + "\n", a.output, out);
  return report.is_covering ? kSuccess : kNegative;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  TrailArgs trail;
  int width = 640;
  int height = 640;
  double radius = 6;
  double stroke = 2;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const TrailFile tf = load_with_grid(a.trail);
  RenderSpec spec = RenderSpec::for_dimension(tf.grid.dimension());
  spec.width = a.width;
  spec.height = a.height;
  spec.point_radius = a.radius;
  spec.stroke_width = a.stroke;
  spec.validate(tf.grid.dimension());
  const CoverageReport report = verify_trail(tf.trail, tf.grid);
  emit(render_svg(report, spec), a.trail.output, out);
  return kSuccess;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string grid;
  std::optional<std::size_t> max_links;
  std::uint64_t node_budget = 0;
  double time_budget = 0;
  bool deterministic = false;
  std::string svg;
  Output output;
};

int cmd_solve(const SolveArgs& a, bool verbose, std::ostream& out, std::ostream& err) {
  if (a.grid.empty()) throw ParseError("solve: --grid is required");
  const std::vector<Coord> input = parse_dims(a.grid);
  const Grid g(input);
  const Budget budget{a.node_budget, a.time_budget};
  const auto t0 = std::chrono::steady_clock::now();

  const LineCoverResult cover = min_line_cover(g, budget);
  std::size_t max_links = g.point_count();
  if (a.max_links) {
    max_links = *a.max_links;
  } else if (auto u = bounds::best_known_upper(g); u && u->fits_ulong_p()) {
    max_links = std::max<std::size_t>(u->get_ui(), 1);
  }
  TrailSearchOptions opt;
  opt.budget = budget;
  opt.deterministic = a.deterministic;
  if (cover.status == SearchStatus::optimal_restricted) opt.lower_bound_hint = cover.size;
  const SearchResult result = min_covering_trail(g, max_links, opt);

  if (verbose) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    err << "solve: " << dt.count() << " s, " << cover.nodes_expanded << " line-cover nodes, "
        << result.nodes_expanded << " trail nodes\n";
  }

  ordered_json j;
  j["dims"] = g.dims();
  if (g.was_permuted()) {
    j["input_dims"] = input;
    j["permutation"] = g.permutation();
  }
  j["max_links"] = max_links;
  j["line_cover"] = to_json(cover);
  if (g.dims().front() >= 3 && g.dimension() >= 2) j["lower_general"] = exact_json(bounds::lower_general(g));
  if (g.is_hypercubic()) {
    const auto e = bounds::exact_known(static_cast<long>(g.dims().front()), static_cast<long>(g.dimension()));
    j["exact_known"] = e ? exact_json(e->value) : ordered_json(nullptr);
  }
  const ordered_json search = to_json(result, g);
  for (auto it = search.begin(); it != search.end(); ++it) j[it.key()] = *it;

  if (result.best_trail) {
    const CoverageReport check = verify_trail(*result.best_trail, g);
    j["verified"] = check.is_covering && check.link_count == result.links;
    if (!a.svg.empty() && (g.dimension() == 2 || g.dimension() == 3)) {
      emit(render_svg(check, RenderSpec::for_dimension(g.dimension())), Output{a.svg, "svg"}, out);
    }
  }
  emit(j.dump(2) + "\n", a.output, out);
  if (result.budget_exhausted) {
    err << "solve: budget exhausted, result is " << to_string(result.status) << "\n";
    return kBudget;
  }
  return result.best_trail || g.point_count() == 1 ? kSuccess : kNegative;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string n = "2..4";
  std::string k = "2..3";
  std::string basis = "upper";
  Output output;
};

// Estimates beyond the closed forms: the verified apex cycle on the unit
// cube and exhaustive solver runs on tiny grids.
std::optional<bounds::LinkEstimate> table_estimate(long n, long k, bounds::Basis basis) {
  auto est = bounds::default_estimate(n, k, basis);
  if ((est && est->basis == bounds::Basis::exact) || basis != bounds::Basis::upper_bound) return est;
  auto consider = [&](const Integer& v, const std::string& source) {
    if (!est || v < est->value) est = bounds::LinkEstimate{v, bounds::Basis::upper_bound, source};
  };
  if (n == 2 && k == 3) {
    const ApexAdjudication adj = adjudicate_apex_cycle();
    if (adj.published.is_covering) {
      consider(6, "verified apex cycle");
    } else if (adj.repaired && adj.repaired->is_covering) {
      consider(6, "verified apex cycle (repaired height)");
    }
  }
  const Grid g = Grid::hypercube(n, static_cast<std::size_t>(k));
  if (g.point_count() <= 16) {
    TrailSearchOptions opt;
    opt.budget.node_limit = 2'000'000;
    const SearchResult r = min_covering_trail(g, g.point_count(), opt);
    if (r.best_trail) consider(Integer(static_cast<unsigned long>(r.links)), "solver:" + to_string(r.status));
  }
  return est;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Range nr = parse_range(a.n, "n");
  const Range kr = parse_range(a.k, "k");
  if (nr.lo < 2 || kr.lo < 1) throw ParseError("table: requires n >= 2 and k >= 1");
  if ((nr.hi - nr.lo + 1) * (kr.hi - kr.lo + 1) > 10'000) throw ParseError("table: range too large");
  bounds::Basis basis;
  if (a.basis == "exact") {
    basis = bounds::Basis::exact;
  } else if (a.basis == "upper") {
    basis = bounds::Basis::upper_bound;
  } else if (a.basis == "lower") {
    basis = bounds::Basis::lower_bound;
  } else {
    throw ParseError("--basis: expected exact, upper or lower");
  }

  std::map<std::pair<long, long>, std::optional<bounds::LinkEstimate>> est;
  for (long k = kr.lo; k <= kr.hi; ++k) {
    for (long n = nr.lo; n <= nr.hi; ++n) est[{n, k}] = table_estimate(n, k, basis);
  }

  struct Row {
    long n, k;
    std::optional<bounds::RatioReport> report;
    std::optional<bounds::RatioChain> chain;
  };
  std::vector<Row> rows;
  for (long k = kr.lo; k <= kr.hi; ++k) {
    for (long n = nr.lo; n <= nr.hi; ++n) {
      Row row{n, k, std::nullopt, std::nullopt};
      if (const auto& e = est[{n, k}]) row.report = bounds::ratio_report(n, k, *e);
      if (n + 1 <= nr.hi) row.chain = bounds::ratio_chain(n, k, est[{n, k}], est[{n + 1, k}]);
      rows.push_back(std::move(row));
    }
  }

  if (a.output.format == "csv") {
    Csv csv({"n", "k", "h", "basis", "source", "points_per_link", "ratio", "ratio_decimal", "below_ideal_rate",
             "loss_bound", "chain_next", "k2_identity"});
    for (const Row& r : rows) {
      std::vector<std::string> f{std::to_string(r.n), std::to_string(r.k)};
      if (r.report) {
        f.insert(f.end(), {r.report->h.get_str(), bounds::to_string(r.report->basis), r.report->source,
                           rational_to_string(r.report->points_per_link), rational_to_string(r.report->ratio),
                           decimal_string(r.report->ratio), bool_str(r.report->below_ideal_rate()),
                           rational_to_string(r.report->loss_bound)});
      } else {
        f.insert(f.end(), {"unavailable", "n/a", "n/a", "n/a", "n/a", "n/a", "n/a",
                           rational_to_string(bounds::efficiency_loss_bound(r.n))});
      }
      f.push_back(!r.chain ? "n/a" : r.chain->verdict ? bool_str(*r.chain->verdict) : "unavailable");
      f.push_back(r.k == 2 ? bool_str(bounds::k2_identity(r.n)) : "n/a");
      csv.add(std::move(f));
    }
    emit(csv.str(), a.output, out);
    return kSuccess;
  }

  ordered_json arr = ordered_json::array();
  for (const Row& r : rows) {
    ordered_json j;
    if (r.report) {
      j = to_json(*r.report);
    } else {
      j["n"] = r.n;
      j["k"] = r.k;
      j["h"] = nullptr;
      j["unavailable"] = "no " + a.basis + " value for h(" + std::to_string(r.n) + "," + std::to_string(r.k) + ")";
    }
    if (r.chain) {
      ordered_json c;
      c["verdict"] = r.chain->verdict ? ordered_json(*r.chain->verdict) : ordered_json(nullptr);
      if (!r.chain->verdict) c["unavailable"] = r.chain->unavailable;
      j["chain_next"] = std::move(c);
    }
    if (r.k == 2) j["k2_identity"] = bounds::k2_identity(r.n);
    arr.push_back(std::move(j));
  }
  emit(ordered_json{{"basis", a.basis}, {"rows", std::move(arr)}}.dump(2) + "\n", a.output, out);
  return kSuccess;
}

// verify and solve produce nested reports, so they only speak JSON
void add_output(CLI::App* cmd, Output& o, bool tabular = true) {
  if (tabular)
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  else
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
  cmd->add_option("--out", o.path, "Write to PATH instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-link covering trails of rectangular lattices: bounds, exact verification, small exact solves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Print run metadata to stderr");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Table of lower/upper/exact/conjectured bounds");
  bounds_cmd->add_option("--grid", bounds_args.grid, "Axis lengths, e.g. 3,4,5");
  bounds_cmd->add_option("--n", bounds_args.n, "Hypercube side, N or A..B");
  bounds_cmd->add_option("--k", bounds_args.k, "Hypercube dimension, N or A..B");
  bounds_cmd->add_option("--c", bounds_args.constants, "Constants for the conjectured bound (rationals)");
  add_output(bounds_cmd, bounds_args.output);

  TrailArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Exact coverage check of a trail file");
  verify_cmd->add_option("trail", verify_args.file, "Trail JSON file")->required();
  verify_cmd->add_option("--grid", verify_args.grid, "Expected grid dims");
  add_output(verify_cmd, verify_args.output, false);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Exact line cover and restricted minimum-link trail search");
  solve_cmd->add_option("--grid", solve_args.grid, "Axis lengths")->required();
  solve_cmd->add_option("--max-links", solve_args.max_links, "Largest link count to search");
  solve_cmd->add_option("--node-budget", solve_args.node_budget, "Node limit per search (0 = none)");
  solve_cmd->add_option("--time-budget", solve_args.time_budget, "Seconds per search (0 = none)");
  solve_cmd->add_flag("--deterministic", solve_args.deterministic, "Reproducible witness");
  solve_cmd->add_option("--svg", solve_args.svg, "Also render the witness to PATH");
  add_output(solve_cmd, solve_args.output, false);

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Sweep of n^k/((n-1) h) ratios and adjacent-n comparisons");
  table_cmd->add_option("--n", table_args.n, "N or A..B");
  table_cmd->add_option("--k", table_args.k, "N or A..B");
  table_cmd->add_option("--basis", table_args.basis, "exact, upper or lower")
      ->check(CLI::IsMember({"exact", "upper", "lower"}));
  add_output(table_cmd, table_args.output);

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of a 2-D or 3-D trail");
  render_cmd->add_option("trail", render_args.trail.file, "Trail JSON file")->required();
  render_cmd->add_option("--grid", render_args.trail.grid, "Expected grid dims");
  render_cmd->add_option("--width", render_args.width, "Canvas width in pixels");
  render_cmd->add_option("--height", render_args.height, "Canvas height in pixels");
  render_cmd->add_option("--radius", render_args.radius, "Point radius");
  render_cmd->add_option("--stroke", render_args.stroke, "Link stroke width");
  render_cmd->add_option("--out", render_args.trail.output.path, "Write to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*bounds_cmd) return cmd_bounds(bounds_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
    if (*solve_cmd) return cmd_solve(solve_args, verbose, out, err);
    if (*table_cmd) return cmd_table(table_args, out);
    if (*render_cmd) return cmd_render(render_args, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    // Parse, domain, size and structural errors are all usage-level.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gridtrail::cli
