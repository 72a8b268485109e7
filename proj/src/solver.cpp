#include "gridtrail/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <unordered_map>

#include "gridtrail/errors.hpp"
#include "gridtrail/verifier.hpp"

namespace gridtrail {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::optimal_restricted: return "optimal_restricted";
    case SearchStatus::upper_bound_only: return "upper_bound_only";
    case SearchStatus::infeasible_at_budget: return "infeasible_at_budget";
  }
  return "unknown";
}

namespace {

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t n, bool filled = false) : words_((n + 63) / 64, 0) {
    if (filled) {
      for (std::size_t i = 0; i < n; ++i) set(i);
    }
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count_and(const PointSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  void subtract(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return static_cast<std::size_t>(-1);
  }

 private:
  std::vector<std::uint64_t> words_;
};

enum Side { kLow = 0, kHigh = 1 };

// Lattice lines of a grid in solver order (descending size, then canonical
// key), with every pairwise intersection precomputed. Crossing points on a
// line are identified by rank: the index of their parameter t (point =
// base + t * direction) in the sorted list of all crossing parameters of
// that line.
class LineSystem {
 public:
  explicit LineSystem(const Grid& g) : grid_(g), points_(enumerate_points(g)) {
    lines_ = enumerate_lines(g);
    std::stable_sort(lines_.begin(), lines_.end(),
                     [](const CandidateLine& a, const CandidateLine& b) { return a.size() > b.size(); });
    const std::size_t n_lines = lines_.size();
    ids_.resize(n_lines);
    masks_.assign(n_lines, PointSet(points_.size()));
    lines_through_.resize(points_.size());
    for (std::size_t l = 0; l < n_lines; ++l) {
      for (const LatticePoint& p : lines_[l].covered) {
        const auto id = static_cast<std::uint32_t>(g.index_of(p));
        ids_[l].push_back(id);
        masks_[l].set(id);
        lines_through_[id].push_back(l);
      }
    }
    compute_crossings();
  }

  const Grid& grid() const { return grid_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<CandidateLine>& lines() const { return lines_; }
  std::size_t line_count() const { return lines_.size(); }
  const PointSet& mask(std::size_t l) const { return masks_[l]; }
  const std::vector<std::size_t>& lines_through(std::size_t point) const { return lines_through_[point]; }

  int crossing_rank(std::size_t on, std::size_t with) const { return rank_[on * lines_.size() + with]; }
  const Rational& param(std::size_t line, int rank) const { return params_[line][static_cast<std::size_t>(rank)]; }

  // Grid points on the closed segment between two crossings.
  template <class Fn>
  void for_segment(std::size_t line, int r1, int r2, Fn&& fn) const {
    const int lo = std::min(r1, r2);
    const int hi = std::max(r1, r2);
    visit(line, ceils_[line][static_cast<std::size_t>(lo)], floors_[line][static_cast<std::size_t>(hi)], fn);
  }

  // Grid points on the ray from a crossing towards decreasing (kLow) or
  // increasing (kHigh) parameter.
  template <class Fn>
  void for_ray(std::size_t line, int r, int side, Fn&& fn) const {
    const auto idx = static_cast<std::size_t>(r);
    if (side == kLow) {
      visit(line, 0, floors_[line][idx], fn);
    } else {
      visit(line, ceils_[line][idx], static_cast<long>(ids_[line].size()) - 1, fn);
    }
  }

  // Endpoint of a ray from parameter p: the farthest grid point on that side,
  // or one step away when the ray holds no grid point beyond p.
  Rational far_param(std::size_t line, const Rational& p, int side) const {
    const Rational last(static_cast<long>(ids_[line].size()) - 1);
    if (side == kLow) return Rational(0) < p ? Rational(0) : Rational(p - 1);
    return last > p ? last : Rational(p + 1);
  }

  Vertex vertex_at(std::size_t line, const Rational& t) const {
    const CandidateLine& l = lines_[line];
    Vertex v;
    for (std::size_t a = 0; a < l.direction.size(); ++a) {
      Rational c = Rational(static_cast<long>(l.base.coords[a])) + t * Rational(static_cast<long>(l.direction[a]));
      c.canonicalize();
      v.coords.emplace_back(c);
    }
    return v;
  }

  // Lowest-index line of each orbit under the grid's symmetry group (axis
  // permutations between equal-length axes, and reflections).
  std::vector<bool> orbit_representatives() const;

 private:
  template <class Fn>
  void visit(std::size_t line, long tmin, long tmax, Fn&& fn) const {
    const long c = static_cast<long>(ids_[line].size());
    tmin = std::max(tmin, 0L);
    tmax = std::min(tmax, c - 1);
    for (long t = tmin; t <= tmax; ++t) fn(ids_[line][static_cast<std::size_t>(t)]);
  }

  void compute_crossings();

  Grid grid_;
  std::vector<LatticePoint> points_;
  std::vector<CandidateLine> lines_;
  std::vector<std::vector<std::uint32_t>> ids_;
  std::vector<PointSet> masks_;
  std::vector<std::vector<std::size_t>> lines_through_;
  std::vector<int> rank_;
  std::vector<std::vector<Rational>> params_;
  std::vector<std::vector<long>> floors_;
  std::vector<std::vector<long>> ceils_;
};

void LineSystem::compute_crossings() {
  const std::size_t n = lines_.size();
  const std::size_t k = grid_.dimension();
  rank_.assign(n * n, -1);
  std::vector<Rational> raw(n * n);
  std::vector<bool> meets(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b1 = lines_[i].base.coords;
    const auto& d1 = lines_[i].direction;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& b2 = lines_[j].base.coords;
      const auto& d2 = lines_[j].direction;
      // Solve b1 + s d1 = b2 + t d2 on a coordinate pair with nonzero minor.
      std::int64_t det = 0, s_num = 0, t_num = 0;
      for (std::size_t p = 0; p < k && det == 0; ++p) {
        for (std::size_t q = p + 1; q < k && det == 0; ++q) {
          det = d1[p] * d2[q] - d1[q] * d2[p];
          if (det != 0) {
            const std::int64_t rp = b2[p] - b1[p];
            const std::int64_t rq = b2[q] - b1[q];
            s_num = rp * d2[q] - rq * d2[p];
            t_num = d1[q] * rp - d1[p] * rq;
          }
        }
      }
      if (det == 0) continue;  // parallel
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a) {
        ok = det * b1[a] + s_num * d1[a] == det * b2[a] + t_num * d2[a];
      }
      if (!ok) continue;  // skew
      meets[i * n + j] = meets[j * n + i] = true;
      raw[i * n + j] = Rational(s_num, det);
      raw[j * n + i] = Rational(t_num, det);
      raw[i * n + j].canonicalize();
      raw[j * n + i].canonicalize();
    }
  }
  params_.resize(n);
  floors_.resize(n);
  ceils_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& ps = params_[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (meets[i * n + j]) ps.push_back(raw[i * n + j]);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (const Rational& p : ps) {
      mpz_class f, c;
      mpz_fdiv_q(f.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
      mpz_cdiv_q(c.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
      floors_[i].push_back(f.get_si());
      ceils_[i].push_back(c.get_si());
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!meets[i * n + j]) continue;
      const auto it = std::lower_bound(ps.begin(), ps.end(), raw[i * n + j]);
      rank_[i * n + j] = static_cast<int>(it - ps.begin());
    }
  }
}

std::vector<bool> LineSystem::orbit_representatives() const {
  const std::size_t k = grid_.dimension();
  const auto& dims = grid_.dims();
  std::map<std::vector<std::uint32_t>, std::size_t> by_points;
  for (std::size_t l = 0; l < lines_.size(); ++l) by_points.emplace(ids_[l], l);

  std::vector<std::size_t> orbit_min(lines_.size());
  std::iota(orbit_min.begin(), orbit_min.end(), std::size_t{0});
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  LatticePoint image{std::vector<Coord>(k)};
  do {
    bool preserves = true;
    for (std::size_t a = 0; a < k; ++a) preserves = preserves && dims[perm[a]] == dims[a];
    if (!preserves) continue;
    for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << k); ++flips) {
      for (std::size_t l = 0; l < lines_.size(); ++l) {
        std::vector<std::uint32_t> mapped;
        for (const LatticePoint& p : lines_[l].covered) {
          for (std::size_t a = 0; a < k; ++a) {
            const Coord c = p.coords[perm[a]];
            image.coords[a] = (flips >> a) & 1U ? dims[a] - 1 - c : c;
          }
          mapped.push_back(static_cast<std::uint32_t>(grid_.index_of(image)));
        }
        std::sort(mapped.begin(), mapped.end());
        const std::size_t other = by_points.at(mapped);
        orbit_min[l] = std::min(orbit_min[l], other);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> rep(lines_.size());
  for (std::size_t l = 0; l < lines_.size(); ++l) rep[l] = orbit_min[l] == l;
  return rep;
}

class Deadline {
 public:
  explicit Deadline(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; true once either limit is passed.
  bool tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > budget_.node_limit) return true;
    if (budget_.time_limit_seconds > 0 && (nodes_ & 255U) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.time_limit_seconds) return true;
    }
    return false;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

class TrailSearch {
 public:
  TrailSearch(const LineSystem& sys, std::size_t max_links, const TrailSearchOptions& opt)
      : sys_(sys), max_links_(max_links), opt_(opt), deadline_(opt.budget), best_(max_links + 1) {
    scratch_.assign(max_links + 3, PointSet(sys.points().size()));
    next_.assign(max_links + 3, PointSet(sys.points().size()));
  }

  SearchResult run() {
    SearchResult result;
    const std::size_t n_points = sys_.points().size();
    const PointSet all(n_points, true);
    global_lb_ = std::max<std::size_t>(opt_.lower_bound_hint, 1);
    while (global_lb_ <= max_links_ && !feasible(all, global_lb_)) ++global_lb_;
    result.lower_bound_used = global_lb_;
    // Iterative deepening on the link count: the first level with a
    // covering is optimal, and its witness is the first in candidate order.
    // Failure memo entries stay valid from one level to the next.
    const std::vector<bool> reps = opt_.symmetry_reduction ? sys_.orbit_representatives()
                                                           : std::vector<bool>(sys_.line_count(), true);
    for (std::size_t limit = global_lb_; limit <= max_links_ && !best_trail_ && !stop_; ++limit) {
      best_ = limit + 1;
      global_lb_ = limit;
      for (std::size_t l = 0; l < sys_.line_count() && !stop_; ++l) {
        if (!reps[l]) continue;
        lines_ = {l};
        entry_ = {-1};
        dfs(all);
      }
    }
    result.nodes_expanded = deadline_.nodes();
    result.budget_exhausted = exhausted_;
    if (best_trail_) {
      result.best_trail = best_trail_;
      result.links = best_;
      result.status = exhausted_ ? SearchStatus::upper_bound_only : SearchStatus::optimal_restricted;
    } else {
      result.status = SearchStatus::infeasible_at_budget;
    }
    return result;
  }

 private:
  struct Segment {
    std::size_t line;
    int lo, hi;
    bool operator==(const Segment&) const = default;
  };

  // Can r more links cover u? Links on one line share that line's points,
  // so r links cover at most the r largest |line & u| values (plus one
  // point for a final single-point link).
  bool feasible(const PointSet& u, std::size_t r) const {
    const std::size_t need = u.count();
    if (need == 0) return true;
    if (r == 0) return false;
    if (r >= need) return true;
    counts_.clear();
    for (std::size_t l = 0; l < sys_.line_count(); ++l) counts_.push_back(sys_.mask(l).count_and(u));
    counts_.push_back(1);
    const std::size_t take = std::min(r, counts_.size());
    std::partial_sort(counts_.begin(), counts_.begin() + static_cast<long>(take), counts_.end(), std::greater<>());
    std::size_t sum = 0;
    for (std::size_t i = 0; i < take; ++i) sum += counts_[i];
    return sum >= need;
  }

  void dfs(const PointSet& u) {
    if (stop_) return;
    if (deadline_.tick()) {
      stop_ = exhausted_ = true;
      return;
    }
    const std::size_t d = lines_.size();
    const std::size_t cur = lines_.back();
    if (best_ <= d || !feasible(u, best_ - d)) return;

    // Subtrees that failed without path-dependent pruning fail again from
    // the same state with no more links to spend.
    std::string key;
    const bool memo = d >= 2 && opt_.memoize_failures;
    if (memo) {
      key = state_key(u, cur, entry_.back());
      const auto it = failed_.find(key);
      if (it != failed_.end() && it->second >= best_ - d) return;
    }
    const std::uint64_t taint_before = taint_;
    const std::size_t best_before = best_;
    explore(u);
    if (memo && !stop_ && taint_ == taint_before && best_ == best_before && failed_.size() < kMemoCap) {
      auto& r = failed_[key];
      r = std::max(r, best_ - d);
    }
  }

  static std::string state_key(const PointSet& u, std::size_t line, int entry) {
    std::string k(reinterpret_cast<const char*>(u.words().data()), u.words().size() * sizeof(std::uint64_t));
    const std::uint32_t tail[2] = {static_cast<std::uint32_t>(line), static_cast<std::uint32_t>(entry)};
    k.append(reinterpret_cast<const char*>(tail), sizeof tail);
    return k;
  }

  void explore(const PointSet& u) {
    const std::size_t d = lines_.size();
    const std::size_t cur = lines_.back();
    PointSet& tmp = scratch_[d];
    auto clear = [&](std::uint32_t id) { tmp.reset(id); };
    if (d == 1) {
      tmp = u;
      tmp.subtract(sys_.mask(cur));
      if (tmp.empty() && record(1, -1, std::nullopt)) return;
      if (tmp.count() == 1 && 2 < best_ && record(2, -1, tmp.first())) return;
    } else {
      const int e = entry_.back();
      for (int side : {kLow, kHigh}) {
        tmp = u;
        sys_.for_ray(cur, e, side, clear);
        if (tmp.empty() && record(d, side, std::nullopt)) return;
      }
      if (d + 1 < best_) {
        for (int side : {kLow, kHigh}) {
          tmp = u;
          sys_.for_ray(cur, e, side, clear);
          if (tmp.count() != 1) continue;
          const std::size_t q = tmp.first();
          if (!sys_.mask(cur).test(q) && record(d + 1, side, q)) return;
        }
      }
    }
    if (d + 1 >= best_) return;

    PointSet& next = next_[d];
    auto drop = [&](std::uint32_t id) { next.reset(id); };
    for (std::size_t j = 0; j < sys_.line_count(); ++j) {
      if (j == cur) continue;
      const int rc = sys_.crossing_rank(cur, j);
      if (rc < 0) continue;
      const int rj = sys_.crossing_rank(j, cur);
      if (d == 1) {
        for (int side : {kLow, kHigh}) {
          next = u;
          sys_.for_ray(cur, rc, side, drop);
          lines_.push_back(j);
          entry_.push_back(rj);
          first_side_ = side;
          dfs(next);
          lines_.pop_back();
          entry_.pop_back();
          if (stop_ || d + 1 >= best_) return;
        }
      } else {
        const int e = entry_.back();
        if (rc == e) continue;
        const Segment seg{cur, std::min(e, rc), std::max(e, rc)};
        if (std::find(used_.begin(), used_.end(), seg) != used_.end()) {
          ++taint_;
          continue;
        }
        next = u;
        sys_.for_segment(cur, e, rc, drop);
        used_.push_back(seg);
        lines_.push_back(j);
        entry_.push_back(rj);
        dfs(next);
        lines_.pop_back();
        entry_.pop_back();
        used_.pop_back();
        if (stop_ || d + 1 >= best_) return;
      }
    }
  }

  Trail build_trail(int last_side, std::optional<std::size_t> extra) const {
    std::vector<Vertex> v;
    const std::size_t d = lines_.size();
    const std::size_t l0 = lines_.front();
    if (d == 1) {
      const auto c = static_cast<long>(sys_.lines()[l0].size());
      v.push_back(sys_.vertex_at(l0, Rational(0)));
      v.push_back(sys_.vertex_at(l0, Rational(c - 1)));
    } else {
      const Rational& p1 = sys_.param(l0, sys_.crossing_rank(l0, lines_[1]));
      v.push_back(sys_.vertex_at(l0, sys_.far_param(l0, p1, first_side_)));
      for (std::size_t j = 1; j < d; ++j) {
        v.push_back(sys_.vertex_at(lines_[j], sys_.param(lines_[j], entry_[j])));
      }
      const std::size_t last = lines_.back();
      v.push_back(sys_.vertex_at(last, sys_.far_param(last, sys_.param(last, entry_.back()), last_side)));
    }
    if (extra) v.push_back(Vertex::from_point(sys_.points()[*extra]));
    Trail t{std::move(v), false};
    t.is_cycle = t.vertices.front() == t.vertices.back();
    return t;
  }

  bool record(std::size_t total, int last_side, std::optional<std::size_t> extra) {
    if (total >= best_) return false;
    Trail t = build_trail(last_side, extra);
    if (has_errors(validate_trail(t))) {
      ++taint_;
      return false;
    }
    best_ = total;
    best_trail_ = std::move(t);
    if (best_ <= global_lb_) stop_ = true;
    return true;
  }

  const LineSystem& sys_;
  std::size_t max_links_;
  TrailSearchOptions opt_;
  Deadline deadline_;

  std::size_t best_;
  std::optional<Trail> best_trail_;
  std::size_t global_lb_ = 1;
  bool stop_ = false;
  bool exhausted_ = false;

  std::vector<std::size_t> lines_;
  std::vector<int> entry_;
  int first_side_ = kLow;
  std::vector<Segment> used_;
  std::vector<PointSet> scratch_;
  std::vector<PointSet> next_;
  mutable std::vector<std::size_t> counts_;

  static constexpr std::size_t kMemoCap = 8'000'000;
  std::unordered_map<std::string, std::size_t> failed_;
  std::uint64_t taint_ = 0;
};

}  // namespace

SearchResult min_covering_trail(const Grid& g, std::size_t max_links, const TrailSearchOptions& options) {
  if (g.point_count() == 1) {
    // Nothing to connect: zero links, no trail.
    SearchResult r;
    r.status = SearchStatus::optimal_restricted;
    return r;
  }
  const LineSystem sys(g);
  return TrailSearch(sys, max_links, options).run();
}

namespace {

class LineCoverSearch {
 public:
  LineCoverSearch(const LineSystem& sys, const Budget& budget) : sys_(sys), deadline_(budget) {}

  LineCoverResult run() {
    const PointSet all(sys_.points().size(), true);
    greedy(all);
    lower_ = lower_bound(all);
    if (best_.size() > lower_) {
      std::vector<std::size_t> chosen;
      search(all, chosen);
    }
    LineCoverResult r;
    r.status = exhausted_ ? SearchStatus::upper_bound_only : SearchStatus::optimal_restricted;
    r.size = best_.size();
    r.nodes_expanded = deadline_.nodes();
    for (std::size_t c : best_) {
      if (c < sys_.line_count()) {
        r.lines.push_back(sys_.lines()[c]);
      } else {
        r.singletons.push_back(sys_.points()[c - sys_.line_count()]);
      }
    }
    std::sort(r.singletons.begin(), r.singletons.end());
    return r;
  }

 private:
  // Choices are line indices, or line_count() + point id for a singleton.
  std::size_t lower_bound(const PointSet& u) const {
    const std::size_t need = u.count();
    if (need == 0) return 0;
    std::size_t best_cov = 1;
    for (std::size_t l = 0; l < sys_.line_count(); ++l) best_cov = std::max(best_cov, sys_.mask(l).count_and(u));
    return (need + best_cov - 1) / best_cov;
  }

  void greedy(PointSet u) {
    while (!u.empty()) {
      std::size_t pick = 0, cov = 0;
      for (std::size_t l = 0; l < sys_.line_count(); ++l) {
        const std::size_t c = sys_.mask(l).count_and(u);
        if (c > cov) {
          cov = c;
          pick = l;
        }
      }
      if (cov >= 2) {
        best_.push_back(pick);
        u.subtract(sys_.mask(pick));
      } else {
        const std::size_t p = u.first();
        best_.push_back(sys_.line_count() + p);
        u.reset(p);
      }
    }
  }

  void search(const PointSet& u, std::vector<std::size_t>& chosen) {
    if (stop_) return;
    if (deadline_.tick()) {
      stop_ = exhausted_ = true;
      return;
    }
    if (u.empty()) {
      if (chosen.size() < best_.size()) {
        best_ = chosen;
        if (best_.size() <= lower_) stop_ = true;
      }
      return;
    }
    if (chosen.size() + lower_bound(u) >= best_.size()) return;
    const std::size_t p = u.first();
    PointSet next;
    for (std::size_t l : sys_.lines_through(p)) {
      next = u;
      next.subtract(sys_.mask(l));
      chosen.push_back(l);
      search(next, chosen);
      chosen.pop_back();
      if (stop_) return;
    }
    next = u;
    next.reset(p);
    chosen.push_back(sys_.line_count() + p);
    search(next, chosen);
    chosen.pop_back();
  }

  const LineSystem& sys_;
  Deadline deadline_;
  std::vector<std::size_t> best_;
  std::size_t lower_ = 0;
  bool stop_ = false;
  bool exhausted_ = false;
};

class MaxChain {
 public:
  MaxChain(const LineSystem& sys, std::size_t m, std::uint64_t limit) : sys_(sys), m_(m), limit_(limit) {
    for (std::size_t l = 0; l < sys.line_count(); ++l) longest_ = std::max(longest_, sys.lines()[l].size());
  }

  std::size_t run() {
    if (m_ == 1 || sys_.line_count() == 0) return longest_;
    const PointSet none(sys_.points().size());
    for (std::size_t l = 0; l < sys_.line_count(); ++l) {
      lines_ = {l};
      entry_ = {-1};
      extend(none);
    }
    return best_;
  }

 private:
  void score(std::size_t covered) {
    if (limit_ && ++evaluations_ > limit_) {
      throw ResourceError("max_points_m_links: more than " + std::to_string(limit_) + " chains to score");
    }
    best_ = std::max(best_, covered);
  }

  void extend(const PointSet& covered) {
    const std::size_t d = lines_.size();
    const std::size_t cur = lines_.back();
    if (covered.count() + (m_ - d + 1) * longest_ <= best_) return;
    PointSet next;
    auto add = [&](std::uint32_t id) { next.set(id); };
    if (d == m_) {
      for (int side : {kLow, kHigh}) {
        next = covered;
        sys_.for_ray(cur, entry_.back(), side, add);
        score(next.count());
      }
      return;
    }
    for (std::size_t j = 0; j < sys_.line_count(); ++j) {
      if (j == cur) continue;
      const int rc = sys_.crossing_rank(cur, j);
      if (rc < 0) continue;
      if (d > 1 && rc == entry_.back()) continue;
      const int rj = sys_.crossing_rank(j, cur);
      for (int side : {kLow, kHigh}) {
        next = covered;
        if (d == 1) {
          sys_.for_ray(cur, rc, side, add);
        } else {
          if (side == kHigh) break;
          sys_.for_segment(cur, entry_.back(), rc, add);
        }
        lines_.push_back(j);
        entry_.push_back(rj);
        extend(next);
        lines_.pop_back();
        entry_.pop_back();
      }
    }
  }

  const LineSystem& sys_;
  std::size_t m_;
  std::uint64_t limit_;
  std::uint64_t evaluations_ = 0;
  std::size_t longest_ = 0;
  std::size_t best_ = 0;
  std::vector<std::size_t> lines_;
  std::vector<int> entry_;
};

}  // namespace

LineCoverResult min_line_cover(const Grid& g, const Budget& budget) {
  const LineSystem sys(g);
  return LineCoverSearch(sys, budget).run();
}

std::size_t max_points_m_links(const Grid& g, std::size_t m, std::uint64_t evaluation_limit) {
  if (m == 0) throw DomainError("max_points_m_links: m must be at least 1");
  const LineSystem sys(g);
  return MaxChain(sys, m, evaluation_limit).run();
}

}  // namespace gridtrail
