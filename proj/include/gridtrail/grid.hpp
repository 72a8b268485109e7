#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gridtrail {

using Coord = std::int64_t;

/// A node of the grid: one integer coordinate per axis.
struct LatticePoint {
  std::vector<Coord> coords;

  std::size_t dimension() const { return coords.size(); }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

std::string to_string(const LatticePoint& p);

/// Default maximum number of points any enumeration may touch. The
/// GRIDTRAIL_POINT_CAP environment variable overrides it.
inline constexpr std::uint64_t kDefaultPointCap = 10'000'000;
std::uint64_t point_cap();

/// The rectangular grid {0..n1-1} x ... x {0..nk-1}.
///
/// Dimensions are stored ascending (nk is the largest). When constructed from
/// an unsorted list the permutation is kept: sorted axis i came from input
/// axis permutation()[i].
class Grid {
 public:
  explicit Grid(std::vector<Coord> dims);

  /// Hypercubic grid P(n, k).
  static Grid hypercube(Coord n, std::size_t k);

  const std::vector<Coord>& dims() const { return dims_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  bool was_permuted() const;

  std::size_t dimension() const { return dims_.size(); }
  Coord largest() const { return dims_.back(); }
  bool is_hypercubic() const;

  /// Product of the dims, saturating at UINT64_MAX.
  std::uint64_t point_count() const;

  bool contains(const LatticePoint& p) const;

  /// Mixed-radix index of p in lexicographic order. p must be contained.
  std::uint64_t index_of(const LatticePoint& p) const;

  std::string to_string() const;

  friend bool operator==(const Grid& a, const Grid& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<Coord> dims_;
  std::vector<std::size_t> permutation_;
};

/// Visits every point once, lexicographic order. Throws SizeError if the
/// grid exceeds `cap`.
void for_each_point(const Grid& g, const std::function<void(const LatticePoint&)>& fn,
                    std::uint64_t cap = point_cap());

std::vector<LatticePoint> enumerate_points(const Grid& g, std::uint64_t cap = point_cap());

/// Parses "3,4,5" into a dims list (any order). Throws ParseError.
std::vector<Coord> parse_dims(const std::string& text);

}  // namespace gridtrail
