#include "gridtrail/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "gridtrail/errors.hpp"

namespace gridtrail {

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) os << ',';
    os << p.coords[i];
  }
  os << ')';
  return os.str();
}

std::uint64_t point_cap() {
  if (const char* env = std::getenv("GRIDTRAIL_POINT_CAP")) {
    std::uint64_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return kDefaultPointCap;
}

Grid::Grid(std::vector<Coord> dims) {
  if (dims.empty()) throw DomainError("grid needs at least one axis");
  for (Coord n : dims) {
    if (n < 1) throw DomainError("grid axis lengths must be positive");
  }
  permutation_.resize(dims.size());
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  std::stable_sort(permutation_.begin(), permutation_.end(),
                   [&](std::size_t a, std::size_t b) { return dims[a] < dims[b]; });
  dims_.reserve(dims.size());
  for (std::size_t i : permutation_) dims_.push_back(dims[i]);
}

Grid Grid::hypercube(Coord n, std::size_t k) { return Grid(std::vector<Coord>(k, n)); }

bool Grid::was_permuted() const {
  for (std::size_t i = 0; i < permutation_.size(); ++i) {
    if (permutation_[i] != i) return true;
  }
  return false;
}

bool Grid::is_hypercubic() const { return dims_.front() == dims_.back(); }

std::uint64_t Grid::point_count() const {
  std::uint64_t count = 1;
  for (Coord n : dims_) {
    const auto un = static_cast<std::uint64_t>(n);
    if (count > std::numeric_limits<std::uint64_t>::max() / un) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= un;
  }
  return count;
}

bool Grid::contains(const LatticePoint& p) const {
  if (p.coords.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (p.coords[i] < 0 || p.coords[i] >= dims_[i]) return false;
  }
  return true;
}

std::uint64_t Grid::index_of(const LatticePoint& p) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    idx = idx * static_cast<std::uint64_t>(dims_[i]) + static_cast<std::uint64_t>(p.coords[i]);
  }
  return idx;
}

std::string Grid::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << ',';
    os << dims_[i];
  }
  return os.str();
}

void for_each_point(const Grid& g, const std::function<void(const LatticePoint&)>& fn,
                    std::uint64_t cap) {
  const std::uint64_t count = g.point_count();
  if (count > cap) {
    throw SizeError("grid " + g.to_string() + " has " + std::to_string(count) +
                    " points, above the cap of " + std::to_string(cap));
  }
  const auto& dims = g.dims();
  LatticePoint p{std::vector<Coord>(dims.size(), 0)};
  for (std::uint64_t n = 0; n < count; ++n) {
    fn(p);
    for (std::size_t axis = dims.size(); axis-- > 0;) {
      if (++p.coords[axis] < dims[axis]) break;
      p.coords[axis] = 0;
    }
  }
}

std::vector<LatticePoint> enumerate_points(const Grid& g, std::uint64_t cap) {
  std::vector<LatticePoint> out;
  if (g.point_count() <= cap) out.reserve(g.point_count());
  for_each_point(g, [&](const LatticePoint& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<Coord> parse_dims(const std::string& text) {
  std::vector<Coord> dims;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    field.erase(0, field.find_first_not_of(" \t"));
    field.erase(field.find_last_not_of(" \t") + 1);
    Coord value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 1) {
      throw ParseError("dims: expected positive integers separated by commas, got '" + text + "'");
    }
    dims.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return dims;
}

}  // namespace gridtrail
