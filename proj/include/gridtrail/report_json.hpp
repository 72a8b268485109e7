#pragma once

#include <json.hpp>

#include "gridtrail/bounds.hpp"
#include "gridtrail/solver.hpp"
#include "gridtrail/verifier.hpp"

namespace gridtrail {

using ordered_json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
ordered_json exact_json(const Integer& v);
/// Rationals as "p/q" strings ("p" when integral).
ordered_json exact_json(const Rational& q);

/// Decimal rendering for human scanning (15 significant digits by default).
std::string decimal_string(const Rational& q, int digits = 15);

ordered_json to_json(const LatticePoint& p);
ordered_json to_json(const Diagnostic& d);
ordered_json to_json(const CoverageReport& r);
ordered_json to_json(const LineCoverResult& r);
ordered_json to_json(const SearchResult& r, const Grid& g);
ordered_json to_json(const bounds::BoundsReport& r);
ordered_json to_json(const bounds::RatioReport& r);

}  // namespace gridtrail
