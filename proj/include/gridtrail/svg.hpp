#pragma once

#include <string>

#include "gridtrail/verifier.hpp"

namespace gridtrail {

enum class Projection { planar, orthographic_3d };

struct RenderSpec {
  Projection projection = Projection::planar;
  int width = 640;
  int height = 640;
  double point_radius = 6;
  double stroke_width = 2;

  /// Planar for k = 2, orthographic for k = 3; DomainError otherwise.
  static RenderSpec for_dimension(std::size_t k);
  /// Throws DomainError unless sizes are positive and the projection fits k.
  void validate(std::size_t k) const;
};

/// Deterministic SVG of a verified trail: grid points as circles (covered
/// filled, uncovered hollow red), links as numbered strokes. Coordinates are
/// converted through a 30-digit decimal approximation.
std::string render_svg(const CoverageReport& report, const RenderSpec& spec);

}  // namespace gridtrail
