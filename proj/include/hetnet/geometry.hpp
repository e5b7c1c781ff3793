#ifndef HETNET_GEOMETRY_HPP
#define HETNET_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetnet/random.hpp"

namespace hetnet {

/// Distances below this are clamped so that r^-a stays finite.
inline constexpr double kMinDistance = 1.0;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Rectangular study area [0, width] x [0, height], in meters.
struct Area {
  double width = 0.0;
  double height = 0.0;

  double size() const noexcept { return width * height; }
  Point center() const noexcept { return {0.5 * width, 0.5 * height}; }
  bool contains(Point p) const noexcept {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
  void validate() const;
};

class InvalidDimension : public std::invalid_argument {
 public:
  explicit InvalidDimension(const std::string& what) : std::invalid_argument(what) {}
};

/// Position of the lattice origin site relative to the area center, in
/// units of the inter-site distance.
struct GridAnchor {
  double dx = 0.0;
  double dy = 0.0;

  /// Origin site at the area center.
  static GridAnchor centered() noexcept { return {0.0, 0.0}; }
  /// Area center halfway between two site rows. Gives 33 sites on a
  /// 25 km x 25 km area with 5 km spacing.
  static GridAnchor between_rows() noexcept { return {0.0, std::sqrt(3.0) / 4.0}; }
};

/// Offset coordinates of a site: `row` counts rows of pitch d*sqrt(3)/2,
/// `col` counts sites of pitch d within a row; odd rows are shifted by d/2.
struct LatticeIndex {
  int row = 0;
  int col = 0;
};

struct MacroGrid {
  std::vector<Point> sites;
  std::vector<LatticeIndex> lattice;  // parallel to `sites`
  double inter_site_distance = 0.0;
};

/// Realization of a homogeneous Poisson point process over an area.
struct PppLayer {
  double intensity = 0.0;  // points per m^2
  std::vector<Point> points;
};

/// Hexagonal macro lattice clipped to the area (boundary inclusive), sorted
/// row-major by (row, col). Deterministic in its arguments.
MacroGrid build_macro_grid(const Area& area, double inter_site_distance,
                           GridAnchor anchor = GridAnchor::between_rows());

PppLayer sample_ppp(const Area& area, double intensity, RandomStream& rng);

/// Euclidean distance clamped below at kMinDistance.
inline double distance(Point a, Point b) noexcept {
  const double d = std::hypot(a.x - b.x, a.y - b.y);
  return d < kMinDistance ? kMinDistance : d;
}

/// Squared form of `distance`, for comparisons that only need ordering.
inline double distance_squared(Point a, Point b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double d2 = dx * dx + dy * dy;
  return d2 < kMinDistance * kMinDistance ? kMinDistance * kMinDistance : d2;
}

}  // namespace hetnet

#endif  // HETNET_GEOMETRY_HPP
