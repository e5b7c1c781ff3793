#include "hetnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hetnet {

namespace {

// Sites exactly on the boundary count as inside.
constexpr double kBoundarySlack = 1e-9;

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

void Area::validate() const {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw InvalidDimension("area dimensions must be positive and finite");
  }
}

MacroGrid build_macro_grid(const Area& area, double inter_site_distance, GridAnchor anchor) {
  area.validate();
  const double d = inter_site_distance;
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw InvalidDimension("inter-site distance must be positive");
  }
  if (d > area.width || d > area.height) {
    throw InvalidDimension("inter-site distance exceeds the area dimensions");
  }

  const double row_pitch = d * std::sqrt(3.0) / 2.0;
  const Point origin{area.center().x + anchor.dx * d, area.center().y + anchor.dy * d};
  const double slack = kBoundarySlack * std::max(area.width, area.height);

  // Row/column ranges wide enough to cover the area from any anchor inside it.
  const int max_row = static_cast<int>(std::ceil(area.height / row_pitch)) + 2;
  const int max_col = static_cast<int>(std::ceil(area.width / d)) + 2;

  MacroGrid grid;
  grid.inter_site_distance = d;
  for (int row = -max_row; row <= max_row; ++row) {
    const double y = origin.y + row * row_pitch;
    if (y < -slack || y > area.height + slack) continue;
    const double shift = (row - 2 * floor_div(row, 2)) == 1 ? 0.5 * d : 0.0;
    for (int col = -max_col; col <= max_col; ++col) {
      const double x = origin.x + col * d + shift;
      if (x < -slack || x > area.width + slack) continue;
      grid.sites.push_back({std::clamp(x, 0.0, area.width), std::clamp(y, 0.0, area.height)});
      grid.lattice.push_back({row, col});
    }
  }
  if (grid.sites.empty()) {
    throw InvalidDimension("macro grid is empty for this area and anchor");
  }
  return grid;
}

PppLayer sample_ppp(const Area& area, double intensity, RandomStream& rng) {
  area.validate();
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
    throw std::invalid_argument("PPP intensity must be non-negative");
  }
  PppLayer layer;
  layer.intensity = intensity;
  const double mean = intensity * area.size();
  if (mean <= 0.0) return layer;

  std::poisson_distribution<long> count_dist(mean);
  const long count = count_dist(rng);
  std::uniform_real_distribution<double> ux(0.0, area.width);
  std::uniform_real_distribution<double> uy(0.0, area.height);
  layer.points.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    layer.points.push_back({x, y});
  }
  return layer;
}

}  // namespace hetnet
