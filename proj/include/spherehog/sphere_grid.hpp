#pragma once

#include <utility>
#include <vector>

#include "spherehog/geometry.hpp"

namespace spherehog {

// Direction grid on S^2 with neighbor structure and quadrature weights
// (weights sum to 4pi). Grids built by the factories are antipodally closed
// bit-for-bit and carry the index map xi -> -xi.
struct SphereGrid {
  std::vector<Vec3> directions;
  std::vector<std::pair<int, int>> adjacency;
  std::vector<double> weights;

  std::vector<int> antipode;   // antipode[i] = index of -directions[i]
  double angular_resolution = 0.0;  // median adjacent angle (radians)

  int size() const { return static_cast<int>(directions.size()); }

  // Subdivided icosahedron, 10 * 4^level + 2 unit directions, equal weights.
  // level 4 ~ 2562 directions, level 5 ~ 10242.
  static SphereGrid icosphere(int level);

  // Gauss-Legendre latitudes x uniform longitudes; quadrature exact for
  // spherical polynomials of degree <= 2 * degree_max.
  static SphereGrid gauss_legendre(int degree_max);
};

// Antipode index map for a user-assembled grid (tolerance-based lookup).
// Throws if some direction has no antipodal partner within tol.
std::vector<int> build_antipode_map(const SphereGrid& grid, double tol = 1e-9);

// Median angle between adjacent directions.
double grid_angular_resolution(const SphereGrid& grid);

}  // namespace spherehog
