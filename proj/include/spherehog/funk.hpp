#pragma once

#include "spherehog/sphere_fun.hpp"
#include "spherehog/sphere_grid.hpp"

namespace spherehog {

// Funk transform: integral of f over the great circle E(xi) with respect to
// arc length, by the n_quad-point trapezoidal rule (exact for trigonometric
// polynomials of degree < n_quad). Requires n_quad >= 2 * degree + 2.
double funk_transform(const SphereFun& f, const Vec3& xi, int n_quad);

struct EvenEqualityReport {
  bool pass = false;
  double max_defect = 0.0;       // max of the two tiers
  double coeff_defect = 0.0;     // max |f_lm - g_lm| over even degrees
  double transform_defect = 0.0; // max over grid of |Funk(f_e) - Funk(g_e)|
};

// Two-tier check that the even parts of f and g agree: (a) even-degree
// coefficient comparison, (b) Funk-transform comparison over the grid
// directions. Passes iff both defects are <= tol.
EvenEqualityReport even_equality_check(const SphereFun& f, const SphereFun& g,
                                       const SphereGrid& grid, double tol);

}  // namespace spherehog
