#pragma once

#include <optional>
#include <vector>

#include "spherehog/congruence.hpp"
#include "spherehog/sphere_fun.hpp"
#include "spherehog/sphere_grid.hpp"

namespace spherehog {

// Per-direction least rotation angle solving the congruence equation on
// E(xi). Directions where the solve failed or the restriction was degenerate
// are marked invalid; their angle slot is meaningless.
struct RotationField {
  SphereGrid grid;
  std::vector<double> angles;      // (-pi, pi], meaningful only where valid
  std::vector<bool> valid;
  std::vector<double> residuals;
  std::vector<bool> multiplicity;  // more than one solution at tolerance

  int valid_count() const;
};

struct LevelSet {
  double target = 0.0;        // 0 or pi
  std::vector<int> members;   // grid direction indices
  double tol_angle = 0.0;
};

struct RegularityReport {
  double max_adjacent_jump = 0.0;     // circular distance, valid pairs
  double median_adjacent_jump = 0.0;
  double oddness_defect = 0.0;        // max circ-dist(phi(-xi), -phi(xi))
  double valid_fraction = 0.0;
  double jump_tol = 0.0;              // threshold used
  bool pass = false;
};

struct GreatCircleFit {
  bool is_great_circle = false;
  std::optional<Vec3> normal;
  double max_plane_distance = 0.0;    // max |xi . normal| over members
  double min_moment_eigenvalue = 0.0; // of (1/N) sum xi xi^T
  double max_angular_gap = 0.0;       // along the fitted circle
};

struct MeridianCoverage {
  double covered_fraction = 0.0;
  int bins = 0;
  int covered_bins = 0;
  std::vector<std::pair<double, double>> gaps;  // empty longitude intervals [lo, hi)
};

// Solves the congruence equation on every grid circle. tol is the per-mode
// coefficient tolerance handed to solve_congruence.
RotationField compute_field(const SphereFun& f, const SphereFun& g, const SphereGrid& grid,
                            double tol = kDefaultCoeffTol);

// Empirical continuity / oddness diagnostics. jump_tol <= 0 selects the
// default threshold 10x the median adjacent jump. Requires >= 90% valid
// directions.
RegularityReport check_field_regularity(const RotationField& field, double jump_tol = 0.0);

// Valid directions within circular distance tol_angle of target (0 or pi).
LevelSet level_set(const RotationField& field, double target, double tol_angle);

// Plane-through-origin fit to the member directions via the second-moment
// matrix. True only when all members lie within fit_tol of the plane and
// cover at least a half turn of the fitted circle. Member sets that fill the
// sphere (smallest moment eigenvalue > 0.1) report false with no normal.
GreatCircleFit is_great_circle(const LevelSet& set, const SphereGrid& grid, double fit_tol);

// Bins members by meridian longitude about the +-u0 axis (bin width = grid
// angular resolution). Members within 1e-9 of +-u0 lie on every meridian.
MeridianCoverage meridian_coverage(const LevelSet& set, const Vec3& u0, const SphereGrid& grid);

}  // namespace spherehog
