#pragma once

#include <utility>
#include <vector>

#include "spherehog/rotation_field.hpp"
#include "spherehog/sphere_fun.hpp"
#include "spherehog/sphere_grid.hpp"

namespace spherehog {

struct ReconstructionResult {
  int sign = +1;            // g(u) = f(sign * u) + b . u
  Vec3 b = Vec3::Zero();
  double residual = 0.0;    // sup over the grid of |g - f(sign .) - b . u|, recomputed
  double xi0_fraction = 0.0;   // fraction of valid directions in the 0 level set
  double xipi_fraction = 0.0;  // fraction of valid directions in the pi level set
};

// Common translation witness: y with y . u = a1 . u on xi1-perp and
// y . u = a2 . u on xi2-perp, from a1 - a2 = t xi1 + s xi2. Rejects parallel
// planes and inputs where no common translation exists (solve residual > tol).
Vec3 merge_translations(const Vec3& xi1, const Vec3& a1, const Vec3& xi2, const Vec3& a2,
                        double tol = 1e-8);

// Least-squares b over the grid for g(u) ~ f(sign u) + b . u, and the sup
// residual at that b. A large residual is the signal that the model is wrong;
// no error is raised.
std::pair<Vec3, double> fit_global_translation(const SphereFun& f, const SphereFun& g, int sign,
                                               const SphereGrid& grid);

// Checks candidate = g on the circles w1-perp, w2-perp (sup over sampled
// circle <= tol) and that the best-fit planar translation of g - candidate on
// w3-perp has norm <= tol. The three directions must be non-coplanar
// (|det| >= 1e-6).
bool verify_three_plane(const SphereFun& g, const SphereFun& candidate, const Vec3& w1,
                        const Vec3& w2, const Vec3& w3, double tol);

enum class HalfMembership { xi0, xipi, both, neither };

struct HalvesClassification {
  std::vector<HalfMembership> membership;  // per grid direction
  std::vector<double> residual0;           // best planar-translation residual, sign +1
  std::vector<double> residual_pi;         // same for sign -1
  double xi0_fraction = 0.0;               // includes "both"
  double xipi_fraction = 0.0;
};

// Per direction xi: best planar translation fit of g vs f (sign +1) and of g
// vs f(-.) (sign -1) on the restriction to E(xi); membership by residual <= tol.
HalvesClassification classify_by_halves(const SphereFun& f, const SphereFun& g,
                                        const SphereGrid& grid, double tol);

// End-to-end classifier: even-part check, rotation field, level-set
// dominance (> 50% of valid directions), then the global translation fit with
// the winning sign. Throws hypothesis_violation when the even parts differ or
// when neither level set dominates.
ReconstructionResult classify_and_reconstruct(const SphereFun& f, const SphereFun& g,
                                              const SphereGrid& grid,
                                              double tol = kDefaultCoeffTol);

}  // namespace spherehog
