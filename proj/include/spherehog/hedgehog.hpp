#pragma once

#include <array>
#include <vector>

#include "spherehog/circle_fun.hpp"
#include "spherehog/sphere_fun.hpp"
#include "spherehog/sphere_grid.hpp"

namespace spherehog {

// Envelope of the plane family { x : x . u = h(u) }, u on S^2, for a C^2
// support function h. Needs degree >= 1 to carry translation information.
struct Hedgehog {
  SphereFun support;
  explicit Hedgehog(SphereFun h);
};

// Envelope parameterization x(u) = h(u) u + grad_S h(u); satisfies
// x(u) . u = h(u) and first-order tangency to the plane family.
Vec3 envelope_point(const Hedgehog& h, const Vec3& u);
// Same through a prebuilt jet of the support function, for evaluation loops.
Vec3 envelope_point(const SurfaceJet& support_jet, const Vec3& u);

// Support function of the orthogonal projection onto xi-perp: the restriction
// of the support function to E(xi).
CircleFun project_support(const Hedgehog& h, const Vec3& xi);

// Width in direction u: h(u) + h(-u).
double width(const Hedgehog& h, const Vec3& u);

// Smallest r >= 0 (bisection, within 1e-6) such that f + r has a positive
// semidefinite curvature operator Hess f + (f + r) I everywhere, making it a
// support function of a convex body. The grid seeds the scan; the scan minimum
// is polished off-grid so the bound holds on the continuum.
double convexify_constant(const SphereFun& f, const SphereGrid& grid);

// f + (convexify_constant(f) + margin), as a hedgehog with convex envelope.
Hedgehog convexified(const SphereFun& f, const SphereGrid& grid, double margin = 1.0);

// Support function u -> h(rot^T u) + a . u, refit to the same degree
// (rotations preserve spherical-harmonic degree). rot must be orthogonal
// within 1e-12; det -1 (reflections) is allowed.
Hedgehog transform_support(const Hedgehog& h, const Mat3& rot, const Vec3& a);

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

// Envelope surface sampled over a latitude-longitude grid: 2 pole vertices
// plus (resolution - 1) rows of 2*resolution vertices. Hedgehog envelopes may
// self-intersect; no manifold guarantee. resolution >= 3.
TriangleMesh export_mesh(const Hedgehog& h, int resolution);

}  // namespace spherehog
