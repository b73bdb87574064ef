#include "spherehog/hedgehog.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "spherehog/errors.hpp"

namespace spherehog {

Hedgehog::Hedgehog(SphereFun h) : support(std::move(h)) {
  if (support.degree_max() < 1)
    throw invalid_input("Hedgehog: support degree must be >= 1");
}

namespace {

Vec3 envelope_point_jet(const SurfaceJet& jet, const Vec3& u) {
  return jet.value(u) * u + jet.gradient(u);
}

// Local derivative-free refinement of min_curvature_eigenvalue around u0:
// zoom a 5x5 tangent-patch scan, re-centering without shrinking while the
// minimum sits on the patch boundary.
double polish_min_eigenvalue(const SurfaceJet& jet, Vec3 u0, double half_width) {
  double best = jet.min_curvature_eigenvalue(u0);
  for (int iter = 0; iter < 200 && half_width > 1e-9; ++iter) {
    const GreatCircleFrame frame = great_circle_frame(u0);
    Vec3 best_u = u0;
    double best_here = best;
    bool on_boundary = false;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        Vec3 u = u0 + (half_width * a / 2.0) * frame.e1 + (half_width * b / 2.0) * frame.e2;
        u.normalize();
        const double lam = jet.min_curvature_eigenvalue(u);
        if (lam < best_here) {
          best_here = lam;
          best_u = u;
          on_boundary = std::abs(a) == 2 || std::abs(b) == 2;
        }
      }
    if (best_here < best) {
      best = best_here;
      u0 = best_u;
      if (!on_boundary) half_width *= 0.35;
    } else {
      half_width *= 0.35;
    }
  }
  return best;
}

}  // namespace

Vec3 envelope_point(const Hedgehog& h, const Vec3& u) {
  require_unit(u, "envelope_point u");
  return envelope_point_jet(SurfaceJet(h.support), u);
}

CircleFun project_support(const Hedgehog& h, const Vec3& xi) {
  return restrict_to_circle(h.support, xi, h.support.degree_max());
}

double width(const Hedgehog& h, const Vec3& u) {
  require_unit(u, "width u");
  return h.support.eval(u) + h.support.eval(-u);
}

double convexify_constant(const SphereFun& f, const SphereGrid& grid) {
  const SurfaceJet jet(f);
  const int n = grid.size();
  std::vector<double> lam(n);
  detail::parallel_for(n, [&](size_t i) {
    lam[i] = jet.min_curvature_eigenvalue(grid.directions[i]);
  });

  // Seed local refinements from well-separated low points of the scan.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lam[a] < lam[b]; });
  const double min_sep = 3.0 * grid.angular_resolution;
  std::vector<Vec3> seeds;
  for (int idx : order) {
    const Vec3& u = grid.directions[idx];
    bool close = false;
    for (const Vec3& s : seeds)
      if (std::acos(std::clamp(s.dot(u), -1.0, 1.0)) < min_sep) close = true;
    if (!close) seeds.push_back(u);
    if (seeds.size() >= 12) break;
  }

  double min_eig = lam[order.front()];
  for (const Vec3& s : seeds)
    min_eig = std::min(min_eig, polish_min_eigenvalue(jet, s, 2.0 * grid.angular_resolution));

  // Adding r shifts the operator by r I; bisect r until the minimum
  // eigenvalue clears zero, returning the upper (feasible) end.
  double lo = 0.0, hi = std::max(0.0, -min_eig) + 1.0;
  if (min_eig + lo >= 0.0) return 0.0;
  for (int iter = 0; iter < 100 && hi - lo > 1e-7; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (min_eig + mid >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

Hedgehog convexified(const SphereFun& f, const SphereGrid& grid, double margin) {
  const double r = convexify_constant(f, grid);
  return Hedgehog(f + SphereFun::constant(r + margin));
}

Hedgehog transform_support(const Hedgehog& h, const Mat3& rot, const Vec3& a) {
  if ((rot.transpose() * rot - Mat3::Identity()).norm() > 1e-12)
    throw invalid_input("transform_support: matrix is not orthogonal");
  const int L = h.support.degree_max();
  const SphereFun& s = h.support;
  SphereFun moved = sh_project(
      [&](const Vec3& u) { return s.eval(Vec3(rot.transpose() * u).normalized()) + a.dot(u); },
      std::max(L, 1));
  return Hedgehog(std::move(moved));
}

TriangleMesh export_mesh(const Hedgehog& h, int resolution) {
  if (resolution < 3) throw invalid_input("export_mesh: resolution must be >= 3");
  const SurfaceJet jet(h.support);
  const int rows = resolution - 1;   // interior latitude rows
  const int cols = 2 * resolution;   // longitudes

  TriangleMesh mesh;
  mesh.vertices.reserve(2 + size_t(rows) * cols);
  mesh.vertices.push_back(envelope_point_jet(jet, Vec3(0, 0, 1)));
  for (int i = 1; i <= rows; ++i) {
    const double theta = kPi * i / resolution;
    for (int j = 0; j < cols; ++j) {
      const double phi = kTwoPi * j / cols;
      const Vec3 u(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                   std::cos(theta));
      mesh.vertices.push_back(envelope_point_jet(jet, u));
    }
  }
  mesh.vertices.push_back(envelope_point_jet(jet, Vec3(0, 0, -1)));

  const int south = static_cast<int>(mesh.vertices.size()) - 1;
  auto ring = [&](int i, int j) { return 1 + (i - 1) * cols + (j % cols); };
  for (int j = 0; j < cols; ++j) mesh.faces.push_back({0, ring(1, j), ring(1, j + 1)});
  for (int i = 1; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      mesh.faces.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
      mesh.faces.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
    }
  for (int j = 0; j < cols; ++j) mesh.faces.push_back({south, ring(rows, j + 1), ring(rows, j)});
  return mesh;
}

}  // namespace spherehog
