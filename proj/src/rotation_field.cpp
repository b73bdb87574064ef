#include "spherehog/rotation_field.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "parallel.hpp"
#include "spherehog/errors.hpp"

namespace spherehog {

int RotationField::valid_count() const {
  return static_cast<int>(std::count(valid.begin(), valid.end(), true));
}

RotationField compute_field(const SphereFun& f, const SphereFun& g, const SphereGrid& grid,
                            double tol) {
  if (f.degree_max() != g.degree_max())
    throw invalid_input("compute_field: f and g must have the same degree");
  const int n = grid.size();
  RotationField field;
  field.grid = grid;
  field.angles.assign(n, 0.0);
  field.valid.assign(n, false);
  field.residuals.assign(n, 0.0);
  field.multiplicity.assign(n, false);

  // vector<bool> packs bits, so parallel workers fill byte-wide scratch.
  std::vector<char> valid(n, 0), multiplicity(n, 0);
  const int K = f.degree_max();
  detail::parallel_for(n, [&](size_t i) {
    const GreatCircleFrame frame = great_circle_frame(grid.directions[i]);
    const CircleFun fc = restrict_to_circle(f, frame, K);
    const CircleFun gc = restrict_to_circle(g, frame, K);
    if (circle_is_degenerate(fc, tol)) return;  // invalid: infinitely symmetric restriction
    const auto sols = solve_congruence(fc, gc, tol);
    if (sols.empty()) return;
    field.angles[i] = sols.front().angle;
    field.residuals[i] = sols.front().residual;
    multiplicity[i] = sols.size() > 1;
    valid[i] = 1;
  });
  for (int i = 0; i < n; ++i) {
    field.valid[i] = valid[i] != 0;
    field.multiplicity[i] = multiplicity[i] != 0;
  }
  return field;
}

RegularityReport check_field_regularity(const RotationField& field, double jump_tol) {
  const auto& grid = field.grid;
  const int n = grid.size();
  if (n == 0) throw invalid_input("check_field_regularity: empty field");

  RegularityReport report;
  report.valid_fraction = static_cast<double>(field.valid_count()) / n;
  if (report.valid_fraction < 0.9)
    throw invalid_input("check_field_regularity: fewer than 90% valid directions");

  std::vector<double> jumps;
  jumps.reserve(grid.adjacency.size());
  for (const auto& [a, b] : grid.adjacency)
    if (field.valid[a] && field.valid[b])
      jumps.push_back(circular_distance(field.angles[a], field.angles[b]));
  if (!jumps.empty()) {
    report.max_adjacent_jump = *std::max_element(jumps.begin(), jumps.end());
    const size_t mid = jumps.size() / 2;
    std::nth_element(jumps.begin(), jumps.begin() + mid, jumps.end());
    report.median_adjacent_jump = jumps[mid];
  }

  const std::vector<int> antipode =
      grid.antipode.empty() ? build_antipode_map(grid) : grid.antipode;
  for (int i = 0; i < n; ++i) {
    const int j = antipode[i];
    if (j < 0 || !field.valid[i] || !field.valid[j]) continue;
    report.oddness_defect =
        std::max(report.oddness_defect, circular_distance(field.angles[j], -field.angles[i]));
  }

  report.jump_tol = jump_tol > 0.0 ? jump_tol : 10.0 * report.median_adjacent_jump;
  report.pass = report.max_adjacent_jump <= report.jump_tol;
  return report;
}

LevelSet level_set(const RotationField& field, double target, double tol_angle) {
  if (target != 0.0 && target != kPi)
    throw invalid_input("level_set: target must be 0 or pi");
  LevelSet set;
  set.target = target;
  set.tol_angle = tol_angle;
  for (int i = 0; i < field.grid.size(); ++i)
    if (field.valid[i] && circular_distance(field.angles[i], target) <= tol_angle)
      set.members.push_back(i);
  return set;
}

GreatCircleFit is_great_circle(const LevelSet& set, const SphereGrid& grid, double fit_tol) {
  if (set.members.size() < 3) throw invalid_input("is_great_circle: need at least 3 members");

  GreatCircleFit fit;
  Mat3 moment = Mat3::Zero();
  for (int i : set.members) {
    const Vec3& d = grid.directions[i];
    moment += d * d.transpose();
  }
  moment /= static_cast<double>(set.members.size());

  Eigen::SelfAdjointEigenSolver<Mat3> eig(moment);
  fit.min_moment_eigenvalue = eig.eigenvalues()(0);
  // Members spread over the whole sphere: no circle to speak of.
  if (fit.min_moment_eigenvalue > 0.1) return fit;

  const Vec3 normal = eig.eigenvectors().col(0);
  for (int i : set.members)
    fit.max_plane_distance = std::max(fit.max_plane_distance,
                                      std::abs(grid.directions[i].dot(normal)));

  // Angular coverage along the fitted circle: reject member sets inside a
  // half-circle (largest gap > pi).
  const GreatCircleFrame frame = great_circle_frame(normal);
  std::vector<double> angles;
  angles.reserve(set.members.size());
  for (int i : set.members) {
    const Vec3& d = grid.directions[i];
    angles.push_back(std::atan2(d.dot(frame.e2), d.dot(frame.e1)));
  }
  std::sort(angles.begin(), angles.end());
  double max_gap = angles.front() + kTwoPi - angles.back();
  for (size_t i = 1; i < angles.size(); ++i) max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
  fit.max_angular_gap = max_gap;

  if (fit.max_plane_distance <= fit_tol && max_gap <= kPi) {
    fit.is_great_circle = true;
    fit.normal = normal;
  }
  return fit;
}

MeridianCoverage meridian_coverage(const LevelSet& set, const Vec3& u0, const SphereGrid& grid) {
  require_unit(u0, "meridian_coverage u0");
  const double resolution =
      grid.angular_resolution > 0.0 ? grid.angular_resolution : grid_angular_resolution(grid);
  if (resolution <= 0.0) throw invalid_input("meridian_coverage: grid has no resolution");

  MeridianCoverage cov;
  cov.bins = std::max(4, static_cast<int>(std::ceil(kTwoPi / resolution)));
  std::vector<bool> hit(cov.bins, false);

  const GreatCircleFrame frame = great_circle_frame(u0);
  for (int i : set.members) {
    const Vec3& d = grid.directions[i];
    const double perp = std::hypot(d.dot(frame.e1), d.dot(frame.e2));
    if (perp < 1e-9) {
      // On the axis: every meridian passes through the poles.
      std::fill(hit.begin(), hit.end(), true);
      break;
    }
    double t = std::atan2(d.dot(frame.e2), d.dot(frame.e1));
    if (t < 0.0) t += kTwoPi;
    const int bin = std::min(cov.bins - 1, static_cast<int>(t / kTwoPi * cov.bins));
    hit[bin] = true;
  }

  cov.covered_bins = static_cast<int>(std::count(hit.begin(), hit.end(), true));
  cov.covered_fraction = static_cast<double>(cov.covered_bins) / cov.bins;

  int run_start = -1;
  for (int b = 0; b <= cov.bins; ++b) {
    const bool empty = b < cov.bins && !hit[b];
    if (empty && run_start < 0) run_start = b;
    if (!empty && run_start >= 0) {
      cov.gaps.emplace_back(kTwoPi * run_start / cov.bins, kTwoPi * b / cov.bins);
      run_start = -1;
    }
  }
  // Merge a wrap-around gap.
  if (cov.gaps.size() >= 2 && cov.gaps.front().first == 0.0 &&
      cov.gaps.back().second == kTwoPi) {
    cov.gaps.back().second = cov.gaps.front().second + kTwoPi;
    cov.gaps.erase(cov.gaps.begin());
  }
  return cov;
}

}  // namespace spherehog
