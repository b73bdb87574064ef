#include "spherehog/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "parallel.hpp"
#include "spherehog/errors.hpp"
#include "spherehog/funk.hpp"

namespace spherehog {

namespace {

// Best-fit linear part a (a . u on the circle) and the sup norm of what is
// left after removing it.
std::pair<Vec2, double> strip_linear(const CircleFun& d) {
  const std::complex<double> c1 = d.mode(1);
  const Vec2 a(2.0 * c1.real(), -2.0 * c1.imag());
  auto coeffs = d.coeffs();
  const int K = d.num_modes();
  if (K >= 1) {
    coeffs[K + 1] = 0.0;
    coeffs[K - 1] = 0.0;
  }
  const CircleFun stripped(d.frame(), std::move(coeffs));
  return {a, stripped.sup_norm()};
}

CircleFun difference(const CircleFun& a, const CircleFun& b) {
  auto coeffs = a.coeffs();
  for (int k = -a.num_modes(); k <= a.num_modes(); ++k)
    coeffs[a.num_modes() + k] -= b.mode(k);
  return CircleFun(a.frame(), std::move(coeffs));
}

// Restriction of f(-u) to the same circle: -u(theta) = u(theta + pi), so the
// modes pick up (-1)^k.
CircleFun antipodal_restriction(const CircleFun& fc) {
  auto coeffs = fc.coeffs();
  const int K = fc.num_modes();
  for (int k = -K; k <= K; ++k)
    if (k % 2 != 0) coeffs[K + k] = -coeffs[K + k];
  return CircleFun(fc.frame(), std::move(coeffs));
}

}  // namespace

Vec3 merge_translations(const Vec3& xi1, const Vec3& a1, const Vec3& xi2, const Vec3& a2,
                        double tol) {
  require_unit(xi1, "merge_translations xi1");
  require_unit(xi2, "merge_translations xi2");
  if (std::abs(a1.dot(xi1)) > 1e-9 || std::abs(a2.dot(xi2)) > 1e-9)
    throw invalid_input("merge_translations: a_i must lie in the plane of xi_i");
  if (xi1.cross(xi2).norm() < 1e-9)
    throw invalid_input("merge_translations: planes are parallel");

  // a1 - a2 = t xi1 + s xi2
  Eigen::Matrix<double, 3, 2> basis;
  basis.col(0) = xi1;
  basis.col(1) = xi2;
  const Vec3 rhs = a1 - a2;
  const Eigen::Vector2d ts = basis.colPivHouseholderQr().solve(rhs);
  if ((basis * ts - rhs).norm() > tol)
    throw hypothesis_violation("merge_translations: no common translation exists");
  return a1 - ts(0) * xi1;
}

std::pair<Vec3, double> fit_global_translation(const SphereFun& f, const SphereFun& g, int sign,
                                               const SphereGrid& grid) {
  if (sign != 1 && sign != -1) throw invalid_input("fit_global_translation: sign must be +-1");
  const SphereFun diff = g - (sign > 0 ? f : f.antipodal());

  Mat3 moment = Mat3::Zero();
  Vec3 rhs = Vec3::Zero();
  const int n = grid.size();
  std::vector<double> values(n);
  detail::parallel_for(n, [&](size_t i) { values[i] = diff.eval(grid.directions[i]); });
  for (int i = 0; i < n; ++i) {
    const Vec3& u = grid.directions[i];
    moment += grid.weights[i] * u * u.transpose();
    rhs += grid.weights[i] * values[i] * u;
  }
  const Vec3 b = moment.ldlt().solve(rhs);

  double sup = 0.0;
  for (int i = 0; i < n; ++i)
    sup = std::max(sup, std::abs(values[i] - b.dot(grid.directions[i])));
  return {b, sup};
}

bool verify_three_plane(const SphereFun& g, const SphereFun& candidate, const Vec3& w1,
                        const Vec3& w2, const Vec3& w3, double tol) {
  Mat3 triple;
  triple.col(0) = w1;
  triple.col(1) = w2;
  triple.col(2) = w3;
  if (std::abs(triple.determinant()) < 1e-6)
    throw invalid_input("verify_three_plane: directions are coplanar");

  const int K = std::max(g.degree_max(), candidate.degree_max());
  const SphereFun d = g - candidate;
  for (const Vec3* w : {&w1, &w2}) {
    const CircleFun dc = restrict_to_circle(d, *w, K);
    if (dc.sup_norm() > tol) return false;
  }
  const CircleFun dc3 = restrict_to_circle(d, w3, K);
  const auto [a, rest] = strip_linear(dc3);
  (void)rest;
  return a.norm() <= tol;
}

HalvesClassification classify_by_halves(const SphereFun& f, const SphereFun& g,
                                        const SphereGrid& grid, double tol) {
  const int n = grid.size();
  const int K = std::max(f.degree_max(), g.degree_max());
  HalvesClassification out;
  out.membership.assign(n, HalfMembership::neither);
  out.residual0.assign(n, 0.0);
  out.residual_pi.assign(n, 0.0);

  detail::parallel_for(n, [&](size_t i) {
    const GreatCircleFrame frame = great_circle_frame(grid.directions[i]);
    const CircleFun fc = restrict_to_circle(f, frame, K);
    const CircleFun gc = restrict_to_circle(g, frame, K);
    out.residual0[i] = strip_linear(difference(gc, fc)).second;
    out.residual_pi[i] = strip_linear(difference(gc, antipodal_restriction(fc))).second;
  });

  int n0 = 0, npi = 0;
  for (int i = 0; i < n; ++i) {
    const bool in0 = out.residual0[i] <= tol;
    const bool inpi = out.residual_pi[i] <= tol;
    n0 += in0;
    npi += inpi;
    out.membership[i] = in0 ? (inpi ? HalfMembership::both : HalfMembership::xi0)
                            : (inpi ? HalfMembership::xipi : HalfMembership::neither);
  }
  out.xi0_fraction = static_cast<double>(n0) / n;
  out.xipi_fraction = static_cast<double>(npi) / n;
  return out;
}

ReconstructionResult classify_and_reconstruct(const SphereFun& f, const SphereFun& g,
                                              const SphereGrid& grid, double tol) {
  const EvenEqualityReport even = even_equality_check(f, g, grid, tol);
  if (!even.pass)
    throw hypothesis_violation("classify_and_reconstruct: even parts differ (defect " +
                               std::to_string(even.max_defect) + ")");

  const RotationField field = compute_field(f, g, grid, tol);
  const int valid = field.valid_count();
  if (valid == 0)
    throw hypothesis_violation("classify_and_reconstruct: no valid directions in the field");

  const double tol_angle = 1e-6;
  const LevelSet zero_set = level_set(field, 0.0, tol_angle);
  const LevelSet pi_set = level_set(field, kPi, tol_angle);

  ReconstructionResult result;
  result.xi0_fraction = static_cast<double>(zero_set.members.size()) / valid;
  result.xipi_fraction = static_cast<double>(pi_set.members.size()) / valid;

  if (result.xi0_fraction > 0.5)
    result.sign = +1;
  else if (result.xipi_fraction > 0.5)
    result.sign = -1;
  else
    throw hypothesis_violation("classify_and_reconstruct: ambiguous (no dominant level set)");

  const auto [b, residual] = fit_global_translation(f, g, result.sign, grid);
  result.b = b;
  result.residual = residual;
  return result;
}

}  // namespace spherehog
