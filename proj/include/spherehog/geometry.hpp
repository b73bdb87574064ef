#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "spherehog/errors.hpp"

namespace spherehog {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);  // (-pi, pi] up to the sign of -pi
  if (a <= -kPi) a = kPi;
  return a;
}

// Distance on R/2piZ; identifies pi with -pi.
inline double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

inline bool is_unit(const Vec3& u, double tol = 1e-12) {
  return std::abs(u.norm() - 1.0) <= tol;
}

inline void require_unit(const Vec3& u, const char* what, double tol = 1e-12) {
  if (!is_unit(u, tol)) throw invalid_input(std::string(what) + ": not a unit vector");
}

// Right-handed orthonormal frame {e1, e2, xi} of the plane orthogonal to xi.
// Points on the great circle E(xi) are u(theta) = cos(theta) e1 + sin(theta) e2,
// traversed counterclockwise as seen from the tip of xi.
struct GreatCircleFrame {
  Vec3 xi;
  Vec3 e1;
  Vec3 e2;

  Vec3 point(double theta) const { return std::cos(theta) * e1 + std::sin(theta) * e2; }

  // In-plane coordinates (v.e1, v.e2) of a vector.
  Vec2 coords(const Vec3& v) const { return Vec2(e1.dot(v), e2.dot(v)); }
  Vec3 from_coords(const Vec2& a) const { return a.x() * e1 + a.y() * e2; }
};

// Deterministic frame convention: e1 = normalize(z x xi), e2 = xi x e1.
// When xi is within ~1e-9 of +-z the convention degenerates and the x-axis is
// used instead, giving e1 = (1,0,0) exactly at the poles. The frame is a pure
// function of xi and is discontinuous only near the cut directions +-z.
GreatCircleFrame great_circle_frame(const Vec3& xi);

}  // namespace spherehog
