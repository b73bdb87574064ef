#pragma once

#include <complex>
#include <vector>

#include "spherehog/geometry.hpp"
#include "spherehog/sphere_fun.hpp"

namespace spherehog {

// Real function on a great circle, stored as complex Fourier coefficients
// c_k, -K <= k <= K, relative to the declared frame:
//   h(theta) = sum_k c_k e^{i k theta},  u(theta) = cos(theta) e1 + sin(theta) e2,
// with c_{-k} = conj(c_k).
class CircleFun {
 public:
  CircleFun(GreatCircleFrame frame, std::vector<std::complex<double>> coeffs);

  static CircleFun zero(GreatCircleFrame frame, int num_modes);

  int num_modes() const { return num_modes_; }
  const GreatCircleFrame& frame() const { return frame_; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  // c_k; zero for |k| > K.
  std::complex<double> mode(int k) const;

  double eval(double theta) const;

  // max |h| over a dense sample (oversample * (2K+2) points).
  double sup_norm(int oversample = 8) const;

 private:
  GreatCircleFrame frame_;
  int num_modes_;
  std::vector<std::complex<double>> coeffs_;  // index k + K
};

// Restriction of F to the great circle E(xi), frame = great_circle_frame(xi).
// Exact for K >= degree of F (the restriction is a trigonometric polynomial
// of the same degree); K < degree is rejected.
CircleFun restrict_to_circle(const SphereFun& f, const Vec3& xi, int num_modes);
CircleFun restrict_to_circle(const SphereFun& f, const GreatCircleFrame& frame, int num_modes);

// theta -> h(theta + angle) + a1 cos(theta) + a2 sin(theta): rotation by
// `angle` in the circle plane followed by adding the linear form a . u.
CircleFun apply_motion(const CircleFun& h, double angle, const Vec2& a);

}  // namespace spherehog
