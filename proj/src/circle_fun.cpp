#include "spherehog/circle_fun.hpp"

#include <cmath>

#include "spherehog/errors.hpp"

namespace spherehog {

CircleFun::CircleFun(GreatCircleFrame frame, std::vector<std::complex<double>> coeffs)
    : frame_(std::move(frame)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0)
    throw invalid_input("CircleFun: coefficient count must be 2K+1");
  num_modes_ = static_cast<int>(coeffs_.size() / 2);
  for (int k = 1; k <= num_modes_; ++k) {
    const auto diff = coeffs_[num_modes_ - k] - std::conj(coeffs_[num_modes_ + k]);
    if (std::abs(diff) > 1e-9)
      throw invalid_input("CircleFun: coefficients must satisfy c_{-k} = conj(c_k)");
  }
}

CircleFun CircleFun::zero(GreatCircleFrame frame, int num_modes) {
  return CircleFun(std::move(frame),
                   std::vector<std::complex<double>>(2 * num_modes + 1, {0.0, 0.0}));
}

std::complex<double> CircleFun::mode(int k) const {
  if (std::abs(k) > num_modes_) return {0.0, 0.0};
  return coeffs_[num_modes_ + k];
}

double CircleFun::eval(double theta) const {
  // c_0 + 2 Re sum_{k>=1} c_k e^{ik theta}
  double acc = coeffs_[num_modes_].real();
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  std::complex<double> wk(1.0, 0.0);
  for (int k = 1; k <= num_modes_; ++k) {
    wk *= w;
    acc += 2.0 * (coeffs_[num_modes_ + k] * wk).real();
  }
  return acc;
}

double CircleFun::sup_norm(int oversample) const {
  const int n = std::max(8, oversample * (2 * num_modes_ + 2));
  double m = 0.0;
  for (int j = 0; j < n; ++j) m = std::max(m, std::abs(eval(kTwoPi * j / n)));
  return m;
}

CircleFun restrict_to_circle(const SphereFun& f, const GreatCircleFrame& frame, int num_modes) {
  if (num_modes < f.degree_max())
    throw invalid_input("restrict_to_circle: num_modes must be >= degree of f");
  const int K = num_modes;
  const int n = 2 * K + 2;
  std::vector<double> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = f.eval(frame.point(kTwoPi * j / n));

  std::vector<std::complex<double>> coeffs(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const double ang = -k * kTwoPi * j / n;
      acc += samples[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    coeffs[K + k] = acc / static_cast<double>(n);
  }
  // Symmetrize exactly: the samples are real, so c_{-k} = conj(c_k) up to rounding.
  for (int k = 1; k <= K; ++k) {
    const auto sym = 0.5 * (coeffs[K + k] + std::conj(coeffs[K - k]));
    coeffs[K + k] = sym;
    coeffs[K - k] = std::conj(sym);
  }
  coeffs[K].imag(0.0);
  return CircleFun(frame, std::move(coeffs));
}

CircleFun restrict_to_circle(const SphereFun& f, const Vec3& xi, int num_modes) {
  return restrict_to_circle(f, great_circle_frame(xi), num_modes);
}

CircleFun apply_motion(const CircleFun& h, double angle, const Vec2& a) {
  const int K = std::max(h.num_modes(), a.isZero(0.0) ? 0 : 1);
  std::vector<std::complex<double>> coeffs(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    const std::complex<double> rot(std::cos(k * angle), std::sin(k * angle));
    coeffs[K + k] = h.mode(k) * rot;
  }
  if (K >= 1) {
    const std::complex<double> lin(0.5 * a.x(), -0.5 * a.y());
    coeffs[K + 1] += lin;
    coeffs[K - 1] += std::conj(lin);
  }
  return CircleFun(h.frame(), std::move(coeffs));
}

}  // namespace spherehog
