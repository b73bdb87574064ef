#include "spherehog/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "spherehog/errors.hpp"

namespace spherehog {

namespace {

bool frames_match(const GreatCircleFrame& a, const GreatCircleFrame& b) {
  return (a.xi - b.xi).norm() < 1e-12 && (a.e1 - b.e1).norm() < 1e-12 &&
         (a.e2 - b.e2).norm() < 1e-12;
}

// max over k = 0 and |k| >= 2 of |g_k - f_k e^{ik phi}|.
double mode_objective(const CircleFun& f, const CircleFun& g, double phi) {
  double worst = std::abs(g.mode(0) - f.mode(0));
  for (int k = 2; k <= f.num_modes(); ++k) {
    const std::complex<double> rot(std::cos(k * phi), std::sin(k * phi));
    worst = std::max(worst, std::abs(g.mode(k) - f.mode(k) * rot));
  }
  return worst;
}

// Smooth surrogate Q(phi) = sum_{k>=2} |g_k - f_k e^{ik phi}|^2 and derivatives.
struct Smooth {
  double q, dq, d2q;
};

Smooth smooth_objective(const CircleFun& f, const CircleFun& g, double phi) {
  Smooth s{0.0, 0.0, 0.0};
  for (int k = 2; k <= f.num_modes(); ++k) {
    const std::complex<double> rot(std::cos(k * phi), std::sin(k * phi));
    const std::complex<double> fr = f.mode(k) * rot;
    const std::complex<double> d = g.mode(k) - fr;
    s.q += std::norm(d);
    // d' = -ik f_k e^{ik phi}
    s.dq += 2.0 * k * std::imag(std::conj(d) * fr);
    s.d2q += 2.0 * k * k * (std::norm(fr) - std::real(std::conj(d) * fr));
  }
  return s;
}

Vec2 translation_at(const CircleFun& f, const CircleFun& g, double phi) {
  const std::complex<double> rot(std::cos(phi), std::sin(phi));
  const std::complex<double> resid = 2.0 * (g.mode(1) - f.mode(1) * rot);
  return Vec2(resid.real(), -resid.imag());
}

}  // namespace

bool circle_is_degenerate(const CircleFun& h, double tol) {
  for (int k = 2; k <= h.num_modes(); ++k)
    if (std::abs(h.mode(k)) > tol) return false;
  return true;
}

std::vector<CongruenceSolution> solve_congruence(const CircleFun& f, const CircleFun& g,
                                                 double tol) {
  if (f.num_modes() != g.num_modes())
    throw invalid_input("solve_congruence: mode counts differ");
  if (!frames_match(f.frame(), g.frame()))
    throw invalid_input("solve_congruence: circle frames differ");
  if (tol <= 0.0) throw invalid_input("solve_congruence: tol must be positive");

  std::vector<CongruenceSolution> out;

  if (circle_is_degenerate(f, tol)) {
    // Every angle solves the |k| >= 2 system; report phi = 0 and flag it.
    CongruenceSolution s;
    s.angle = 0.0;
    s.translation = translation_at(f, g, 0.0);
    s.residual = mode_objective(f, g, 0.0);
    s.multiplicity_flag = true;
    if (s.residual <= tol) return {s};
    return {};
  }

  const int K = f.num_modes();
  const int n_coarse = 16 * K;  // resolution pi / (8K)
  const double step = kTwoPi / n_coarse;

  std::vector<double> coarse(n_coarse);
  for (int i = 0; i < n_coarse; ++i) coarse[i] = mode_objective(f, g, -kPi + step * i);

  std::vector<double> candidates;
  for (int i = 0; i < n_coarse; ++i) {
    const double prev = coarse[(i + n_coarse - 1) % n_coarse];
    const double next = coarse[(i + 1) % n_coarse];
    if (coarse[i] <= prev && coarse[i] <= next) candidates.push_back(-kPi + step * i);
  }

  for (double phi0 : candidates) {
    double phi = phi0;
    for (int iter = 0; iter < 60; ++iter) {
      const Smooth s = smooth_objective(f, g, phi);
      if (s.d2q <= 0.0) break;
      double delta = s.dq / s.d2q;
      delta = std::clamp(delta, -step, step);
      phi -= delta;
      if (std::abs(delta) < 1e-15) break;
    }
    const double resid = mode_objective(f, g, phi);
    if (resid > tol) continue;
    phi = wrap_angle(phi);
    bool duplicate = false;
    for (const auto& s : out)
      if (circular_distance(s.angle, phi) < 1e-7) duplicate = true;
    if (duplicate) continue;
    CongruenceSolution s;
    s.angle = phi;
    s.translation = translation_at(f, g, phi);
    s.residual = resid;
    out.push_back(s);
  }

  std::sort(out.begin(), out.end(), [](const CongruenceSolution& a, const CongruenceSolution& b) {
    const double aa = std::abs(a.angle), ab = std::abs(b.angle);
    if (aa != ab) return aa < ab;
    return a.angle > b.angle;  // positive before negative on ties
  });
  for (auto& s : out) s.multiplicity_flag = out.size() > 1;
  return out;
}

SymmetryReport detect_symmetry(const CircleFun& h, double tol) {
  if (tol <= 0.0) throw invalid_input("detect_symmetry: tol must be positive");
  SymmetryReport report;
  int g = 0;
  for (int k = 2; k <= h.num_modes(); ++k)
    if (std::abs(h.mode(k)) > tol) g = std::gcd(g, k);
  if (g == 0) {
    // No active modes: symmetric under every rotation; the angle set is all of
    // (0, 2pi), so the list stays empty and the degenerate flag carries it.
    report.degenerate = true;
    report.has_symmetry = true;
    return report;
  }
  if (g >= 2) {
    report.has_symmetry = true;
    for (int j = 1; j < g; ++j) report.symmetry_angles.push_back(kTwoPi * j / g);
  }
  return report;
}

}  // namespace spherehog
