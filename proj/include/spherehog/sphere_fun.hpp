#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spherehog/geometry.hpp"

namespace spherehog {

// Flat index of the real spherical-harmonic coefficient (l, m), row order
// (0,0), (1,-1), (1,0), (1,1), (2,-2), ...
inline int sh_index(int l, int m) { return l * l + l + m; }
inline int sh_coeff_count(int degree_max) { return (degree_max + 1) * (degree_max + 1); }

// Band-limited real function on S^2, stored as coefficients over the real
// orthonormal spherical-harmonic basis Y_lm (no Condon-Shortley phase):
//
//   Y_l0     = K_l0 P_l(cos th)
//   Y_l,+m   = sqrt(2) K_lm P_l^m(cos th) cos(m ph)      (m > 0)
//   Y_l,-m   = sqrt(2) K_lm P_l^m(cos th) sin(m ph)
//   K_lm     = sqrt((2l+1)/(4pi) * (l-m)!/(l+m)!)
//
// Calibration: the linear forms u1, u2, u3 are sqrt(4pi/3) * Y_(1,1),
// sqrt(4pi/3) * Y_(1,-1), sqrt(4pi/3) * Y_(1,0), and the constant 1 is
// sqrt(4pi) * Y_(0,0).
class SphereFun {
 public:
  SphereFun(int degree_max, std::vector<double> coeffs);

  static SphereFun zero(int degree_max);
  static SphereFun constant(double value, int degree_max = 0);
  // The linear form u -> b . u  (degree 1).
  static SphereFun linear(const Vec3& b);
  // Single unit coefficient on (l, m).
  static SphereFun harmonic(int l, int m, int degree_max = -1);

  int degree_max() const { return degree_max_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int l, int m) const;

  double eval(const Vec3& u) const;  // requires |u| = 1 within 1e-12

  // u -> f(-u); flips the sign of odd-degree coefficients.
  SphereFun antipodal() const;
  // Degree-1 part decoded as the vector b with f_1(u) = b . u.
  Vec3 degree_one_vector() const;

  SphereFun& operator+=(const SphereFun& rhs);
  SphereFun& operator-=(const SphereFun& rhs);
  SphereFun& operator*=(double s);
  friend SphereFun operator+(SphereFun a, const SphereFun& b) { return a += b; }
  friend SphereFun operator-(SphereFun a, const SphereFun& b) { return a -= b; }
  friend SphereFun operator*(SphereFun a, double s) { return a *= s; }
  friend SphereFun operator*(double s, SphereFun a) { return a *= s; }

 private:
  int degree_max_;
  std::vector<double> coeffs_;
};

// Evaluates the full basis Y_00 .. Y_LL at a unit vector; out has (L+1)^2 slots.
void sh_eval_basis(int degree_max, const Vec3& u, std::span<double> out);

double sh_eval(const SphereFun& f, const Vec3& u);

// Least-squares fit of a degree-L expansion to point samples. The sample set
// must resolve degree L (at least (L+1)^2 well-spread points; a quadrature
// grid exact to degree 2L is ideal); rank-deficient systems are rejected.
SphereFun sh_fit(std::span<const Vec3> points, std::span<const double> values, int degree_max);

// Exact projection of a callable onto degree <= L, using the internal
// Gauss-Legendre x uniform-longitude rule (exact for band-limited inputs of
// degree <= L since the rule integrates degree <= 2L exactly).
template <typename F>
SphereFun sh_project(F&& f, int degree_max);

// (even part, odd part): even/odd spherical-harmonic degrees, which matches
// the pointwise definition (f(u) +- f(-u)) / 2.
std::pair<SphereFun, SphereFun> even_odd_split(const SphereFun& f);

// Tangential gradient at u (orthogonal to u). One-shot convenience; use
// SurfaceJet for evaluation loops.
Vec3 surface_gradient(const SphereFun& f, const Vec3& u);

// Pointwise derivative evaluator. Internally represents the expansion as a
// polynomial in (x, y, z) built from solid harmonics, so gradients and
// Hessians are exact everywhere, including the poles.
class SurfaceJet {
 public:
  explicit SurfaceJet(const SphereFun& f);

  double value(const Vec3& u) const;
  Vec3 gradient(const Vec3& u) const;  // tangential

  // Covariant (geodesic) Hessian in the orthonormal tangent frame {t1, t2}.
  Mat2 hessian(const Vec3& u, const Vec3& t1, const Vec3& t2) const;

  // Hess f + f * I in an orthonormal tangent frame; its eigenvalues do not
  // depend on the frame choice.
  Mat2 curvature_operator(const Vec3& u, const Vec3& t1, const Vec3& t2) const;
  double min_curvature_eigenvalue(const Vec3& u) const;

 private:
  struct Term {
    std::uint8_t px, py, pz;
    double coeff;
  };
  std::vector<Term> value_terms_;
  std::vector<Term> grad_terms_[3];
  std::vector<Term> hess_terms_[6];  // xx, xy, xz, yy, yz, zz
  int degree_max_;

  double eval_terms(const std::vector<Term>& terms, const Vec3& u) const;
};

// Internal Gauss-Legendre (latitude) x uniform (longitude) quadrature rule,
// exact for spherical polynomials of degree <= 2*degree_max. Weights sum to
// 4pi. Exposed for tests and for building quadrature-exact sphere grids.
struct QuadratureRule {
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int n_latitude;
  int n_longitude;
};
QuadratureRule gauss_legendre_rule(int degree_max);

// Gauss-Legendre nodes/weights on [-1, 1], exact to degree 2n-1.
void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w);

template <typename F>
SphereFun sh_project(F&& f, int degree_max) {
  const QuadratureRule rule = gauss_legendre_rule(degree_max);
  const int n = sh_coeff_count(degree_max);
  std::vector<double> coeffs(n, 0.0);
  std::vector<double> basis(n);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double wf = rule.weights[i] * f(rule.nodes[i]);
    sh_eval_basis(degree_max, rule.nodes[i], basis);
    for (int j = 0; j < n; ++j) coeffs[j] += wf * basis[j];
  }
  return SphereFun(degree_max, std::move(coeffs));
}

}  // namespace spherehog
