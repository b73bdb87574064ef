#include "spherehog/sphere_fun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "spherehog/errors.hpp"

namespace spherehog {

namespace {

// Orthonormal associated Legendre values Pbar_l^m(x) for one m, l = m..L,
// without the Condon-Shortley phase:
//   Pbar_m^m     = Pbar_{m-1}^{m-1} * s * sqrt((2m+1)/(2m)),  Pbar_0^0 = sqrt(1/4pi)
//   Pbar_{m+1}^m = x * sqrt(2m+3) * Pbar_m^m
//   Pbar_l^m     = a_l (x Pbar_{l-1}^m - b_l Pbar_{l-2}^m)
void legendre_column(int degree_max, int m, double x, double s, double pbar_mm,
                     double* out /* indexed l - m */) {
  out[0] = pbar_mm;
  if (degree_max == m) return;
  out[1] = x * std::sqrt(2.0 * m + 3.0) * pbar_mm;
  for (int l = m + 2; l <= degree_max; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
    const double b =
        std::sqrt(((l - 1.0) * (l - 1.0) - double(m) * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
    out[l - m] = a * (x * out[l - 1 - m] - b * out[l - 2 - m]);
  }
}

}  // namespace

void sh_eval_basis(int degree_max, const Vec3& u, std::span<double> out) {
  const int L = degree_max;
  if (static_cast<int>(out.size()) < sh_coeff_count(L))
    throw invalid_input("sh_eval_basis: output span too small");
  const double x = u.z();
  const double s = std::hypot(u.x(), u.y());

  double cos_phi = 1.0, sin_phi = 0.0;
  if (s > 0.0) {
    cos_phi = u.x() / s;
    sin_phi = u.y() / s;
  }

  std::vector<double> col(L + 1);
  const double inv_sqrt_4pi = 1.0 / std::sqrt(kFourPi);
  const double sqrt2 = std::sqrt(2.0);

  // m = 0
  double pbar_mm = inv_sqrt_4pi;
  legendre_column(L, 0, x, s, pbar_mm, col.data());
  for (int l = 0; l <= L; ++l) out[sh_index(l, 0)] = col[l];

  // m >= 1; cos/sin(m phi) by angle addition.
  double cos_m = 1.0, sin_m = 0.0;
  for (int m = 1; m <= L; ++m) {
    pbar_mm *= s * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    const double c = cos_m * cos_phi - sin_m * sin_phi;
    const double sn = sin_m * cos_phi + cos_m * sin_phi;
    cos_m = c;
    sin_m = sn;
    legendre_column(L, m, x, s, pbar_mm, col.data());
    for (int l = m; l <= L; ++l) {
      const double v = sqrt2 * col[l - m];
      out[sh_index(l, m)] = v * cos_m;
      out[sh_index(l, -m)] = v * sin_m;
    }
  }
}

SphereFun::SphereFun(int degree_max, std::vector<double> coeffs)
    : degree_max_(degree_max), coeffs_(std::move(coeffs)) {
  if (degree_max_ < 0) throw invalid_input("SphereFun: degree_max must be >= 0");
  if (static_cast<int>(coeffs_.size()) != sh_coeff_count(degree_max_))
    throw invalid_input("SphereFun: coefficient count must be (L+1)^2");
}

SphereFun SphereFun::zero(int degree_max) {
  return SphereFun(degree_max, std::vector<double>(sh_coeff_count(degree_max), 0.0));
}

SphereFun SphereFun::constant(double value, int degree_max) {
  SphereFun f = zero(degree_max);
  f.coeffs_[0] = value * std::sqrt(kFourPi);
  return f;
}

SphereFun SphereFun::linear(const Vec3& b) {
  SphereFun f = zero(1);
  const double scale = std::sqrt(kFourPi / 3.0);
  f.coeffs_[sh_index(1, 1)] = scale * b.x();
  f.coeffs_[sh_index(1, -1)] = scale * b.y();
  f.coeffs_[sh_index(1, 0)] = scale * b.z();
  return f;
}

SphereFun SphereFun::harmonic(int l, int m, int degree_max) {
  if (degree_max < 0) degree_max = l;
  if (l < 0 || std::abs(m) > l || l > degree_max) throw invalid_input("harmonic: bad (l, m)");
  SphereFun f = zero(degree_max);
  f.coeffs_[sh_index(l, m)] = 1.0;
  return f;
}

double SphereFun::coeff(int l, int m) const {
  if (l < 0 || l > degree_max_ || std::abs(m) > l) throw invalid_input("coeff: bad (l, m)");
  return coeffs_[sh_index(l, m)];
}

double SphereFun::eval(const Vec3& u) const {
  require_unit(u, "SphereFun::eval u");
  std::vector<double> basis(coeffs_.size());
  sh_eval_basis(degree_max_, u, basis);
  double acc = 0.0;
  for (size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * basis[i];
  return acc;
}

SphereFun SphereFun::antipodal() const {
  SphereFun f = *this;
  for (int l = 1; l <= degree_max_; l += 2)
    for (int m = -l; m <= l; ++m) f.coeffs_[sh_index(l, m)] = -f.coeffs_[sh_index(l, m)];
  return f;
}

Vec3 SphereFun::degree_one_vector() const {
  if (degree_max_ < 1) return Vec3::Zero();
  const double scale = std::sqrt(3.0 / kFourPi);
  return Vec3(coeffs_[sh_index(1, 1)], coeffs_[sh_index(1, -1)], coeffs_[sh_index(1, 0)]) * scale;
}

SphereFun& SphereFun::operator+=(const SphereFun& rhs) {
  if (rhs.degree_max_ > degree_max_) {
    coeffs_.resize(sh_coeff_count(rhs.degree_max_), 0.0);
    degree_max_ = rhs.degree_max_;
  }
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

SphereFun& SphereFun::operator-=(const SphereFun& rhs) {
  if (rhs.degree_max_ > degree_max_) {
    coeffs_.resize(sh_coeff_count(rhs.degree_max_), 0.0);
    degree_max_ = rhs.degree_max_;
  }
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

SphereFun& SphereFun::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

double sh_eval(const SphereFun& f, const Vec3& u) { return f.eval(u); }

SphereFun sh_fit(std::span<const Vec3> points, std::span<const double> values, int degree_max) {
  if (points.size() != values.size()) throw invalid_input("sh_fit: point/value size mismatch");
  const int n_basis = sh_coeff_count(degree_max);
  const int n_pts = static_cast<int>(points.size());
  if (n_pts < n_basis) throw invalid_input("sh_fit: under-resolved sample set");

  Eigen::MatrixXd design(n_pts, n_basis);
  std::vector<double> basis(n_basis);
  for (int i = 0; i < n_pts; ++i) {
    require_unit(points[i], "sh_fit sample point");
    sh_eval_basis(degree_max, points[i], basis);
    for (int j = 0; j < n_basis; ++j) design(i, j) = basis[j];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < n_basis) throw invalid_input("sh_fit: under-resolved sample set");
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(values.data(), n_pts);
  Eigen::VectorXd sol = qr.solve(rhs);
  return SphereFun(degree_max, std::vector<double>(sol.data(), sol.data() + n_basis));
}

std::pair<SphereFun, SphereFun> even_odd_split(const SphereFun& f) {
  SphereFun even = SphereFun::zero(f.degree_max());
  SphereFun odd = SphereFun::zero(f.degree_max());
  std::vector<double> ec(f.coeffs()), oc(f.coeffs());
  for (int l = 0; l <= f.degree_max(); ++l)
    for (int m = -l; m <= l; ++m) {
      if (l % 2 == 0)
        oc[sh_index(l, m)] = 0.0;
      else
        ec[sh_index(l, m)] = 0.0;
    }
  return {SphereFun(f.degree_max(), std::move(ec)), SphereFun(f.degree_max(), std::move(oc))};
}

Vec3 surface_gradient(const SphereFun& f, const Vec3& u) {
  require_unit(u, "surface_gradient u");
  return SurfaceJet(f).gradient(u);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre rule
// ---------------------------------------------------------------------------

void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw invalid_input("gauss_legendre_nodes: n >= 1");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess for the i-th root (descending), Newton iteration.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;  // mirrored exactly so the node set is symmetric bit-for-bit
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
}

QuadratureRule gauss_legendre_rule(int degree_max) {
  const int n_lat = degree_max + 1;
  const int n_lon = 2 * degree_max + 2;
  std::vector<double> gx, gw;
  gauss_legendre_nodes(n_lat, gx, gw);

  QuadratureRule rule;
  rule.n_latitude = n_lat;
  rule.n_longitude = n_lon;
  rule.nodes.reserve(size_t(n_lat) * n_lon);
  rule.weights.reserve(size_t(n_lat) * n_lon);
  const double lon_w = kTwoPi / n_lon;
  for (int i = 0; i < n_lat; ++i) {
    const double z = gx[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < n_lon; ++j) {
      const double phi = lon_w * j;
      rule.nodes.emplace_back(s * std::cos(phi), s * std::sin(phi), z);
      rule.weights.push_back(gw[i] * lon_w);
    }
  }
  return rule;
}

// ---------------------------------------------------------------------------
// SurfaceJet: solid-harmonic polynomial representation
// ---------------------------------------------------------------------------

namespace {

// Trivariate polynomial as a monomial map (px, py, pz) -> coefficient.
using PolyMap = std::map<std::array<int, 3>, double>;

void poly_add(PolyMap& p, const std::array<int, 3>& key, double c) {
  if (c == 0.0) return;
  p[key] += c;
}

PolyMap poly_mul(const PolyMap& a, const PolyMap& b) {
  PolyMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      poly_add(out, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Falling factorial n (n-1) ... (n-m+1).
double falling(int n, int m) { return factorial(n) / factorial(n - m); }

// Homogeneous harmonic polynomial equal to r^l Y_lm on the sphere.
//   P_l^m(t) = (1-t^2)^{m/2} d^m/dt^m P_l(t),
//   P_l(t)   = 2^{-l} sum_k (-1)^k C(l,k) C(2l-2k,l) t^{l-2k},
//   r^l Y_l,+-m = sqrt(2) K_lm * {A_m, B_m}(x,y) * sum_k beta_k z^{l-m-2k} (r^2)^k
// with A_m + i B_m = (x + i y)^m.
PolyMap solid_harmonic(int l, int m_signed) {
  const int m = std::abs(m_signed);

  // A_m (m_signed >= 0) or B_m (m_signed < 0).
  PolyMap azimuthal;
  for (int j = 0; j <= m; ++j) {
    // (x + iy)^m = sum_j C(m,j) x^(m-j) (iy)^j
    const double c = binomial(m, j);
    const int rem = j % 4;
    if (m_signed >= 0) {  // real part: j even
      if (rem == 0) poly_add(azimuthal, {m - j, j, 0}, c);
      if (rem == 2) poly_add(azimuthal, {m - j, j, 0}, -c);
    } else {  // imaginary part: j odd
      if (rem == 1) poly_add(azimuthal, {m - j, j, 0}, c);
      if (rem == 3) poly_add(azimuthal, {m - j, j, 0}, -c);
    }
  }

  PolyMap zonal;
  const double two_pow = std::ldexp(1.0, -l);  // 2^-l
  PolyMap r2;  // x^2 + y^2 + z^2
  poly_add(r2, {2, 0, 0}, 1.0);
  poly_add(r2, {0, 2, 0}, 1.0);
  poly_add(r2, {0, 0, 2}, 1.0);
  PolyMap r2k;  // (r^2)^k, built incrementally
  poly_add(r2k, {0, 0, 0}, 1.0);
  for (int k = 0; 2 * k <= l - m; ++k) {
    if (k > 0) r2k = poly_mul(r2k, r2);
    const int zp = l - m - 2 * k;
    const double beta = ((k % 2 == 0) ? 1.0 : -1.0) * two_pow * binomial(l, k) *
                        binomial(2 * l - 2 * k, l) * falling(l - 2 * k, m);
    if (beta == 0.0) continue;
    for (const auto& [key, c] : r2k) poly_add(zonal, {key[0], key[1], key[2] + zp}, beta * c);
  }

  const double norm = std::sqrt((2.0 * l + 1.0) / kFourPi * factorial(l - m) / factorial(l + m)) *
                      (m > 0 ? std::sqrt(2.0) : 1.0);
  PolyMap out = poly_mul(azimuthal, zonal);
  for (auto& [key, c] : out) c *= norm;
  return out;
}

}  // namespace

SurfaceJet::SurfaceJet(const SphereFun& f) : degree_max_(f.degree_max()) {
  PolyMap combined;
  for (int l = 0; l <= degree_max_; ++l)
    for (int m = -l; m <= l; ++m) {
      const double c = f.coeffs()[sh_index(l, m)];
      if (c == 0.0) continue;
      for (const auto& [key, pc] : solid_harmonic(l, m)) poly_add(combined, key, c * pc);
    }

  auto flatten = [](const PolyMap& p, std::vector<Term>& out) {
    out.clear();
    out.reserve(p.size());
    for (const auto& [key, c] : p) {
      if (c == 0.0) continue;
      out.push_back(Term{static_cast<std::uint8_t>(key[0]), static_cast<std::uint8_t>(key[1]),
                         static_cast<std::uint8_t>(key[2]), c});
    }
  };
  auto derivative = [](const PolyMap& p, int axis) {
    PolyMap out;
    for (const auto& [key, c] : p) {
      if (key[axis] == 0) continue;
      std::array<int, 3> k = key;
      k[axis] -= 1;
      poly_add(out, k, c * key[axis]);
    }
    return out;
  };

  flatten(combined, value_terms_);
  PolyMap d[3] = {derivative(combined, 0), derivative(combined, 1), derivative(combined, 2)};
  for (int a = 0; a < 3; ++a) flatten(d[a], grad_terms_[a]);
  int slot = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) flatten(derivative(d[a], b), hess_terms_[slot++]);
}

double SurfaceJet::eval_terms(const std::vector<Term>& terms, const Vec3& u) const {
  // Power tables up to the polynomial degree.
  double px[32], py[32], pz[32];
  const int L = std::min(degree_max_, 31);
  px[0] = py[0] = pz[0] = 1.0;
  for (int i = 1; i <= L; ++i) {
    px[i] = px[i - 1] * u.x();
    py[i] = py[i - 1] * u.y();
    pz[i] = pz[i - 1] * u.z();
  }
  double acc = 0.0;
  for (const Term& t : terms) acc += t.coeff * px[t.px] * py[t.py] * pz[t.pz];
  return acc;
}

double SurfaceJet::value(const Vec3& u) const { return eval_terms(value_terms_, u); }

Vec3 SurfaceJet::gradient(const Vec3& u) const {
  const Vec3 g(eval_terms(grad_terms_[0], u), eval_terms(grad_terms_[1], u),
               eval_terms(grad_terms_[2], u));
  return g - g.dot(u) * u;
}

Mat2 SurfaceJet::hessian(const Vec3& u, const Vec3& t1, const Vec3& t2) const {
  Mat3 H;
  H(0, 0) = eval_terms(hess_terms_[0], u);
  H(0, 1) = H(1, 0) = eval_terms(hess_terms_[1], u);
  H(0, 2) = H(2, 0) = eval_terms(hess_terms_[2], u);
  H(1, 1) = eval_terms(hess_terms_[3], u);
  H(1, 2) = H(2, 1) = eval_terms(hess_terms_[4], u);
  H(2, 2) = eval_terms(hess_terms_[5], u);
  const Vec3 g(eval_terms(grad_terms_[0], u), eval_terms(grad_terms_[1], u),
               eval_terms(grad_terms_[2], u));
  const double radial = g.dot(u);
  // Along geodesics c(t) with c(0)=u, c'(0)=t: (f o c)'' = t^T H t - (grad . u).
  Mat2 out;
  out(0, 0) = t1.dot(H * t1) - radial * t1.dot(t1);
  out(0, 1) = out(1, 0) = t1.dot(H * t2) - radial * t1.dot(t2);
  out(1, 1) = t2.dot(H * t2) - radial * t2.dot(t2);
  return out;
}

Mat2 SurfaceJet::curvature_operator(const Vec3& u, const Vec3& t1, const Vec3& t2) const {
  Mat2 out = hessian(u, t1, t2);
  const double v = value(u);
  out(0, 0) += v;
  out(1, 1) += v;
  return out;
}

double SurfaceJet::min_curvature_eigenvalue(const Vec3& u) const {
  const GreatCircleFrame fr = great_circle_frame(u);
  const Mat2 c = curvature_operator(u, fr.e1, fr.e2);
  const double half_tr = 0.5 * (c(0, 0) + c(1, 1));
  const double disc = std::hypot(0.5 * (c(0, 0) - c(1, 1)), c(0, 1));
  return half_tr - disc;
}

}  // namespace spherehog
