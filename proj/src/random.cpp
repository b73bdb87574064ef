#include "spherehog/random.hpp"

#include <cmath>

#include "spherehog/sphere_fun.hpp"

namespace spherehog {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  have_spare_ = true;
  return u * factor;
}

Vec3 Rng::unit_vector() {
  Vec3 v;
  do {
    v = Vec3(normal(), normal(), normal());
  } while (v.norm() < 1e-6);
  return v.normalized();
}

SphereFun random_sphere_fun(int degree_max, std::uint64_t seed, int ell_min) {
  Rng rng(seed);
  std::vector<double> coeffs(sh_coeff_count(degree_max), 0.0);
  for (int l = ell_min; l <= degree_max; ++l)
    for (int m = -l; m <= l; ++m) coeffs[sh_index(l, m)] = rng.normal();
  return SphereFun(degree_max, std::move(coeffs));
}

}  // namespace spherehog
