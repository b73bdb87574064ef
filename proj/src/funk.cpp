#include "spherehog/funk.hpp"

#include <cmath>

#include "spherehog/errors.hpp"
#include "spherehog/geometry.hpp"

namespace spherehog {

double funk_transform(const SphereFun& f, const Vec3& xi, int n_quad) {
  if (n_quad < 2 * f.degree_max() + 2)
    throw invalid_input("funk_transform: n_quad must be >= 2L + 2");
  const GreatCircleFrame frame = great_circle_frame(xi);
  double acc = 0.0;
  for (int j = 0; j < n_quad; ++j) acc += f.eval(frame.point(kTwoPi * j / n_quad));
  return acc * kTwoPi / n_quad;
}

EvenEqualityReport even_equality_check(const SphereFun& f, const SphereFun& g,
                                       const SphereGrid& grid, double tol) {
  EvenEqualityReport report;

  const SphereFun fe = even_odd_split(f).first;
  const SphereFun ge = even_odd_split(g).first;

  const int L = std::max(f.degree_max(), g.degree_max());
  for (int l = 0; l <= L; l += 2)
    for (int m = -l; m <= l; ++m) {
      const double cf = l <= f.degree_max() ? f.coeffs()[sh_index(l, m)] : 0.0;
      const double cg = l <= g.degree_max() ? g.coeffs()[sh_index(l, m)] : 0.0;
      report.coeff_defect = std::max(report.coeff_defect, std::abs(cf - cg));
    }

  const int n_quad = 4 * std::max(1, L);
  for (const Vec3& xi : grid.directions) {
    const double d = funk_transform(fe, xi, n_quad) - funk_transform(ge, xi, n_quad);
    report.transform_defect = std::max(report.transform_defect, std::abs(d));
  }

  report.max_defect = std::max(report.coeff_defect, report.transform_defect);
  report.pass = report.coeff_defect <= tol && report.transform_defect <= tol;
  return report;
}

}  // namespace spherehog
