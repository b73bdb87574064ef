#include "spherehog/geometry.hpp"

namespace spherehog {

GreatCircleFrame great_circle_frame(const Vec3& xi) {
  require_unit(xi, "great_circle_frame xi");
  const Vec3 z(0.0, 0.0, 1.0);
  Vec3 e1 = z.cross(xi);  // (-xi_y, xi_x, 0)
  if (e1.squaredNorm() < 1e-18) {
    // xi within ~1e-9 of +-z: fall back to the x-axis, Gram-Schmidt for exactness.
    const Vec3 x(1.0, 0.0, 0.0);
    e1 = x - x.dot(xi) * xi;
  }
  e1.normalize();
  Vec3 e2 = xi.cross(e1);
  e2.normalize();
  return GreatCircleFrame{xi, e1, e2};
}

}  // namespace spherehog
