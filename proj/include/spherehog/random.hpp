#pragma once

#include <cstdint>
#include <random>

#include "spherehog/geometry.hpp"

namespace spherehog {

class SphereFun;

// Deterministic RNG: mt19937_64 with explicitly coded uniform/normal
// transforms, so identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the polar method.
  double normal();

  Vec3 unit_vector();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Random band-limited function: independent standard-normal coefficients on
// degrees ell_min .. degree_max.
SphereFun random_sphere_fun(int degree_max, std::uint64_t seed, int ell_min = 0);

}  // namespace spherehog
