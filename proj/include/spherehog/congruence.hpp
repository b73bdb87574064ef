#pragma once

#include <vector>

#include "spherehog/circle_fun.hpp"

namespace spherehog {

inline constexpr double kDefaultCoeffTol = 1e-8;

// One solution of the planar congruence equation f(phi(u)) + a . u = g(u) on
// a great circle: rotation angle and translation in frame coordinates.
struct CongruenceSolution {
  double angle = 0.0;        // (-pi, pi]
  Vec2 translation{0.0, 0.0};  // a = a1 e1 + a2 e2
  double residual = 0.0;     // max over k = 0 and |k| >= 2 of |g_k - f_k e^{ik angle}|
  bool multiplicity_flag = false;  // solution set non-unique at tolerance
};

struct SymmetryReport {
  bool has_symmetry = false;
  std::vector<double> symmetry_angles;  // in (0, 2pi)
  bool degenerate = false;              // no active modes |k| >= 2
};

// True when every mode |k| >= 2 of h is below tol. Such restrictions admit
// every rotation angle and are never solved silently.
bool circle_is_degenerate(const CircleFun& h, double tol = kDefaultCoeffTol);

// All rotation angles phi in (-pi, pi] with |g_0 - f_0| <= tol and
// |g_k - f_k e^{ik phi}| <= tol for every |k| >= 2, each with the translation
// recovered from the k = 1 residue, sorted by |angle| (ties: positive first).
// Empty when the restrictions are not directly congruent at tol. When f is
// degenerate, returns the single solution phi = 0 flagged as multiple.
std::vector<CongruenceSolution> solve_congruence(const CircleFun& f, const CircleFun& g,
                                                 double tol = kDefaultCoeffTol);

// Direct rigid motion symmetries of h: angles beta in (0, 2pi) with
// e^{ik beta} = 1 for every active mode |k| >= 2, i.e. multiples of 2pi/m for
// m = gcd of the active mode orders when m >= 2. Modes k = 0, +-1 are
// unconstrained (absorbed by the translation). A degenerate h is symmetric
// under every rotation; the report flags it and leaves the angle list empty.
SymmetryReport detect_symmetry(const CircleFun& h, double tol = kDefaultCoeffTol);

}  // namespace spherehog
