#pragma once

namespace alpharm {

// Inputs of the univalence-radius machinery.  `scale` is the normalization
// constant at the origin (a Jacobian lower bound) and `bound` the sup-type
// bound of the active statement.  The profile itself only needs alpha > -2;
// the radius paths below additionally require alpha in (-1, 0].
struct LandauInputs {
  LandauInputs(double alpha, double scale, double bound);
  double alpha;
  double scale;
  double bound;
};

// Strictly decreasing profile whose unique root is the univalence radius:
//   phi(x) = scale/(bound (2+alpha))
//          - (4 bound x / pi) [ (2-x)/(1-x)^2 + 2x/((1-x)(1-x^2)^2) ].
// phi(0) > 0 and phi -> -infinity as x -> 1-.
double phi_profile(double x, const LandauInputs& in);

// Unique root of phi_profile in (0, 1).  Bisection on [0, 1 - 1e-15]:
// stops when |phi| <= phi_tol or the bracket width drops below width_tol
// (iteration cap 200, unreachable).  Monotonicity makes the bracket valid
// throughout, so no derivative information is needed.
double solve_rho(const LandauInputs& in, double phi_tol = 1e-12,
                 double width_tol = 1e-15);

// Univalence radius rho0 (the root above) paired with the lower bound on the
// covered disk radius:
//   r0 = (2 rho0 / 3) [ scale/(bound (2+alpha))
//                       - bound rho0 (2-rho0) / (pi (1-rho0)^2) ].
// The bracket is positive at the true root; if roundoff drives it negative
// the value is clamped at 0 and `clamped` is set instead of asserting.
struct UnivalentRange {
  double rho0;
  double r0_lower;
  bool clamped;
};
UnivalentRange univalent_range(const LandauInputs& in, double rho0);

// Interior minimum of mu(gamma) = (1+gamma)^((alpha+1)/p) /
// (gamma (1-gamma)^(1/p)) over (0, 1), computed by a 10^4-point scan (which
// rejects profiles with more than one descending-to-ascending basin) followed
// by golden-section refinement of the bracketing cell to width 1e-12.  mu is
// evaluated directly with p = infinity as well, where it degenerates to
// 1/gamma and the minimum sits at the right end of the search interval
// [1e-6, 1 - 1e-6].
struct MuMinimum {
  double gamma0;
  double mu_min;
};
MuMinimum minimize_mu(double alpha, double p);

// Full Hardy-space pipeline for a solution normalized by |J_f(0)| = lambda
// with finite p-norm: computes gamma0 and mu_min, the effective bound
// mstar = c_alpha^(1/p) hardy_norm mu_min, then the root rho0 of phi with
// (scale, bound) = (lambda, mstar).  The guaranteed radii are
// univalence_radius = gamma0 rho0 and covering_radius = gamma0 r0_lower.
struct LandauResult {
  double gamma0;
  double mstar;
  double rho0;
  double r0_lower;
  double univalence_radius;
  double covering_radius;
};
LandauResult landau_hardy(double alpha, double p, double hardy_norm,
                          double lambda);

}  // namespace alpharm
