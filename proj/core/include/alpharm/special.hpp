#pragma once

namespace alpharm {

/**
 * Parameter triple (a, b; c) of the Gauss hypergeometric series
 *   F(a,b;c;x) = sum_{n>=0} (a)_n (b)_n / ((c)_n n!) x^n.
 *
 * The constructor rejects non-finite entries and a lower parameter c that
 * is zero or a negative integer (the series would divide by zero).
 */
struct HypParams {
  HypParams(double a, double b, double c);
  double a;
  double b;
  double c;
};

/**
 * Gamma function on (0, 170].  Fixed-coefficient Lanczos approximation,
 * relative error below 1e-12 everywhere in the supported range.  Arguments
 * outside (0, 170] throw std::domain_error; 170 keeps the result finite in
 * double precision with margin.
 */
double gamma_fn(double s);

/** Natural log of Gamma for s > 0 (no upper cap). */
double log_gamma(double s);

/** Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.  n >= 0. */
double pochhammer(double a, int n);

/**
 * Normalizing constant Gamma(alpha/2 + 1)^2 / Gamma(1 + alpha) of the
 * disk kernel family.  Requires alpha > -1; the value is positive and
 * equals 1 at alpha = 0.
 */
double c_alpha(double alpha);

/**
 * Gauss hypergeometric function F(a,b;c;x) for x in [0, 1].
 *
 * Evaluation is by the defining power series with term-ratio updates.
 * Convergence is declared once |term| <= 1e-16 * |partial sum| for three
 * consecutive terms; if 100000 terms do not converge a std::runtime_error
 * is thrown.  Terminating cases (a or b a nonpositive integer) sum the
 * exact polynomial, including at x = 1.  Nonterminating x = 1 uses the
 * Gamma-ratio limit, which requires c - a - b > 0 and positive Gamma
 * arguments (c > 0, c - a > 0, c - b > 0); anything else is a domain error.
 */
double hyp2f1(const HypParams& p, double x);

/**
 * Derivative dF/dx of the Gauss series, evaluated as
 * (a b / c) F(a+1, b+1; c+1; x).  Requires x in [0, 1).
 */
double hyp2f1_dx(const HypParams& p, double x);

/**
 * Radial factor F(-alpha/2, k - alpha/2; k + 1; w) of the disk series,
 * for alpha > -1, k >= 0, w in [0, 1].
 *
 * Same value hyp2f1 would produce, but robust up to the boundary: for
 * non-integer alpha below 1.5 and 1 - w under 5e-3 the defining series
 * needs of order 1/(1-w) terms, so the value is assembled from the two
 * companion series in powers of 1 - w instead.  Integer alpha never takes
 * that route (even alpha terminates; odd alpha converges under the cap).
 */
double hyp2f1_profile(double alpha, int k, double w);

}  // namespace alpharm
