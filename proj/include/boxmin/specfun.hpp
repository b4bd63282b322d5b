#pragma once

namespace boxmin::specfun {

// Evaluation controls for the series-defined sign approximant.
struct EvalConfig {
  // Terms per side of the paired series. The effective truncation is raised
  // to at least 2|x|+2 so the tail correction stays in its convergent regime.
  int series_truncation = 10'000;
  // Window around removable singularities where Taylor limits replace the
  // raw quotient.
  double near_singularity_radius = 1e-4;

  // Throws std::invalid_argument unless series_truncation >= 16 and
  // near_singularity_radius lies in [0, 1/4).
  void validate() const;
};

int sgn(double x);

// sin(pi x) and cos(pi x) with exact reduction of the argument modulo 2, so
// integers give exact zeros.
double sin_pi(double x);
double cos_pi(double x);

// sin(pi x) / (pi x), with the limit 1 at the origin.
double sinc(double x, double radius = 1e-4);

// Fejer kernel (sin(pi x)/(pi x))^2. Its Fourier transform is the triangle
// max(0, 1 - |xi|), so it is band-limited to [-1, 1].
double fejer(double x, const EvalConfig& cfg = {});

// Vaaler's band-limited approximant of sgn(x):
//
//   (sin^2(pi x)/pi^2) * (sum_{n != 0} sgn(n)/(x-n)^2 + 2/x)
//
// It interpolates sgn at every integer and satisfies |H(x) - sgn(x)| <= K(x).
// The +n and -n terms are paired (4xn/(n^2-x^2)^2), the nearest-integer pole is
// folded into a Fejer term, and the tail beyond the truncation is replaced by
// its midpoint integral 2x/((T+1/2)^2 - x^2).
double sign_approximant(double x, const EvalConfig& cfg = {});

// Upper bound on the absolute error of sign_approximant(x, cfg) caused by
// truncating the paired series (midpoint-rule remainder, with a factor 2
// margin).
double sign_approximant_tail_bound(double x, const EvalConfig& cfg = {});

}  // namespace boxmin::specfun
