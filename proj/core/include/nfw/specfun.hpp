#pragma once

namespace nfw::specfun {

// sin(x)/x with sinc(0) = 1.
double sinc(double x);

// Centered cardinal B-spline M_order, supported on [-order/2, order/2].
// M_1 takes the value 1/2 at its two endpoints so every order is even.
double cardinal_bspline(int order, double x);

// Bessel function of the first kind J_mu(x) for real mu >= 0, x >= 0.
double bessel_j(double mu, double x);

// J_mu(x) / (x/2)^mu; finite and equal to 1/Gamma(mu+1) at x = 0.
double bessel_j_scaled(double mu, double x);

// Modified Bessel function of the first kind I_mu(x) for mu >= 0, x >= 0.
double bessel_i(double mu, double x);

// Spherical Bessel j_2 and modified spherical Bessel i_2.
double spherical_j2(double x);
double spherical_i2(double x);

// i_2(sqrt(w))/w for w > 0, j_2(sqrt(-w))/(-w) for w < 0, 1/15 at w = 0.
// A single analytic function of w: sum_k w^k / (2^k k! (2k+5)!!).
double spherical2_ratio(double w);

// Riemann zeta function for real s > 1.
double riemann_zeta(double s);

}  // namespace nfw::specfun
