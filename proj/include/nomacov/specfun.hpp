#pragma once

#include "nomacov/quadrature.hpp"

namespace nomacov {

/// Gauss hypergeometric 2F1(1, -delta; 1-delta; z) for the nonpositive
/// arguments produced by interference Laplace transforms on annular zones.
/// Evaluated from the defining integral, not a general-purpose routine:
///
///   2F1(1,-d;1-d;-w) = d*p * int_0^1 y / (y^p + w) dy
///                    + d*pi/sin(pi*d) * w^d,       p = 2/(1+d),
///
/// which is the (finite) t^(-d-1)/(1+t) integral after the substitution
/// that removes the endpoint singularity.
///
/// Requires delta in (0,1) and z <= 0.
double gauss_2f1_neg(double delta, double z);

/// Convergent part of gauss_2f1_neg: the same function minus the
/// d*pi/sin(pi*d)*w^d term. Zone-factor differences of 2F1 cancel that term
/// exactly, so analytics code uses this form to avoid subtracting two large
/// values.
double gauss_2f1_neg_reg(double delta, double z);

/// Generalized (analytically continued) lower incomplete Beta
///   B(x; a, b) = int_0^x t^(a-1) (1-t)^(b-1) dt
/// on the real contour with t of the same sign as x. For a in (-1,0) the
/// integral diverges at 0; the value returned is the finite part
///   int_0^x t^(a-1) [(1-t)^(b-1) - 1] dt + x^a/a
/// (constants cancel in the zone differences that consume this function).
/// B(0; a, b) = 0 by convention. Requires 0 < |a| < 1; for x > 0 also x < 1.
double inc_beta_gen(double x, double a, double b);

/// Lower incomplete gamma int_0^x t^(s-1) e^-t dt, s > 0, x >= 0.
double lower_inc_gamma(double s, double x);

/// Regularized lower/upper incomplete gamma P(s,x), Q(s,x) in [0,1].
double reg_lower_gamma(double s, double x);
double reg_upper_gamma(double s, double x);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
double pochhammer(double x, int n);

/// Inverse of Q(x) = int_x^inf exp(-t^2/2)/sqrt(2 pi) dt, p in (0,1).
/// Rational first guess refined with Halley steps on erfc; |error| < 1e-13.
double inverse_q(double p);

} // namespace nomacov
