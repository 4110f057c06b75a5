#pragma once

namespace htarea {

// Real dilogarithm, x <= 1. Throws DomainError otherwise.
double li2(double x);

// 3/(8 pi) (pi^2 + ln^2 t)
double triangle_volume(double t);

// HT area of the symmetric ideal quadrilateral with double ratios d = d'.
double hyperbolic_quad_volume(double d);

// d = (1+a)/(1-a) and back
double hyperbolic_d_of_alpha(double alpha);
double hyperbolic_alpha_of_d(double d);

// 32 ln2 / 9 + 8 ln3 - 16
double hyperbolic_second_derivative_at_sym();

// Integral of A_Q0 over the triangle (0,0), (a,a), (-a,a) is f(a)/2.
double f_alpha(double alpha);

double gamma_of(double alpha, double beta);

}  // namespace htarea
