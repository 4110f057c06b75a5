#pragma once

#include "htarea/projective.hpp"

namespace htarea {

struct TangentVector {
    Vec2 p;
    Vec2 xi;
};

ConvexPolygon standard_triangle();  // T0: (0,0), (2,0), (0,2)
ConvexPolygon standard_square();    // Q0: (+-1, +-1)

// Parameter s > 0 with p + s*dir on the boundary (p interior).
double boundary_exit(const ConvexPolygon& omega, Vec2 p, Vec2 dir);

double hilbert_distance(const ConvexPolygon& omega, Vec2 p, Vec2 q);
double finsler_norm(const ConvexPolygon& omega, const TangentVector& v);

CentrallySymmetricPolygon unit_ball(const ConvexPolygon& omega, Vec2 p);
CentrallySymmetricPolygon dual_polygon(const CentrallySymmetricPolygon& b);
double dual_ball_area(const ConvexPolygon& omega, Vec2 p);

// Closed-form dual-ball areas on T0 and Q0.
double integrand_T0(double x, double y);
double integrand_Q0(double x, double y);

}  // namespace htarea
