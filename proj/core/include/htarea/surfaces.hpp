#pragma once

#include <vector>

#include "htarea/flags.hpp"
#include "htarea/quadrature.hpp"

namespace htarea {

// Fock-Goncharov parameters of the thrice-punctured sphere, balanced triangulation.
struct S03Params {
    double r1, r2, b1, b2, g1, g2, t1, t2;
};

S03Params s03_parameters(double d, double t);
// largest deviation from 1 over both relation chains
double s03_residual(const S03Params& p);

// Quadruple with coordinates (t, 1/t, d, 1/d).
FlagTuple quadruple_family(double d, double t);

AreaResult s03_area_lower_bound(double d, double t, const QuadratureSpec& spec = {});
double asymptotic_ratio(double d, double t, const QuadratureSpec& spec = {});

// 3/8 (-2 pi chi) + 3/(8 pi) sum ln^2 t_i, over the -2 chi triangles
double surface_lower_bound(int euler_char, const std::vector<double>& triple_ratios);

}  // namespace htarea
