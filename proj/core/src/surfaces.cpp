#include "htarea/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "htarea/errors.hpp"

namespace htarea {

namespace {

void require_positive(double d, double t) {
    if (!(d > 0.0) || !(t > 0.0) || !std::isfinite(d) || !std::isfinite(t))
        throw DomainError("d and t must be positive and finite");
}

}  // namespace

S03Params s03_parameters(double d, double t) {
    require_positive(d, t);
    // r2 = 1/d closes the system (double ratios of adjacent triangles multiply to 1)
    return {d, 1.0 / d, d, 1.0 / d, d, 1.0 / d, t, 1.0 / t};
}

double s03_residual(const S03Params& p) {
    const double tt = p.t1 * p.t2;
    const double products[] = {p.r1 * p.g2,      p.b1 * p.r2,      p.g1 * p.b2,
                               p.r2 * p.g1 * tt, p.b1 * p.r2 * tt, p.g1 * p.b2 * tt};
    double worst = 0.0;
    for (double x : products) worst = std::max(worst, std::abs(x - 1.0));
    return worst;
}

FlagTuple quadruple_family(double d, double t) {
    require_positive(d, t);
    return normalized_quad_flags(fg_to_normalized({t, 1.0 / t, d, 1.0 / d}));
}

AreaResult s03_area_lower_bound(double d, double t, const QuadratureSpec& spec) {
    return ht_area(polygons_from_flags(quadruple_family(d, t)), spec);
}

double asymptotic_ratio(double d, double t, const QuadratureSpec& spec) {
    require_positive(d, t);
    const double ld = std::log(d), lt = std::log(t);
    const double den = ld * ld + lt * lt;
    if (den == 0.0) throw DomainError("asymptotic_ratio is undefined at d = t = 1");
    return s03_area_lower_bound(d, t, spec).value / den;
}

double surface_lower_bound(int euler_char, const std::vector<double>& triple_ratios) {
    if (euler_char >= 0) throw DomainError("euler characteristic must be negative");
    if (triple_ratios.size() != static_cast<std::size_t>(-2 * euler_char))
        throw LengthMismatch("need -2*chi triple ratios");
    double logs = 0.0;
    for (double t : triple_ratios) {
        if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("triple ratios must be positive");
        const double l = std::log(t);
        logs += l * l;
    }
    constexpr double pi = std::numbers::pi;
    return 3.0 / 8.0 * (-2.0 * pi * euler_char) + 3.0 / (8.0 * pi) * logs;
}

}  // namespace htarea
