#pragma once

#include <cstddef>
#include <vector>

#include "htarea/projective.hpp"

namespace htarea {

// e1 spans the point, (e1, e2) span the line.
class Flag {
public:
    Flag(Vec3 e1, Vec3 e2);
    Vec3 e1() const { return e1_; }
    Vec3 e2() const { return e2_; }
    // normal of the plane spanned by e1, e2
    Vec3 line() const { return cross(e1_, e2_); }

private:
    Vec3 e1_, e2_;
};

// Ordered flags in general position. The order is kept as given.
class FlagTuple {
public:
    explicit FlagTuple(std::vector<Flag> flags);
    const std::vector<Flag>& flags() const { return f_; }
    std::size_t size() const { return f_.size(); }
    const Flag& operator[](std::size_t i) const { return f_[i]; }
    FlagTuple reversed() const;

private:
    std::vector<Flag> f_;
};

// Throws NotGeneralPosition.
void require_general_position(const std::vector<Flag>& flags);

double triple_ratio(const Flag& E, const Flag& F, const Flag& G);
double double_ratio_1(const Flag& E, const Flag& F, const Flag& G, const Flag& H);
double double_ratio_2(const Flag& E, const Flag& F, const Flag& G, const Flag& H);

bool is_positive(const FlagTuple& tuple);

struct FGQuadCoords {
    double t = 1.0;
    double tp = 1.0;
    double d = 1.0;
    double dp = 1.0;
};

struct NormalizedQuadParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
};

// (T(E,F,G), T(E,G,H), D1, D2) of a 4-tuple
FGQuadCoords quad_coords(const FlagTuple& quad);

NormalizedQuadParams fg_to_normalized(const FGQuadCoords& c);
FGQuadCoords normalized_to_fg(const NormalizedQuadParams& p);
FGQuadCoords flip_diagonal(const FGQuadCoords& c);

// Flags with outer polygon Q0 and inner vertices (b1,1), (-1,a1), (b2,-1), (1,a2).
FlagTuple normalized_quad_flags(const NormalizedQuadParams& p);
// Flags with outer polygon T0 and inner vertices (1,1), (1,0), (0,s).
FlagTuple triangle_flags(double s);
// s with triple ratio t for triangle_flags
double triangle_s_of_t(double t);

// Inner polygon ideal in the outer one, one inner vertex per outer edge.
class InscribedPair {
public:
    // Incidence is recovered geometrically.
    InscribedPair(ConvexPolygon inner, ConvexPolygon outer);
    // Incidence given explicitly (checked).
    InscribedPair(ConvexPolygon inner, ConvexPolygon outer, std::vector<std::size_t> incidence);

    const ConvexPolygon& inner() const { return inner_; }
    const ConvexPolygon& outer() const { return outer_; }
    // incidence()[j]: outer edge (outer[e] -> outer[e+1]) holding inner vertex j
    const std::vector<std::size_t>& incidence() const { return inc_; }

private:
    void validate() const;
    ConvexPolygon inner_, outer_;
    std::vector<std::size_t> inc_;
};

InscribedPair polygons_from_flags(const FlagTuple& tuple);
// Flags in counter-clockwise order of the inner vertices, starting with inner vertex 0.
FlagTuple flags_from_inscribed_pair(const InscribedPair& pair);

}  // namespace htarea
