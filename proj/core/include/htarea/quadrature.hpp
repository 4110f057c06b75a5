#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "htarea/flags.hpp"
#include "htarea/projective.hpp"

namespace htarea {

enum class Strategy { closed_form, general_dual_ball };

struct QuadratureSpec {
    double rel_tol = 1e-7;
    int max_depth = 30;
    Strategy strategy = Strategy::closed_form;
    // integrand evaluations allowed before giving up
    long max_nodes = 40'000'000;

    void validate() const;
};

struct AreaResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long node_count = 0;
    bool converged = true;
};

// Throws ToleranceNotReached carrying the estimate when r did not converge.
const AreaResult& require_converged(const AreaResult& r);

using Integrand = std::function<double(Vec2)>;

struct Piece {
    ConvexPolygon region;
    std::vector<std::size_t> ideal_vertices;
};

// Integral of f over a convex region. Ideal vertices are where f may blow up.
AreaResult integrate_region(const Integrand& f, const ConvexPolygon& region,
                            const std::vector<std::size_t>& ideal_vertices,
                            const QuadratureSpec& spec);
// One adaptive run over several pieces; the tolerance applies to the total.
AreaResult integrate_pieces(const Integrand& f, const std::vector<Piece>& pieces,
                            const QuadratureSpec& spec);

// Integral of integrand_Q0 over a region inside Q0; splits along the diagonals first.
AreaResult integrate_Q0_region(const ConvexPolygon& region, const QuadratureSpec& spec);

// Holmes-Thompson area of the inner polygon in the Hilbert metric of the outer one.
AreaResult ht_area(const InscribedPair& pair, const QuadratureSpec& spec = {});

// Inner quadrilateral (b,1), (-1,a), (b,-1), (1,a) in Q0.
ConvexPolygon region_Q(double alpha, double beta);
// (0,0), (a,a), (-a,a); empty at a = 0
std::optional<ConvexPolygon> region_T_alpha(double alpha);
// (0,0), (b,b), (b,-b); empty at b = 0
std::optional<ConvexPolygon> region_T_beta(double beta);
// the square [-g, g]^2 with g = gamma_of(a, b)
ConvexPolygon region_Q_prime(double alpha, double beta);
// Q intersected with that square
ConvexPolygon region_Q_core(double alpha, double beta);
// Pieces of Q outside the open square: top, right, bottom, left.
std::array<ConvexPolygon, 4> regions_Delta(double alpha, double beta);

}  // namespace htarea
