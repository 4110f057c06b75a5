#include "htarea/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <queue>

#include "htarea/closed_forms.hpp"
#include "htarea/errors.hpp"
#include "htarea/hilbert.hpp"
#include "htarea/tolerances.hpp"

namespace htarea {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) throw DomainError("rel_tol must lie in (0, 1e-2]");
    if (max_depth < 1 || max_depth > 40) throw DomainError("max_depth must lie in [1, 40]");
    if (max_nodes < 1) throw DomainError("max_nodes must be positive");
}

const AreaResult& require_converged(const AreaResult& r) {
    if (!r.converged)
        throw ToleranceNotReached("adaptive refinement budget exhausted", r.value,
                                  r.error_estimate);
    return r;
}

namespace {

constexpr int order = 12;

struct Rule {
    std::array<double, order> x{};  // on [0,1]
    std::array<double, order> w{};
};

const Rule& rule() {
    static const Rule r = [] {
        using G = boost::math::quadrature::gauss<double, order>;
        const auto& a = G::abscissa();
        const auto& w = G::weights();
        Rule out;
        int n = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            out.x[n] = 0.5 * (1.0 - a[i]);
            out.w[n++] = 0.5 * w[i];
            out.x[n] = 0.5 * (1.0 + a[i]);
            out.w[n++] = 0.5 * w[i];
        }
        return out;
    }();
    return r;
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

// Triangle with apex a, collapsed onto the unit square: p = a + u(b-a) + uv(c-b).
struct Duffy {
    Vec2 a, ba, cb;
    double jac;
};

struct Cell {
    std::size_t tri;
    double u0, u1, v0, v1;
    int depth;
    // halves along u and along v
    std::array<double, 2> half_u{}, half_v{};
    bool split_u;
    double value;
    double error;
};

struct CellOrder {
    bool operator()(const Cell& l, const Cell& r) const { return l.error < r.error; }
};

class Engine {
public:
    Engine(const Integrand& f, const QuadratureSpec& spec) : f_(f), spec_(spec) {}

    void add_triangle(Vec2 apex, Vec2 b, Vec2 c, bool graded) {
        const Duffy d{apex, b - apex, c - b, std::abs(cross(b - apex, c - b))};
        if (d.jac <= 0.0) return;
        tris_.push_back(d);
        const std::size_t t = tris_.size() - 1;
        if (!graded) {
            push(t, 0.0, 1.0, 0.0, 1.0, 0, basic(t, 0.0, 1.0, 0.0, 1.0));
            return;
        }
        // geometric start toward the apex
        double hi = 1.0;
        for (int j = 0; j < 6; ++j) {
            const double lo = 0.5 * hi;
            push(t, lo, hi, 0.0, 1.0, j + 1, basic(t, lo, hi, 0.0, 1.0));
            hi = lo;
        }
        push(t, 0.0, hi, 0.0, 1.0, 6, basic(t, 0.0, hi, 0.0, 1.0));
    }

    AreaResult run() {
        // running totals drive the stopping test; the result is re-summed pairwise below
        while (!queue_.empty() && running_error_ > spec_.rel_tol * std::abs(running_value_) &&
               nodes_ < spec_.max_nodes) {
            Cell c = queue_.top();
            queue_.pop();
            if (c.depth >= 2 * spec_.max_depth) {
                finished_.push_back(c);
                continue;
            }
            running_value_ -= c.value;
            running_error_ -= c.error;
            if (c.split_u) {
                const double um = 0.5 * (c.u0 + c.u1);
                push(c.tri, c.u0, um, c.v0, c.v1, c.depth + 1, c.half_u[0]);
                push(c.tri, um, c.u1, c.v0, c.v1, c.depth + 1, c.half_u[1]);
            } else {
                const double vm = 0.5 * (c.v0 + c.v1);
                push(c.tri, c.u0, c.u1, c.v0, vm, c.depth + 1, c.half_v[0]);
                push(c.tri, c.u0, c.u1, vm, c.v1, c.depth + 1, c.half_v[1]);
            }
        }
        while (!queue_.empty()) {
            finished_.push_back(queue_.top());
            queue_.pop();
        }
        std::sort(finished_.begin(), finished_.end(), [](const Cell& l, const Cell& r) {
            if (l.tri != r.tri) return l.tri < r.tri;
            if (l.u0 != r.u0) return l.u0 < r.u0;
            return l.v0 < r.v0;
        });
        std::vector<double> values, errors;
        values.reserve(finished_.size());
        errors.reserve(finished_.size());
        for (const auto& c : finished_) {
            values.push_back(c.value);
            errors.push_back(c.error);
        }
        AreaResult res;
        res.value = pairwise_sum(values.data(), values.size());
        res.error_estimate = pairwise_sum(errors.data(), errors.size());
        res.node_count = nodes_;
        res.converged = res.error_estimate <= spec_.rel_tol * std::abs(res.value);
        return res;
    }

private:
    double basic(std::size_t t, double u0, double u1, double v0, double v1) {
        const Rule& r = rule();
        const Duffy& d = tris_[t];
        const double du = u1 - u0, dv = v1 - v0;
        double acc[order];
        for (int i = 0; i < order; ++i) {
            const double u = u0 + du * r.x[i];
            double row = 0.0;
            for (int j = 0; j < order; ++j) {
                const double v = v0 + dv * r.x[j];
                const Vec2 p = d.a + u * d.ba + (u * v) * d.cb;
                row += r.w[j] * f_(p);
            }
            acc[i] = r.w[i] * u * row;
        }
        nodes_ += order * order;
        return pairwise_sum(acc, order) * du * dv * d.jac;
    }

    // The cell is bisected along whichever direction moves the estimate more; that
    // difference is also its error estimate. Near-singular edges get resolved in one
    // direction only.
    void push(std::size_t t, double u0, double u1, double v0, double v1, int depth,
              double coarse) {
        Cell c{t, u0, u1, v0, v1, depth, {}, {}, true, 0.0, 0.0};
        const double um = 0.5 * (u0 + u1), vm = 0.5 * (v0 + v1);
        c.half_u = {basic(t, u0, um, v0, v1), basic(t, um, u1, v0, v1)};
        c.half_v = {basic(t, u0, u1, v0, vm), basic(t, u0, u1, vm, v1)};
        const double fu = c.half_u[0] + c.half_u[1];
        const double fv = c.half_v[0] + c.half_v[1];
        const double eu = std::abs(fu - coarse), ev = std::abs(fv - coarse);
        c.split_u = eu >= ev;
        c.value = c.split_u ? fu : fv;
        c.error = std::max(eu, ev);
        running_value_ += c.value;
        running_error_ += c.error;
        queue_.push(c);
    }

    const Integrand& f_;
    QuadratureSpec spec_;
    std::vector<Duffy> tris_;
    std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue_;
    std::vector<Cell> finished_;
    double running_value_ = 0.0, running_error_ = 0.0;
    long nodes_ = 0;
};

void add_piece(Engine& eng, const Piece& piece) {
    const auto& v = piece.region.vertices();
    const std::size_t n = v.size();
    std::vector<bool> ideal(n, false);
    for (std::size_t i : piece.ideal_vertices) {
        if (i >= n) throw DomainError("ideal vertex index out of range");
        ideal[i] = true;
    }
    const Vec2 c = piece.region.centroid();
    // every sub-triangle has a polygon vertex as its apex
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const Vec2 m = 0.5 * (v[i] + v[j]);
        eng.add_triangle(v[i], m, c, ideal[i]);
        eng.add_triangle(v[j], c, m, ideal[j]);
    }
}

}  // namespace

AreaResult integrate_pieces(const Integrand& f, const std::vector<Piece>& pieces,
                            const QuadratureSpec& spec) {
    spec.validate();
    Engine eng(f, spec);
    for (const auto& p : pieces) add_piece(eng, p);
    return eng.run();
}

AreaResult integrate_region(const Integrand& f, const ConvexPolygon& region,
                            const std::vector<std::size_t>& ideal_vertices,
                            const QuadratureSpec& spec) {
    return integrate_pieces(f, {Piece{region, ideal_vertices}}, spec);
}

namespace {

bool on_square_boundary(Vec2 p) {
    return std::abs(p.x) >= 1.0 - tol::merge || std::abs(p.y) >= 1.0 - tol::merge;
}

// Splits a region along lines (point, direction); the integrand is smooth on each part.
std::vector<ConvexPolygon> split_by_lines(const ConvexPolygon& region,
                                          const std::vector<std::pair<Vec2, Vec2>>& lines) {
    std::vector<ConvexPolygon> parts{region};
    for (const auto& [p, d] : lines) {
        const Vec2 n{-d.y, d.x};
        const double c = dot(n, p);
        std::vector<ConvexPolygon> next;
        for (const auto& part : parts) {
            auto lo = clip_halfplane(part, n, c);
            auto hi = clip_halfplane(part, -n, -c);
            if (lo) next.push_back(std::move(*lo));
            if (hi) next.push_back(std::move(*hi));
        }
        parts = std::move(next);
    }
    return parts;
}

std::vector<Piece> q0_pieces(const ConvexPolygon& region) {
    std::vector<Piece> out;
    for (auto& part : split_by_lines(region, {{{0, 0}, {1, 1}}, {{0, 0}, {1, -1}}})) {
        Piece piece{part, {}};
        for (std::size_t i = 0; i < part.size(); ++i)
            if (on_square_boundary(part[i])) piece.ideal_vertices.push_back(i);
        out.push_back(std::move(piece));
    }
    return out;
}

Vec2 snap_to_square(Vec2 p) {
    auto snap = [](double x) {
        if (std::abs(x - 1.0) <= 1e-12) return 1.0;
        if (std::abs(x + 1.0) <= 1e-12) return -1.0;
        return x;
    };
    return {snap(p.x), snap(p.y)};
}

double q0_integrand(Vec2 p) { return integrand_Q0(p.x, p.y); }
double t0_integrand(Vec2 p) { return integrand_T0(p.x, p.y); }

AreaResult scaled(AreaResult r, double s) {
    r.value *= s;
    r.error_estimate *= s;
    return r;
}

AreaResult ht_area_quadrilateral(const InscribedPair& pair, const QuadratureSpec& spec) {
    const auto& o = pair.outer();
    const ProjTransform g = transform_from_correspondence(
        {o[0], o[1], o[2], o[3]}, {Vec2{1, -1}, Vec2{1, 1}, Vec2{-1, 1}, Vec2{-1, -1}});
    std::vector<Vec2> inner;
    for (const auto& p : pair.inner().vertices()) inner.push_back(snap_to_square(g.apply(p)));
    return integrate_pieces(q0_integrand, q0_pieces(ConvexPolygon(std::move(inner))), spec);
}

// position of p along the segment [a, b], in (0,1)
double edge_parameter(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    return dot(p - a, d) / dot(d, d);
}

AreaResult ht_area_triangle(const InscribedPair& pair, const QuadratureSpec& spec) {
    const auto& o = pair.outer();
    const auto& inc = pair.incidence();
    std::size_t on_edge[3];
    for (std::size_t j = 0; j < 3; ++j) on_edge[inc[j]] = j;
    // Every rotation gives the same normal form; the one whose free vertex (the one that
    // lands at (0,s)) is closest to a corner keeps the transform well conditioned.
    std::size_t r = 0;
    double worst = 1.0;
    for (std::size_t e = 0; e < 3; ++e) {
        const double lam = edge_parameter(pair.inner()[on_edge[e]], o[e], o[e + 1]);
        const double m = std::min(lam, 1.0 - lam);
        if (m < worst) {
            worst = m;
            r = (e + 1) % 3;
        }
    }
    const Vec2 a = o[r], b = o[r + 1], c = o[r + 2];
    const Vec2 on_ab = pair.inner()[on_edge[r]];
    const Vec2 on_bc = pair.inner()[on_edge[(r + 1) % 3]];
    const Vec2 free_vertex = pair.inner()[on_edge[(r + 2) % 3]];
    // X goes to the centroid, which puts the two chosen inner vertices at (1,0) and (1,1)
    const Vec2 x = line_intersect(c, on_ab, a, on_bc);
    const ProjTransform g = transform_from_correspondence(
        {a, b, c, x}, {Vec2{0, 0}, Vec2{2, 0}, Vec2{0, 2}, Vec2{2.0 / 3.0, 2.0 / 3.0}});
    const Vec2 p = g.apply(free_vertex);
    const double s = std::clamp(p.y, 0.0, 2.0);
    std::vector<Vec2> inner{{1, 0}, {1, 1}, {0, s}};
    return integrate_region(t0_integrand, ConvexPolygon(std::move(inner)), {0, 1, 2}, spec);
}

AreaResult ht_area_general(const InscribedPair& pair, const QuadratureSpec& spec) {
    const ConvexPolygon& outer = pair.outer();
    const std::size_t k = outer.size();
    std::vector<std::pair<Vec2, Vec2>> lines;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // an edge
            lines.push_back({outer[i], outer[j] - outer[i]});
        }
    std::vector<Piece> pieces;
    for (auto& part : split_by_lines(pair.inner(), lines)) {
        Piece piece{part, {}};
        for (std::size_t i = 0; i < part.size(); ++i)
            if (polygon_contains(outer, part[i]) != Containment::inside)
                piece.ideal_vertices.push_back(i);
        pieces.push_back(std::move(piece));
    }
    // nodes never sit on the boundary, but a vertex may be a hair outside after clipping
    const Integrand f = [&outer](Vec2 p) { return dual_ball_area(outer, p); };
    return integrate_pieces(f, pieces, spec);
}

}  // namespace

AreaResult integrate_Q0_region(const ConvexPolygon& region, const QuadratureSpec& spec) {
    return integrate_pieces(q0_integrand, q0_pieces(region), spec);
}

AreaResult ht_area(const InscribedPair& pair, const QuadratureSpec& spec) {
    spec.validate();
    const std::size_t k = pair.outer().size();
    AreaResult r;
    if (spec.strategy == Strategy::closed_form && k == 4)
        r = ht_area_quadrilateral(pair, spec);
    else if (spec.strategy == Strategy::closed_form && k == 3)
        r = ht_area_triangle(pair, spec);
    else
        r = ht_area_general(pair, spec);
    return scaled(r, 1.0 / std::numbers::pi);
}

namespace {

void require_unit_interval(double a, const char* name) {
    if (!(a >= 0.0 && a < 1.0)) throw DomainError(std::string(name) + " must lie in [0,1)");
}

}  // namespace

ConvexPolygon region_Q(double alpha, double beta) {
    if (!(alpha > -1.0 && alpha < 1.0 && beta > -1.0 && beta < 1.0))
        throw DomainError("alpha, beta must lie in (-1,1)");
    return ConvexPolygon({{beta, 1}, {-1, alpha}, {beta, -1}, {1, alpha}});
}

std::optional<ConvexPolygon> region_T_alpha(double alpha) {
    require_unit_interval(alpha, "alpha");
    if (alpha == 0.0) return std::nullopt;
    return ConvexPolygon({{0, 0}, {alpha, alpha}, {-alpha, alpha}});
}

std::optional<ConvexPolygon> region_T_beta(double beta) {
    require_unit_interval(beta, "beta");
    if (beta == 0.0) return std::nullopt;
    return ConvexPolygon({{0, 0}, {beta, -beta}, {beta, beta}});
}

ConvexPolygon region_Q_prime(double alpha, double beta) {
    const double g = gamma_of(alpha, beta);
    return ConvexPolygon({{g, g}, {-g, g}, {-g, -g}, {g, -g}});
}

ConvexPolygon region_Q_core(double alpha, double beta) {
    const double g = gamma_of(alpha, beta);
    std::optional<ConvexPolygon> p = region_Q(alpha, beta);
    const Vec2 normals[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& n : normals) {
        p = clip_halfplane(*p, n, g);
        if (!p) throw DegenerateConfiguration("empty core region");
    }
    return *p;
}

std::array<ConvexPolygon, 4> regions_Delta(double alpha, double beta) {
    require_unit_interval(alpha, "alpha");
    require_unit_interval(beta, "beta");
    const double g = gamma_of(alpha, beta);
    const ConvexPolygon q = region_Q(alpha, beta);
    // each piece: list of half-planes dot(n, p) <= c
    using H = std::pair<Vec2, double>;
    const std::vector<H> cuts[4] = {
        {{{0, -1}, -g}},                                // top: y >= g
        {{{-1, 0}, -g}, {{0, 1}, g}, {{0, -1}, g}},     // right: x >= g, |y| <= g
        {{{0, 1}, -g}},                                 // bottom: y <= -g
        {{{1, 0}, -g}, {{0, 1}, g}, {{0, -1}, g}},      // left: x <= -g, |y| <= g
    };
    std::vector<ConvexPolygon> out;
    for (const auto& hs : cuts) {
        std::optional<ConvexPolygon> p = q;
        for (const auto& [n, c] : hs) {
            p = clip_halfplane(*p, n, c);
            if (!p) throw DegenerateConfiguration("empty Delta region");
        }
        out.push_back(*p);
    }
    return {out[0], out[1], out[2], out[3]};
}

}  // namespace htarea
