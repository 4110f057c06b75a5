#include "htarea/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "htarea/errors.hpp"
#include "htarea/tolerances.hpp"

namespace htarea {

ConvexPolygon standard_triangle() { return ConvexPolygon({{0, 0}, {2, 0}, {0, 2}}); }
ConvexPolygon standard_square() { return ConvexPolygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

namespace {

void require_interior(const ConvexPolygon& omega, Vec2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) ||
        polygon_contains(omega, p) != Containment::inside)
        throw PointOutsideDomain("base point is not strictly inside the domain");
}

}  // namespace

double boundary_exit(const ConvexPolygon& omega, Vec2 p, Vec2 dir) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = omega.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = omega[i], e = omega[i + 1] - a;
        const Vec2 out{e.y, -e.x};
        const double rate = dot(out, dir);
        if (rate <= 0.0) continue;
        best = std::min(best, dot(out, a - p) / rate);
    }
    return best;
}

double hilbert_distance(const ConvexPolygon& omega, Vec2 p, Vec2 q) {
    require_interior(omega, p);
    require_interior(omega, q);
    const Vec2 u = q - p;
    if (u.x == 0.0 && u.y == 0.0) return 0.0;
    // On the line p + s*u: p at 0, q at 1, the far hits at s_plus > 1 and -s_minus.
    const double s_plus = boundary_exit(omega, p, u);
    const double s_minus = boundary_exit(omega, p, -u);
    // half the log of the cross ratio [q:p:a:b], split so that q -> p keeps full precision
    return 0.5 * (std::log1p(1.0 / s_minus) - std::log1p(-1.0 / s_plus));
}

double finsler_norm(const ConvexPolygon& omega, const TangentVector& v) {
    require_interior(omega, v.p);
    if (v.xi.x == 0.0 && v.xi.y == 0.0) throw ZeroVector("Finsler norm of the zero vector");
    return 0.5 * (1.0 / boundary_exit(omega, v.p, v.xi) + 1.0 / boundary_exit(omega, v.p, -v.xi));
}

CentrallySymmetricPolygon unit_ball(const ConvexPolygon& omega, Vec2 p) {
    require_interior(omega, p);
    std::vector<Vec2> xi;
    xi.reserve(omega.size());
    for (const auto& z : omega.vertices()) {
        const Vec2 d = z - p;
        const double n = 0.5 * (1.0 / boundary_exit(omega, p, d) + 1.0 / boundary_exit(omega, p, -d));
        xi.push_back(d / n);
    }
    return CentrallySymmetricPolygon::from_points(xi);
}

CentrallySymmetricPolygon dual_polygon(const CentrallySymmetricPolygon& b) {
    const auto& z = b.half();
    const std::size_t k = z.size();
    std::vector<Vec2> w;
    w.reserve(k);
    Vec2 prev = -z[k - 1];
    double sign = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 cur = z[i];
        const double den = prev.x * cur.y - cur.x * prev.y;
        const double s = den > 0.0 ? 1.0 : (den < 0.0 ? -1.0 : 0.0);
        if (s == 0.0 || (sign != 0.0 && s != sign))
            throw OriginNotInterior("inconsistent orientation in dual polygon formula");
        sign = s;
        w.push_back(Vec2{cur.y - prev.y, prev.x - cur.x} / den);
        prev = cur;
    }
    return CentrallySymmetricPolygon::from_points(w);
}

double dual_ball_area(const ConvexPolygon& omega, Vec2 p) {
    // Same quantity as the unit_ball -> dual_polygon -> shoelace pipeline, without the
    // intermediate validated types; this is the hot loop of the general quadrature path.
    require_interior(omega, p);
    const std::size_t k = omega.size();
    std::vector<Vec2> pts;
    pts.reserve(2 * k);
    for (const auto& z : omega.vertices()) {
        const Vec2 d = z - p;
        const double n = 0.5 * (1.0 / boundary_exit(omega, p, d) + 1.0 / boundary_exit(omega, p, -d));
        pts.push_back(d / n);
        pts.push_back(-(d / n));
    }
    std::sort(pts.begin(), pts.end(),
              [](Vec2 a, Vec2 b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });
    // Graham scan around the origin, starting from the farthest point (a hull vertex)
    const auto far = std::max_element(pts.begin(), pts.end(),
                                      [](Vec2 a, Vec2 b) { return dot(a, a) < dot(b, b); });
    std::rotate(pts.begin(), far, pts.end());
    std::vector<Vec2> h;
    h.reserve(pts.size());
    for (const auto& q : pts) {
        while (h.size() >= 2 && cross(h.back() - h[h.size() - 2], q - h[h.size() - 2]) <= 0.0) h.pop_back();
        h.push_back(q);
    }
    while (h.size() >= 3 && cross(h.back() - h[h.size() - 2], h[0] - h[h.size() - 2]) <= 0.0) h.pop_back();
    // polar vertex of the edge (a, b) is perp(b - a) / cross(a, b)
    const std::size_t m = h.size();
    auto polar = [&](std::size_t i) {
        const Vec2 a = h[i], b = h[(i + 1) % m];
        return Vec2{b.y - a.y, a.x - b.x} / cross(a, b);
    };
    double area = 0.0;
    Vec2 w0 = polar(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 w1 = polar(i);
        area += cross(w0, w1);
        w0 = w1;
    }
    return 0.5 * area;
}

double integrand_T0(double x, double y) {
    if (!(x > 0.0 && y > 0.0 && x + y < 2.0))
        throw PointOutsideDomain("integrand_T0 needs a point inside T0");
    return 1.5 / (x * y * (2.0 - x - y));
}

double integrand_Q0(double x, double y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (!(ax < 1.0 && ay < 1.0)) throw PointOutsideDomain("integrand_Q0 needs a point inside Q0");
    return (2.0 + std::max(ax, ay)) / (2.0 * (1.0 - ax) * (1.0 + ax) * (1.0 - ay) * (1.0 + ay));
}

}  // namespace htarea
