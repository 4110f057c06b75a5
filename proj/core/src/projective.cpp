#include "htarea/projective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "htarea/errors.hpp"
#include "htarea/tolerances.hpp"

namespace htarea {

double wedge3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

double cross_ratio(ProjScalar a, ProjScalar b, ProjScalar c, ProjScalar d) {
    const ProjScalar args[4] = {a, b, c, d};
    double scale = 1.0;
    int infinite = 0;
    for (const auto& s : args) {
        if (s.is_infinite())
            ++infinite;
        else
            scale = std::max(scale, std::abs(s.value()));
    }
    if (infinite > 1) throw DegenerateCrossRatio("two arguments at infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (args[i].is_infinite() || args[j].is_infinite()) continue;
            if (std::abs(args[i].value() - args[j].value()) <= tol::det * scale)
                throw DegenerateCrossRatio("coincident arguments");
        }
    // a factor containing the point at infinity tends to 1
    if (a.is_infinite()) return (d.value() - b.value()) / (c.value() - b.value());
    if (b.is_infinite()) return (c.value() - a.value()) / (d.value() - a.value());
    if (c.is_infinite()) return (d.value() - b.value()) / (d.value() - a.value());
    if (d.is_infinite()) return (c.value() - a.value()) / (c.value() - b.value());
    return (c.value() - a.value()) / (c.value() - b.value()) * (d.value() - b.value()) /
           (d.value() - a.value());
}

ProjTransform::ProjTransform(const std::array<double, 9>& m) : m_(m) {
    double fro = 0.0;
    for (double x : m) {
        if (!std::isfinite(x)) throw DegenerateConfiguration("non-finite matrix entry");
        fro += x * x;
    }
    fro = std::sqrt(fro);
    if (!(std::abs(determinant()) > tol::det * fro * fro * fro))
        throw DegenerateConfiguration("singular projective transform");
}

ProjTransform ProjTransform::identity() { return ProjTransform({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

double ProjTransform::determinant() const {
    const auto& a = m_;
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Vec3 ProjTransform::apply(Vec3 v) const {
    const auto& a = m_;
    return {a[0] * v.x + a[1] * v.y + a[2] * v.z, a[3] * v.x + a[4] * v.y + a[5] * v.z,
            a[6] * v.x + a[7] * v.y + a[8] * v.z};
}

Vec2 ProjTransform::apply(Vec2 p) const {
    const Vec3 h = apply(lift(p));
    const double s = std::max({std::abs(h.x), std::abs(h.y), std::abs(h.z)});
    if (!(std::abs(h.z) > tol::det * s)) throw DegenerateConfiguration("point sent to infinity");
    return {h.x / h.z, h.y / h.z};
}

ProjTransform ProjTransform::inverse() const {
    const auto& a = m_;
    // adjugate; the scale is irrelevant projectively but keep it tidy
    std::array<double, 9> adj = {
        a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
        a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
        a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3]};
    const double d = determinant();
    for (double& x : adj) x /= d;
    return ProjTransform(adj);
}

ProjTransform ProjTransform::operator*(const ProjTransform& rhs) const {
    std::array<double, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[3 * i + j] += m_[3 * i + k] * rhs.m_[3 * k + j];
    return ProjTransform(r);
}

namespace {

// Columns p1,p2,p3 scaled so that their sum is p4.
std::array<double, 9> basis_matrix(const std::array<Vec2, 4>& p) {
    Vec3 h[4];
    for (int i = 0; i < 4; ++i) h[i] = lift(p[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                const double w = wedge3(h[i], h[j], h[k]);
                if (std::abs(w) <= tol::det * norm(h[i]) * norm(h[j]) * norm(h[k]))
                    throw DegenerateConfiguration("three collinear points in correspondence");
            }
    // Cramer's rule for [h0 h1 h2] lambda = h3
    const double D = wedge3(h[0], h[1], h[2]);
    const double l0 = wedge3(h[3], h[1], h[2]) / D;
    const double l1 = wedge3(h[0], h[3], h[2]) / D;
    const double l2 = wedge3(h[0], h[1], h[3]) / D;
    const Vec3 c0 = l0 * h[0], c1 = l1 * h[1], c2 = l2 * h[2];
    return {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
}

}  // namespace

ProjTransform transform_from_correspondence(const std::array<Vec2, 4>& src,
                                            const std::array<Vec2, 4>& dst) {
    const ProjTransform bs(basis_matrix(src));
    const ProjTransform bd(basis_matrix(dst));
    auto t = bd * bs.inverse();
    // normalize scale so entries stay O(1)
    auto m = t.matrix();
    double mx = 0.0;
    for (double x : m) mx = std::max(mx, std::abs(x));
    for (double& x : m) x /= mx;
    return ProjTransform(m);
}

double signed_area(std::span<const Vec2> pts) {
    const std::size_t n = pts.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += cross(pts[i], pts[(i + 1) % n]);
    return 0.5 * s;
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) : v_(std::move(vertices)) {
    const std::size_t n = v_.size();
    if (n < 3) throw InvalidPolygon("fewer than 3 vertices");
    for (const auto& p : v_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidPolygon("non-finite vertex");
    if (signed_area(v_) < 0.0) std::reverse(v_.begin(), v_.end());
    const double s = scale();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = v_[(i + 1) % n] - v_[i];
        const Vec2 e1 = v_[(i + 2) % n] - v_[(i + 1) % n];
        if (norm(e0) <= tol::det * s) throw InvalidPolygon("repeated vertex");
        if (!(cross(e0, e1) > tol::conv * norm(e0) * norm(e1)))
            throw InvalidPolygon("not strictly convex");
    }
    // strict convexity of consecutive turns does not exclude winding twice
    double turn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = v_[(i + 1) % n] - v_[i];
        const Vec2 e1 = v_[(i + 2) % n] - v_[(i + 1) % n];
        turn += std::atan2(cross(e0, e1), dot(e0, e1));
    }
    if (turn > 2.0 * M_PI + 1e-6) throw InvalidPolygon("self-intersecting vertex order");
}

Vec2 ConvexPolygon::centroid() const {
    Vec2 c;
    for (const auto& p : v_) c = c + p;
    return c / static_cast<double>(v_.size());
}

double ConvexPolygon::scale() const {
    double s = 0.0;
    for (const auto& p : v_) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return std::max(s, 1e-300);
}

double shoelace_area(const ConvexPolygon& p) { return signed_area(p.vertices()); }

Vec2 line_intersect(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2) {
    const Vec2 da = a2 - a1, db = b2 - b1;
    const double den = cross(da, db);
    if (std::abs(den) <= tol::det * norm(da) * norm(db)) throw ParallelLines("lines are parallel");
    const double s = cross(b1 - a1, db) / den;
    return a1 + s * da;
}

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len = norm(d);
    if (len == 0.0) return norm(p - a) == 0.0;
    if (std::abs(cross(d, p - a)) > tol::conv * len * std::max(len, norm(p - a))) return false;
    const double s = dot(p - a, d) / (len * len);
    return s >= -tol::conv && s <= 1.0 + tol::conv;
}

bool point_in_open_segment(Vec2 p, Vec2 a, Vec2 b) {
    if (!point_on_segment(p, a, b)) return false;
    const Vec2 d = b - a;
    const double s = dot(p - a, d) / dot(d, d);
    return s > tol::conv && s < 1.0 - tol::conv;
}

Containment polygon_contains(const ConvexPolygon& poly, Vec2 p) {
    const std::size_t n = poly.size();
    bool on_edge = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i], b = poly[i + 1];
        const Vec2 e = b - a;
        const double c = cross(e, p - a);
        const double thr = tol::conv * norm(e) * std::max(norm(e), norm(p - a));
        if (c < -thr) return Containment::outside;
        if (c <= thr) on_edge = true;
    }
    return on_edge ? Containment::boundary : Containment::inside;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double rel_tol) {
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    std::sort(pts.begin(), pts.end(),
              [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Vec2> uniq;
    for (const auto& p : pts)
        if (uniq.empty() || norm(p - uniq.back()) > rel_tol * scale) uniq.push_back(p);
    if (uniq.size() < 3) return uniq;
    // a turn counts only if it is clearly left
    auto left = [&](Vec2 o, Vec2 a, Vec2 b) {
        return cross(a - o, b - o) > rel_tol * norm(a - o) * norm(b - o);
    };
    std::vector<Vec2> h(2 * uniq.size());
    std::size_t k = 0;
    for (const auto& p : uniq) {
        while (k >= 2 && !left(h[k - 2], h[k - 1], p)) --k;
        h[k++] = p;
    }
    for (std::size_t i = uniq.size() - 1, lo = k + 1; i-- > 0;) {
        const Vec2 p = uniq[i];
        while (k >= lo && !left(h[k - 2], h[k - 1], p)) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    // near-duplicates across the sort order
    std::vector<Vec2> out;
    for (const auto& p : h)
        if (out.empty() || norm(p - out.back()) > rel_tol * scale) out.push_back(p);
    if (out.size() > 1 && norm(out.front() - out.back()) <= rel_tol * scale) out.pop_back();
    return out;
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, Vec2 n, double c) {
    const std::size_t m = poly.size();
    const double s = poly.scale() * norm(n);
    std::vector<Vec2> out;
    out.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 a = poly[i], b = poly[i + 1];
        const double fa = dot(n, a) - c, fb = dot(n, b) - c;
        if (fa <= 1e-14 * s) out.push_back(a);
        if ((fa < -1e-14 * s && fb > 1e-14 * s) || (fa > 1e-14 * s && fb < -1e-14 * s)) {
            const double t = fa / (fa - fb);
            out.push_back(a + t * (b - a));
        }
    }
    auto hull = convex_hull(out, 1e-12);
    if (hull.size() < 3) return std::nullopt;
    if (std::abs(signed_area(hull)) <= 1e-14 * poly.scale() * poly.scale()) return std::nullopt;
    try {
        return ConvexPolygon(std::move(hull));
    } catch (const InvalidPolygon&) {
        return std::nullopt;
    }
}

namespace {

bool upper(Vec2 p) { return p.y > 0.0 || (p.y == 0.0 && p.x > 0.0); }

}  // namespace

CentrallySymmetricPolygon::CentrallySymmetricPolygon(std::vector<Vec2> half) {
    if (half.size() < 2) throw InvalidPolygon("symmetric polygon needs at least 2 half vertices");
    for (auto& p : half)
        if (!upper(p)) p = -p;
    std::sort(half.begin(), half.end(),
              [](Vec2 a, Vec2 b) { return std::atan2(a.y, a.x) > std::atan2(b.y, b.x); });
    half_ = std::move(half);
    const auto f = full();
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!(cross(f[i], f[(i + 1) % f.size()]) > 0.0))
            throw OriginNotInterior("origin not interior to symmetric polygon");
    ConvexPolygon check(f);  // throws if not strictly convex
    (void)check;
}

CentrallySymmetricPolygon CentrallySymmetricPolygon::from_points(std::span<const Vec2> pts) {
    std::vector<Vec2> all;
    all.reserve(2 * pts.size());
    for (const auto& p : pts) {
        all.push_back(p);
        all.push_back(-p);
    }
    const auto hull = convex_hull(std::move(all), tol::merge);
    std::vector<Vec2> half;
    for (const auto& p : hull)
        if (upper(p)) half.push_back(p);
    return CentrallySymmetricPolygon(std::move(half));
}

std::vector<Vec2> CentrallySymmetricPolygon::full() const {
    std::vector<Vec2> f(half_.rbegin(), half_.rend());
    for (auto it = half_.rbegin(); it != half_.rend(); ++it) f.push_back(-*it);
    return f;
}

}  // namespace htarea
