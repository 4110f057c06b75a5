#include "htarea/flags.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "htarea/errors.hpp"
#include "htarea/tolerances.hpp"

namespace htarea {

Flag::Flag(Vec3 e1, Vec3 e2) : e1_(e1), e2_(e2) {
    const double n1 = norm(e1), n2 = norm(e2);
    if (!(n1 > 0.0) || !std::isfinite(n1) || !std::isfinite(n2))
        throw DegenerateConfiguration("flag point vector is zero or non-finite");
    if (!(norm(cross(e1, e2)) > tol::det * n1 * n2))
        throw DegenerateConfiguration("flag vectors are linearly dependent");
}

namespace {

double normalized_wedge(Vec3 a, Vec3 b, Vec3 c) {
    return wedge3(a, b, c) / (norm(a) * norm(b) * norm(c));
}

// a wedge factor of a ratio; vanishing means the flags are not in general position
double factor(Vec3 a, Vec3 b, Vec3 c) {
    const double w = wedge3(a, b, c);
    if (std::abs(w) <= tol::general_position * norm(a) * norm(b) * norm(c))
        throw NotGeneralPosition("vanishing wedge in ratio");
    return w;
}

}  // namespace

void require_general_position(const std::vector<Flag>& f) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            // point of j not on the line of i
            const Vec3 l = f[i].line();
            if (std::abs(dot(l, f[j].e1())) <= tol::general_position * norm(l) * norm(f[j].e1()))
                throw NotGeneralPosition("point " + std::to_string(j) + " lies on line " +
                                         std::to_string(i));
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                if (std::abs(normalized_wedge(f[i].e1(), f[j].e1(), f[l].e1())) <=
                    tol::general_position)
                    throw NotGeneralPosition("three collinear points");
}

FlagTuple::FlagTuple(std::vector<Flag> flags) : f_(std::move(flags)) {
    if (f_.size() < 3) throw DegenerateConfiguration("a flag tuple needs at least 3 flags");
    require_general_position(f_);
}

FlagTuple FlagTuple::reversed() const {
    return FlagTuple(std::vector<Flag>(f_.rbegin(), f_.rend()));
}

double triple_ratio(const Flag& E, const Flag& F, const Flag& G) {
    const Vec3 e1 = E.e1(), e2 = E.e2(), f1 = F.e1(), f2 = F.e2(), g1 = G.e1(), g2 = G.e2();
    return factor(e1, e2, f1) / factor(f1, g1, g2) * factor(e1, g1, g2) / factor(e1, f1, f2) *
           factor(f1, f2, g1) / factor(e1, e2, g1);
}

double double_ratio_1(const Flag& E, const Flag& F, const Flag& G, const Flag& H) {
    const Vec3 e1 = E.e1(), f1 = F.e1(), g1 = G.e1(), g2 = G.e2(), h1 = H.e1();
    return -factor(e1, g1, f1) / factor(e1, g1, h1) * factor(g1, g2, h1) / factor(g1, g2, f1);
}

double double_ratio_2(const Flag& E, const Flag& F, const Flag& G, const Flag& H) {
    const Vec3 e1 = E.e1(), e2 = E.e2(), f1 = F.e1(), g1 = G.e1(), h1 = H.e1();
    return -factor(e1, e2, f1) / factor(e1, e2, h1) * factor(e1, g1, h1) / factor(e1, g1, f1);
}

bool is_positive(const FlagTuple& tuple) {
    const auto& f = tuple.flags();
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l) {
                if (!(triple_ratio(f[i], f[j], f[l]) > 0.0)) return false;
                for (std::size_t m = l + 1; m < k; ++m)
                    if (!(double_ratio_1(f[i], f[j], f[l], f[m]) > 0.0) ||
                        !(double_ratio_2(f[i], f[j], f[l], f[m]) > 0.0))
                        return false;
            }
    return true;
}

FGQuadCoords quad_coords(const FlagTuple& q) {
    if (q.size() != 4) throw LengthMismatch("quad_coords needs 4 flags");
    return {triple_ratio(q[0], q[1], q[2]), triple_ratio(q[0], q[2], q[3]),
            double_ratio_1(q[0], q[1], q[2], q[3]), double_ratio_2(q[0], q[1], q[2], q[3])};
}

namespace {

void require_positive(const FGQuadCoords& c) {
    for (double v : {c.t, c.tp, c.d, c.dp})
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("quadrilateral coordinates must be positive and finite");
}

void require_open_interval(const NormalizedQuadParams& p) {
    for (double v : {p.alpha1, p.alpha2, p.beta1, p.beta2})
        if (!(v > -1.0 && v < 1.0)) throw DomainError("normalized parameters must lie in (-1,1)");
}

}  // namespace

NormalizedQuadParams fg_to_normalized(const FGQuadCoords& c) {
    require_positive(c);
    const double t = c.t, tp = c.tp, d = c.d, dp = c.dp;
    const double r = (1.0 + tp) / (1.0 + t);
    const double s = 1.0 / r;
    NormalizedQuadParams p;
    p.alpha1 = (d * r * (1.0 - t) + tp - d * dp) / (d * r * (1.0 + t) + tp + d * dp);
    p.alpha2 = -(dp * s * (1.0 - tp) + t - d * dp) / (dp * s * (1.0 + tp) + t + d * dp);
    p.beta1 = -(tp - d * r) / (tp + d * r);
    p.beta2 = (t - dp * s) / (t + dp * s);
    return p;
}

FGQuadCoords normalized_to_fg(const NormalizedQuadParams& p) {
    require_open_interval(p);
    FGQuadCoords c;
    c.t = (1.0 - p.alpha1) / (1.0 + p.alpha1) * (1.0 + p.beta2) / (1.0 + p.beta1);
    c.tp = (1.0 + p.alpha2) / (1.0 - p.alpha2) * (1.0 - p.beta1) / (1.0 - p.beta2);
    c.d = (1.0 + p.beta1) / (1.0 - p.beta1) * c.tp * (1.0 + c.t) / (1.0 + c.tp);
    c.dp = (1.0 - p.beta2) / (1.0 + p.beta2) * c.t * (1.0 + c.tp) / (1.0 + c.t);
    return c;
}

FGQuadCoords flip_diagonal(const FGQuadCoords& c) {
    require_positive(c);
    const double t = c.t, tp = c.tp, d = c.d, dp = c.dp;
    const double a = 1.0 + dp + dp * t + dp * t * d;
    const double b = 1.0 + d + d * tp + d * tp * dp;
    return {tp * a / b, t * b / a, (1.0 + dp) / (t * dp * (1.0 + d)),
            (1.0 + d) / (tp * d * (1.0 + dp))};
}

FlagTuple normalized_quad_flags(const NormalizedQuadParams& p) {
    require_open_interval(p);
    return FlagTuple({Flag({p.beta1, 1, 1}, {1, 1, 1}), Flag({-1, p.alpha1, 1}, {-1, -1, 1}),
                      Flag({p.beta2, -1, 1}, {-1, -1, 1}), Flag({1, p.alpha2, 1}, {1, 1, 1})});
}

FlagTuple triangle_flags(double s) {
    if (!std::isfinite(s) || s == 0.0 || s == 2.0)
        throw DomainError("triangle_flags: s must differ from 0 and 2");
    return FlagTuple({Flag({1, 1, 1}, {2, 0, 1}), Flag({1, 0, 1}, {0, 0, 1}),
                      Flag({0, s, 1}, {0, 0, 1})});
}

double triangle_s_of_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("triple ratio must be positive");
    return 2.0 * t / (1.0 + t);
}

InscribedPair::InscribedPair(ConvexPolygon inner, ConvexPolygon outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
    const std::size_t k = inner_.size();
    if (outer_.size() != k)
        throw DegenerateConfiguration("inner and outer polygons differ in vertex count");
    inc_.assign(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t e = 0; e < k; ++e)
            if (point_in_open_segment(inner_[j], outer_[e], outer_[e + 1])) {
                inc_[j] = e;
                break;
            }
    validate();
}

InscribedPair::InscribedPair(ConvexPolygon inner, ConvexPolygon outer,
                             std::vector<std::size_t> incidence)
    : inner_(std::move(inner)), outer_(std::move(outer)), inc_(std::move(incidence)) {
    if (outer_.size() != inner_.size() || inc_.size() != inner_.size())
        throw DegenerateConfiguration("inconsistent inscribed pair sizes");
    validate();
}

void InscribedPair::validate() const {
    const std::size_t k = inner_.size();
    std::vector<bool> used(k, false);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t e = inc_[j];
        if (e >= k || used[e])
            throw DegenerateConfiguration("each outer edge must hold exactly one inner vertex");
        if (!point_in_open_segment(inner_[j], outer_[e], outer_[e + 1]))
            throw DegenerateConfiguration("inner vertex not in the open interior of its edge");
        used[e] = true;
    }
}

namespace {

struct Chart {
    Vec3 a, b, n;
    bool standard = false;
    Vec2 operator()(Vec3 v) const {
        if (standard) return {v.x / v.z, v.y / v.z};
        const double w = dot(v, n);
        return {dot(v, a) / w, dot(v, b) / w};
    }
};

Vec3 unit(Vec3 v) { return (1.0 / norm(v)) * v; }

// Smallest spherical cap around unit vectors, by iterated nudging toward the worst one.
Vec3 max_margin_normal(const std::vector<Vec3>& u) {
    Vec3 n{};
    for (const auto& v : u) n = n + v;
    if (norm(n) == 0.0) n = u.front();
    n = unit(n);
    for (int it = 1; it <= 4000; ++it) {
        std::size_t worst = 0;
        double m = dot(n, u[0]);
        for (std::size_t i = 1; i < u.size(); ++i)
            if (dot(n, u[i]) < m) {
                m = dot(n, u[i]);
                worst = i;
            }
        n = unit(n + (1.0 / (it + 1.0)) * u[worst]);
    }
    return n;
}

double min_margin(const std::vector<Vec3>& u, Vec3 n) {
    double m = 1.0;
    for (const auto& v : u) m = std::min(m, dot(n, v));
    return m;
}

}  // namespace

InscribedPair polygons_from_flags(const FlagTuple& tuple) {
    if (!is_positive(tuple)) throw NotPositive("flag tuple is not positive");
    const auto& f = tuple.flags();
    const std::size_t k = f.size();

    std::vector<Vec3> m(k), p(k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i] = unit(f[i].line());
        p[i] = unit(f[i].e1());
    }
    // Orient each line so the other inner points are on its positive side, and pick the
    // point representatives that make this consistent; this is the cone over the polygons.
    std::vector<double> s(k, 0.0);
    for (std::size_t i = 1; i < k; ++i) s[i] = dot(m[i], p[0]) > 0.0 ? 1.0 : -1.0;
    for (std::size_t j = 1; j < k; ++j) {
        const std::size_t i = (j == 1) ? 2 : 1;
        if (s[i] * dot(m[i], p[j]) < 0.0) p[j] = -p[j];
    }
    s[0] = dot(m[0], p[1]) > 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && !(s[i] * dot(m[i], p[j]) > 0.0))
                throw NotPositive("inner points do not lie in one cone");

    std::vector<Vec3> o(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t n = (i + 1) % k;
        Vec3 v = unit(cross(m[i], m[n]));
        // any other line decides the sign
        const std::size_t other = (n + 1) % k;
        if (s[other] * dot(m[other], v) < 0.0) v = -v;
        o[i] = v;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (s[j] * dot(m[j], o[i]) < -tol::conv)
                throw NoBoundedChart("outer vertices are not in a common cone");

    Chart chart;
    std::vector<Vec3> rays = o;
    rays.insert(rays.end(), p.begin(), p.end());
    const double zs = o[0].z >= 0.0 ? 1.0 : -1.0;
    bool standard = true;
    for (const auto& v : rays)
        if (!(zs * v.z >= 1e-3)) standard = false;
    if (standard) {
        chart.standard = true;
    } else {
        const Vec3 n = max_margin_normal(rays);
        if (!(min_margin(rays, n) > tol::det)) throw NoBoundedChart("no chart avoids all vertices");
        chart.n = n;
        const Vec3 trial = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        chart.a = unit(trial - dot(trial, n) * n);
        chart.b = cross(n, chart.a);
    }

    std::vector<Vec2> inner(k), outer(k);
    for (std::size_t i = 0; i < k; ++i) {
        inner[i] = chart(p[i]);
        outer[i] = chart(o[i]);
    }
    return InscribedPair(ConvexPolygon(std::move(inner)), ConvexPolygon(std::move(outer)));
}

FlagTuple flags_from_inscribed_pair(const InscribedPair& pair) {
    std::vector<Flag> flags;
    const std::size_t k = pair.inner().size();
    for (std::size_t j = 0; j < k; ++j) {
        const Vec2 q = pair.inner()[j];
        const std::size_t e = pair.incidence()[j];
        // the far endpoint of the edge keeps e2 well separated from e1
        const Vec2 a = pair.outer()[e], b = pair.outer()[e + 1];
        const Vec2 other = norm(a - q) > norm(b - q) ? a : b;
        flags.emplace_back(lift(q), lift(other));
    }
    return FlagTuple(std::move(flags));
}

}  // namespace htarea
