#include <gtest/gtest.h>

#include <random>

#include "htarea/errors.hpp"
#include "htarea/hilbert.hpp"
#include "oracles.hpp"

using namespace htarea;

namespace {

bool has_vertex(const std::vector<Vec2>& vs, Vec2 w, double tol) {
    for (const auto& v : vs)
        if (norm(v - w) < tol) return true;
    return false;
}

Vec2 random_in_T0(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.001, 1.999);
    for (;;) {
        const Vec2 p{u(rng), u(rng)};
        if (p.x + p.y < 1.999) return p;
    }
}

Vec2 random_in_Q0(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.999, 0.999);
    return {u(rng), u(rng)};
}

}  // namespace

TEST(HilbertDistance, AxisOfSquare) {
    const auto q0 = standard_square();
    EXPECT_NEAR(hilbert_distance(q0, {0, 0}, {0.5, 0}), 0.5 * std::log(3.0), 1e-15);
    for (double x : {0.1, 0.9, 0.999}) EXPECT_NEAR(hilbert_distance(q0, {0, 0}, {x, 0}), std::atanh(x), 1e-12);
    EXPECT_EQ(hilbert_distance(q0, {0.3, 0.2}, {0.3, 0.2}), 0.0);
    EXPECT_THROW(hilbert_distance(q0, {0, 0}, {1, 0}), PointOutsideDomain);
    EXPECT_THROW(hilbert_distance(q0, {2, 0}, {0, 0}), PointOutsideDomain);
}

TEST(HilbertDistance, MetricAxioms) {
    std::mt19937_64 rng(21);
    const auto t0 = standard_triangle();
    for (int i = 0; i < 1000; ++i) {
        const Vec2 a = random_in_T0(rng), b = random_in_T0(rng), c = random_in_T0(rng);
        const double ab = hilbert_distance(t0, a, b), bc = hilbert_distance(t0, b, c),
                     ac = hilbert_distance(t0, a, c);
        EXPECT_GT(ab, 0.0);
        EXPECT_NEAR(ab, hilbert_distance(t0, b, a), 1e-12 * std::max(1.0, ab));
        EXPECT_LE(ac, ab + bc + 1e-12);
    }
}

TEST(HilbertDistance, ProjectiveInvariance) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        const auto omega = ConvexPolygon(oracle::random_convex_polygon(rng, 3 + i % 5));
        const auto g = oracle::random_transform(rng, omega.vertices());
        const ConvexPolygon gomega(oracle::apply(g, omega.vertices()));
        const Vec2 p = oracle::random_interior(rng, omega), q = oracle::random_interior(rng, omega);
        const double d = hilbert_distance(omega, p, q);
        EXPECT_NEAR(hilbert_distance(gomega, g.apply(p), g.apply(q)), d, 1e-9 * std::max(1.0, d));
    }
}

TEST(FinslerNorm, Basics) {
    const auto q0 = standard_square();
    EXPECT_NEAR(finsler_norm(q0, {{0, 0}, {1, 0}}), 1.0, 1e-15);
    EXPECT_THROW(finsler_norm(q0, {{0, 0}, {0, 0}}), ZeroVector);
    EXPECT_THROW(finsler_norm(q0, {{1, 1}, {1, 0}}), PointOutsideDomain);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 300; ++i) {
        const Vec2 p = random_in_Q0(rng), xi{u(rng), u(rng)};
        const double c = u(rng);
        const double n = finsler_norm(q0, {p, xi});
        EXPECT_NEAR(finsler_norm(q0, {p, c * xi}), std::abs(c) * n, 1e-12 * n * (1 + std::abs(c)));
        EXPECT_NEAR(finsler_norm(q0, {p, -xi}), n, 1e-12 * n);
    }
}

TEST(FinslerNorm, DerivativeOfDistance) {
    std::mt19937_64 rng(24);
    const auto t0 = standard_triangle();
    std::uniform_real_distribution<double> u(-1, 1);
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        Vec2 p = random_in_T0(rng);
        p = 0.8 * p + 0.2 * Vec2{2.0 / 3, 2.0 / 3};
        const Vec2 xi{u(rng), u(rng)};
        const double fwd = hilbert_distance(t0, p, p + h * xi) / h;
        EXPECT_NEAR(fwd, finsler_norm(t0, {p, xi}), 1e-5 * std::max(1.0, fwd));
    }
}

TEST(UnitBall, TriangleVertexFormula) {
    const auto t0 = standard_triangle();
    std::mt19937_64 rng(25);
    for (int i = 0; i < 200; ++i) {
        const Vec2 p = random_in_T0(rng);
        const double x = p.x, y = p.y;
        const auto full = unit_ball(t0, p).full();
        for (const Vec2 xi : {Vec2{(x + y - 2) * x, (x + y - 2) * y}, Vec2{x * (2 - x), -x * y},
                              Vec2{-x * y, y * (2 - y)}}) {
            EXPECT_TRUE(has_vertex(full, xi, 1e-12));
            EXPECT_TRUE(has_vertex(full, -xi, 1e-12));
        }
    }
}

TEST(UnitBall, SquareAtHalfZero) {
    const auto full = unit_ball(standard_square(), {0.5, 0}).full();
    EXPECT_EQ(full.size(), 8u);
    for (const Vec2 xi : {Vec2{0.5, 1}, Vec2{-0.75, 0.5}, Vec2{-0.75, -0.5}, Vec2{0.5, -1}}) {
        EXPECT_TRUE(has_vertex(full, xi, 1e-14));
        EXPECT_TRUE(has_vertex(full, -xi, 1e-14));
    }
}

TEST(UnitBall, VerticesHaveUnitNormAndCountBound) {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 500; ++i) {
        const int k = 3 + i % 6;
        const ConvexPolygon omega(oracle::random_convex_polygon(rng, k));
        const Vec2 p = oracle::random_interior(rng, omega);
        const auto ball = unit_ball(omega, p);
        const auto full = ball.full();
        EXPECT_GE(full.size(), static_cast<std::size_t>(k));
        EXPECT_LE(full.size(), static_cast<std::size_t>(2 * k));
        for (std::size_t j = 0; j < full.size(); ++j) {
            EXPECT_NEAR(finsler_norm(omega, {p, full[j]}), 1.0, 1e-10);
            const Vec2 mid = 0.5 * (full[j] + full[(j + 1) % full.size()]);
            EXPECT_LE(finsler_norm(omega, {p, mid}), 1.0 + 1e-10);
        }
    }
}

TEST(UnitBall, DiagonalPointMergesCollinearVertices) {
    // on a diagonal of Q0 two vertex directions are opposite
    const auto ball = unit_ball(standard_square(), {0.3, 0.3});
    EXPECT_EQ(ball.vertex_count(), 6u);
    EXPECT_EQ(unit_ball(standard_square(), {0, 0}).vertex_count(), 4u);
}

TEST(Dual, DiamondAndSquare) {
    const auto diamond = CentrallySymmetricPolygon::from_points(std::vector<Vec2>{{1, 0}, {0, 1}});
    const auto sq = dual_polygon(diamond).full();
    ASSERT_EQ(sq.size(), 4u);
    for (const Vec2 v : {Vec2{1, 1}, Vec2{-1, 1}, Vec2{-1, -1}, Vec2{1, -1}}) EXPECT_TRUE(has_vertex(sq, v, 1e-15));
    const auto back = dual_polygon(dual_polygon(diamond)).full();
    for (const Vec2 v : {Vec2{1, 0}, Vec2{0, 1}, Vec2{-1, 0}, Vec2{0, -1}}) EXPECT_TRUE(has_vertex(back, v, 1e-15));
}

TEST(Dual, SupportFunctionAndInvolution) {
    std::mt19937_64 rng(27);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 500; ++i) {
        std::vector<Vec2> pts;
        for (int j = 0; j < 3 + i % 4; ++j) pts.push_back({u(rng), u(rng)});
        CentrallySymmetricPolygon b = CentrallySymmetricPolygon::from_points(std::vector<Vec2>{{1, 0}, {0, 1}});
        try {
            b = CentrallySymmetricPolygon::from_points(pts);
        } catch (const Error&) {
            continue;
        }
        const auto full = b.full();
        const auto dual = dual_polygon(b);
        for (const auto& w : dual.full()) EXPECT_NEAR(oracle::support(full, w), 1.0, 1e-10);
        const auto back = dual_polygon(dual).full();
        ASSERT_EQ(back.size(), full.size());
        for (const auto& v : full) EXPECT_TRUE(has_vertex(back, v, 1e-10 * (1 + norm(v))));
    }
}

TEST(DualBallArea, ReferenceValues) {
    EXPECT_NEAR(dual_ball_area(standard_triangle(), {2.0 / 3, 2.0 / 3}), 81.0 / 16.0, 1e-13);
    // true polar areas: the l1 diamond at the centre, an octagon at (1/2, 0)
    EXPECT_NEAR(dual_ball_area(standard_square(), {0, 0}), 2.0, 1e-14);
    EXPECT_NEAR(dual_ball_area(standard_square(), {0.5, 0}), 10.0 / 3.0, 1e-14);
}

TEST(DualBallArea, ProjectiveInvarianceOfMeasure) {
    // |B*_p| dx dy is invariant: area at gp times |Jacobian of g at p| equals area at p
    std::mt19937_64 rng(28);
    for (int i = 0; i < 200; ++i) {
        const ConvexPolygon omega(oracle::random_convex_polygon(rng, 3 + i % 4));
        const auto g = oracle::random_transform(rng, omega.vertices());
        const ConvexPolygon gomega(oracle::apply(g, omega.vertices()));
        const Vec2 p = oracle::random_interior(rng, omega);
        const double h = 1e-6;
        const Vec2 gx = (g.apply(p + Vec2{h, 0}) - g.apply(p - Vec2{h, 0})) / (2 * h);
        const Vec2 gy = (g.apply(p + Vec2{0, h}) - g.apply(p - Vec2{0, h})) / (2 * h);
        const double jac = std::abs(cross(gx, gy));
        const double a = dual_ball_area(omega, p);
        EXPECT_NEAR(dual_ball_area(gomega, g.apply(p)) * jac, a, 1e-7 * a);
    }
}

TEST(DualBallArea, MonotoneUnderInclusion) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> grow(1.01, 1.8), u(-0.3, 0.3);
    for (int i = 0; i < 500; ++i) {
        const ConvexPolygon inner(oracle::random_convex_polygon(rng, 3 + i % 5));
        // a larger domain: scale about an interior point and add one extra far vertex
        const Vec2 c = inner.centroid();
        std::vector<Vec2> big;
        const double s = grow(rng);
        for (const auto& v : inner.vertices()) big.push_back(c + s * (v - c));
        const ConvexPolygon outer(convex_hull(big, 1e-12));
        const Vec2 p = oracle::random_interior(rng, inner);
        EXPECT_GE(dual_ball_area(inner, p), dual_ball_area(outer, p) * (1 - 1e-12));
    }
    // a triangle containing the square
    const ConvexPolygon tri({{-1, -1}, {3, -1}, {-1, 3}});
    EXPECT_GE(dual_ball_area(standard_square(), {0.2, -0.1}), dual_ball_area(tri, {0.2, -0.1}));
}

TEST(Integrands, TriangleClosedFormMatchesPipeline) {
    EXPECT_NEAR(integrand_T0(2.0 / 3, 2.0 / 3), 81.0 / 16.0, 1e-14);
    std::mt19937_64 rng(30);
    const auto t0 = standard_triangle();
    for (int i = 0; i < 1000; ++i) {
        const Vec2 p = random_in_T0(rng);
        const double a = integrand_T0(p.x, p.y);
        EXPECT_NEAR(dual_ball_area(t0, p), a, 1e-10 * a);
        EXPECT_NEAR(integrand_T0(p.y, p.x), a, 1e-12 * a);
    }
    EXPECT_THROW(integrand_T0(1.5, 0.6), PointOutsideDomain);
}

TEST(Integrands, SquareClosedFormIsHalfThePipeline) {
    EXPECT_NEAR(integrand_Q0(0, 0), 1.0, 1e-15);
    EXPECT_NEAR(integrand_Q0(0.5, 0), 5.0 / 3.0, 1e-15);
    std::mt19937_64 rng(31);
    const auto q0 = standard_square();
    for (int i = 0; i < 1000; ++i) {
        const Vec2 p = random_in_Q0(rng);
        const double a = integrand_Q0(p.x, p.y);
        EXPECT_NEAR(dual_ball_area(q0, p), 2.0 * a, 2e-10 * a);
        for (const Vec2 s : {Vec2{-p.x, p.y}, Vec2{p.x, -p.y}, Vec2{p.y, p.x}, Vec2{-p.y, -p.x}})
            EXPECT_NEAR(integrand_Q0(s.x, s.y), a, 1e-15 * a);
    }
    // continuous across the diagonals
    EXPECT_NEAR(integrand_Q0(0.4, 0.4 + 1e-12), integrand_Q0(0.4, 0.4), 1e-10);
    EXPECT_THROW(integrand_Q0(1.0, 0.0), PointOutsideDomain);
}
