#include <gtest/gtest.h>

#include <random>

#include "htarea/errors.hpp"
#include "htarea/projective.hpp"
#include "oracles.hpp"

using namespace htarea;

TEST(Wedge3, IdentityAndRepeatedColumn) {
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    EXPECT_DOUBLE_EQ(wedge3(e1, e2, e3), 1.0);
    EXPECT_DOUBLE_EQ(wedge3(e1, e1, e3), 0.0);
}

TEST(Wedge3, MatchesCofactorOracle) {
    const Vec3 a{1, 1, 1}, b{1, 0, 1}, c{0, 2, 1};
    EXPECT_NEAR(wedge3(a, b, c), oracle::det3(a, b, c), 1e-15);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 200; ++i) {
        const Vec3 x{u(rng), u(rng), u(rng)}, y{u(rng), u(rng), u(rng)}, z{u(rng), u(rng), u(rng)};
        EXPECT_NEAR(wedge3(x, y, z), oracle::det3(x, y, z), 1e-12);
    }
}

TEST(CrossRatio, Convention) {
    for (double t : {0.3, 2.0, -5.0})
        EXPECT_NEAR(cross_ratio(t, 1.0, 0.0, ProjScalar::infinity()), t, 1e-15);
}

TEST(CrossRatio, HarmonicConjugate) {
    // 1/b is the mean of 1/a2 and -1/a1
    const double a1 = -0.7, a2 = 1.9;
    const double b = 1.0 / (0.5 * (1.0 / a2 + 1.0 / (-a1)));
    ASSERT_TRUE(a1 < 0 && 0 < b && b < a2);
    EXPECT_NEAR(cross_ratio(0.0, b, a2, -a1), -1.0, 1e-14);
}

TEST(CrossRatio, SwappingLastTwoInverts) {
    const double v = cross_ratio(0.1, 0.7, 2.3, -4.0);
    EXPECT_NEAR(cross_ratio(0.1, 0.7, -4.0, 2.3), 1.0 / v, 1e-14);
}

TEST(CrossRatio, AffineInvariance) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 500; ++i) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const double s = u(rng), m = u(rng);
        if (std::abs(s) < 0.1) continue;
        try {
            const double r = cross_ratio(a, b, c, d);
            auto f = [&](double x) { return s * x + m; };
            EXPECT_NEAR(cross_ratio(f(a), f(b), f(c), f(d)), r, 1e-10 * std::max(1.0, std::abs(r)));
        } catch (const DegenerateCrossRatio&) {
        }
    }
}

TEST(CrossRatio, Degenerate) {
    EXPECT_THROW(cross_ratio(1.0, 1.0, 0.0, 2.0), DegenerateCrossRatio);
    EXPECT_THROW(cross_ratio(ProjScalar::infinity(), 1.0, 0.0, ProjScalar::infinity()),
                 DegenerateCrossRatio);
}

TEST(ProjTransform, SingularRejected) {
    EXPECT_THROW(ProjTransform({1, 2, 3, 2, 4, 6, 0, 0, 1}), DegenerateConfiguration);
}

TEST(Correspondence, IdentityUpToScale) {
    const std::array<Vec2, 4> s = {Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}};
    const auto g = transform_from_correspondence(s, s);
    const auto& m = g.matrix();
    for (int i = 0; i < 9; ++i)
        EXPECT_NEAR(m[i] / m[8], (i % 4 == 0) ? 1.0 : 0.0, 1e-12);
}

TEST(Correspondence, UnitSquareToQ0KeepsMidpoints) {
    const std::array<Vec2, 4> s = {Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}};
    const std::array<Vec2, 4> d = {Vec2{-1, -1}, Vec2{1, -1}, Vec2{1, 1}, Vec2{-1, 1}};
    const auto g = transform_from_correspondence(s, d);
    for (int i = 0; i < 4; ++i) {
        const Vec2 mid = 0.5 * (s[i] + s[(i + 1) % 4]);
        const Vec2 img = g.apply(mid);
        EXPECT_TRUE(point_in_open_segment(img, d[i], d[(i + 1) % 4]));
        EXPECT_NEAR(norm(img - 0.5 * (d[i] + d[(i + 1) % 4])), 0.0, 1e-12);
    }
}

TEST(Correspondence, CollinearRejected) {
    const std::array<Vec2, 4> s = {Vec2{0, 0}, Vec2{1, 1}, Vec2{2, 2}, Vec2{0, 1}};
    const std::array<Vec2, 4> d = {Vec2{-1, -1}, Vec2{1, -1}, Vec2{1, 1}, Vec2{-1, 1}};
    EXPECT_THROW(transform_from_correspondence(s, d), DegenerateConfiguration);
    EXPECT_THROW(transform_from_correspondence(d, s), DegenerateConfiguration);
}

TEST(Correspondence, RoundTripRandom) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    int tested = 0;
    while (tested < 1000) {
        std::array<Vec2, 4> s, d;
        for (auto& p : s) p = {u(rng), u(rng)};
        for (auto& p : d) p = {u(rng), u(rng)};
        bool ok = true;
        for (const auto* q : {&s, &d})
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int k = j + 1; k < 4; ++k)
                        ok = ok && std::abs(cross((*q)[j] - (*q)[i], (*q)[k] - (*q)[i])) > 0.3;
        if (!ok) continue;
        const auto g = transform_from_correspondence(s, d);
        for (int i = 0; i < 4; ++i) {
            const Vec2 r = g.apply(s[i]);
            EXPECT_NEAR(r.x, d[i].x, 1e-10);
            EXPECT_NEAR(r.y, d[i].y, 1e-10);
        }
        ++tested;
    }
}

TEST(ProjTransform, InverseAndComposition) {
    std::mt19937_64 rng(9);
    const auto g = oracle::random_transform(rng, {{0, 0}});
    const auto h = g * g.inverse();
    const auto& m = h.matrix();
    for (int i = 0; i < 9; ++i) EXPECT_NEAR(m[i] / m[0], (i % 4 == 0) ? 1.0 : 0.0, 1e-12);
}

TEST(ConvexPolygon, NormalizesToCounterClockwise) {
    const ConvexPolygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    EXPECT_GT(signed_area(p.vertices()), 0.0);
}

TEST(ConvexPolygon, RejectsBadInput) {
    EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}}), InvalidPolygon);
    EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), InvalidPolygon);
    EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), InvalidPolygon);
    EXPECT_THROW(ConvexPolygon({{0, 0}, {2, 0}, {0.5, 0.5}, {0, 2}}), InvalidPolygon);
    // self-intersecting bow tie
    EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InvalidPolygon);
}

TEST(Shoelace, Squares) {
    EXPECT_DOUBLE_EQ(shoelace_area(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 1.0);
    EXPECT_DOUBLE_EQ(shoelace_area(ConvexPolygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})), 4.0);
}

TEST(Shoelace, MatchesFanOracleAndIsRelabelInvariant) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto v = oracle::random_convex_polygon(rng, 6);
        const double a = shoelace_area(ConvexPolygon(v));
        EXPECT_NEAR(a, oracle::fan_area(v), 1e-12);
        std::rotate(v.begin(), v.begin() + 2, v.end());
        for (auto& p : v) p = p + Vec2{3.5, -7.25};
        EXPECT_NEAR(shoelace_area(ConvexPolygon(v)), a, 1e-12);
    }
}

TEST(LineIntersect, BasicAndParallel) {
    const Vec2 p = line_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0});
    EXPECT_NEAR(p.x, 0.5, 1e-15);
    EXPECT_NEAR(p.y, 0.5, 1e-15);
    EXPECT_THROW(line_intersect({0, 0}, {1, 1}, {0, 1}, {1, 2}), ParallelLines);
}

TEST(Segments, OnAndOpen) {
    EXPECT_TRUE(point_on_segment({0.5, 0.5}, {0, 0}, {1, 1}));
    EXPECT_TRUE(point_on_segment({0, 0}, {0, 0}, {1, 1}));
    EXPECT_FALSE(point_in_open_segment({0, 0}, {0, 0}, {1, 1}));
    EXPECT_FALSE(point_on_segment({1.5, 1.5}, {0, 0}, {1, 1}));
    EXPECT_FALSE(point_on_segment({0.5, 0.6}, {0, 0}, {1, 1}));
}

TEST(Contains, ThreeWay) {
    const ConvexPolygon sq({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    EXPECT_EQ(polygon_contains(sq, {0, 0}), Containment::inside);
    EXPECT_EQ(polygon_contains(sq, {1, 0.3}), Containment::boundary);
    EXPECT_EQ(polygon_contains(sq, {1, 1}), Containment::boundary);
    EXPECT_EQ(polygon_contains(sq, {1.01, 0}), Containment::outside);
}

TEST(ConvexHull, DropsInteriorAndCollinear) {
    const auto h = convex_hull({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 0}}, 1e-12);
    EXPECT_EQ(h.size(), 4u);
}

TEST(ClipHalfplane, HalvesSquare) {
    const ConvexPolygon sq({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const auto half = clip_halfplane(sq, {1, 0}, 0.0);
    ASSERT_TRUE(half);
    EXPECT_NEAR(shoelace_area(*half), 2.0, 1e-15);
    EXPECT_FALSE(clip_halfplane(sq, {1, 0}, -2.0));
    EXPECT_FALSE(clip_halfplane(sq, {1, 0}, -1.0));
}

TEST(CentrallySymmetric, FromPointsHalfConvention) {
    const std::vector<Vec2> pts = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto b = CentrallySymmetricPolygon::from_points(pts);
    EXPECT_EQ(b.vertex_count(), 4u);
    for (const auto& v : b.half()) EXPECT_TRUE(v.y > 0 || (v.y == 0 && v.x > 0));
    EXPECT_NEAR(shoelace_area(b.polygon()), 2.0, 1e-15);
}
