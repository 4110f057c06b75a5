#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace htarea {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 lift(Vec2 p) { return {p.x, p.y, 1.0}; }

// det of the matrix with columns a, b, c
double wedge3(Vec3 a, Vec3 b, Vec3 c);

// A point of the projective line: a finite value or infinity.
class ProjScalar {
public:
    ProjScalar(double v) : value_(v), infinite_(false) {}  // NOLINT: implicit on purpose
    static ProjScalar infinity() { return ProjScalar(); }
    bool is_infinite() const { return infinite_; }
    double value() const { return value_; }

private:
    ProjScalar() : value_(0.0), infinite_(true) {}
    double value_;
    bool infinite_;
};

// (c-a)/(c-b) * (d-b)/(d-a); [t:1:0:inf] = t.
double cross_ratio(ProjScalar a, ProjScalar b, ProjScalar c, ProjScalar d);

class ProjTransform {
public:
    // row-major 3x3
    explicit ProjTransform(const std::array<double, 9>& m);
    static ProjTransform identity();

    const std::array<double, 9>& matrix() const { return m_; }
    Vec3 apply(Vec3 v) const;
    // Throws DegenerateConfiguration if p is sent to the line at infinity.
    Vec2 apply(Vec2 p) const;
    ProjTransform inverse() const;
    ProjTransform operator*(const ProjTransform& rhs) const;
    double determinant() const;

private:
    std::array<double, 9> m_;
};

ProjTransform transform_from_correspondence(const std::array<Vec2, 4>& src,
                                            const std::array<Vec2, 4>& dst);

// Bounded, strictly convex, stored counter-clockwise.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Vec2& operator[](std::size_t i) const { return v_[i % v_.size()]; }
    Vec2 centroid() const;
    // length of the longest vertex coordinate, for relative tolerances
    double scale() const;

private:
    std::vector<Vec2> v_;
};

double shoelace_area(const ConvexPolygon& p);
double signed_area(std::span<const Vec2> pts);

// Intersection of line(a1,a2) with line(b1,b2). Throws ParallelLines.
Vec2 line_intersect(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2);

// True if p lies on the closed segment [a,b] (relative tolerance tol::conv).
bool point_on_segment(Vec2 p, Vec2 a, Vec2 b);
// True if p lies strictly between a and b on that segment.
bool point_in_open_segment(Vec2 p, Vec2 a, Vec2 b);

enum class Containment { inside, boundary, outside };
Containment polygon_contains(const ConvexPolygon& poly, Vec2 p);

// Andrew's monotone chain; drops duplicates and collinear points within rel_tol.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double rel_tol);

// Part of poly with dot(n, p) <= c. Empty (or degenerate) results give nullopt.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, Vec2 n, double c);

// Origin-symmetric convex polygon stored as its upper half, left to right.
class CentrallySymmetricPolygon {
public:
    explicit CentrallySymmetricPolygon(std::vector<Vec2> half);
    // Hull of the points and their negatives.
    static CentrallySymmetricPolygon from_points(std::span<const Vec2> pts);

    const std::vector<Vec2>& half() const { return half_; }
    // All 2k vertices, counter-clockwise.
    std::vector<Vec2> full() const;
    ConvexPolygon polygon() const { return ConvexPolygon(full()); }
    std::size_t vertex_count() const { return 2 * half_.size(); }

private:
    std::vector<Vec2> half_;
};

}  // namespace htarea
