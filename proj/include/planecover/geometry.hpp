#pragma once

// Basic planar primitives for unit-disk coverings: points, disks of radius 1,
// half-planes, chords, and convex polygons with counterclockwise orientation.
// All tolerances default to the module epsilon (1e-9), overridable through the
// PLANECOVER_EPS environment variable (read once at startup).

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace planecover {

using Point = Eigen::Vector2d;

// Geometric epsilon used by degeneracy predicates and containment slack.
double geom_eps();

// z-component of the cross product of two plane vectors.
inline double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

// Unit disk; the radius is fixed at 1 throughout.
struct Disk {
    Point center{0.0, 0.0};
    static constexpr double radius = 1.0;
};

// Closed half-plane {p : p.dot(normal) <= offset}; normal is kept unit length.
struct HalfPlane {
    Point normal{1.0, 0.0};
    double offset = 0.0;

    bool contains(const Point& p, double slack = 0.0) const {
        return p.dot(normal) <= offset + slack;
    }
};

// Flips a half-plane to the closure of its complement.
inline HalfPlane opposite(const HalfPlane& h) { return HalfPlane{-h.normal, -h.offset}; }

// Chord of a unit circle: endpoints a, b plus the half-plane that contains the
// bulk of the disk (the side the bounded region lies on). Zero-length chords
// represent tangency points.
struct Chord {
    Point a{0.0, 0.0};
    Point b{0.0, 0.0};
    HalfPlane carrier;

    double length() const { return (b - a).norm(); }
};

// Convex polygon, vertices in counterclockwise order with no repeated or
// collinear ("improper") vertices. An empty vertex list is the empty polygon.
struct ConvexPolygon {
    std::vector<Point> v;

    bool empty() const { return v.empty(); }
    std::size_t size() const { return v.size(); }
};

// Merges near-duplicate consecutive vertices and drops collinear ones, then
// normalizes degenerate results (area < 1e-12) to the empty polygon.
ConvexPolygon normalize_polygon(ConvexPolygon p);

// Builds a normalized polygon from raw counterclockwise vertices; throws
// std::invalid_argument when the input is not convex or not counterclockwise.
ConvexPolygon make_convex_polygon(std::vector<Point> vertices);

// Shoelace area; 0 for the empty polygon, always >= 0 for valid input.
double polygon_area(const ConvexPolygon& p);

// True when every vertex satisfies the convex/ccw/proper-vertex contract.
bool polygon_is_valid(const ConvexPolygon& p);

// Clips a convex polygon by one half-plane (Sutherland-Hodgman step).
// The result is normalized; clipping is idempotent.
ConvexPolygon clip_halfplane(const ConvexPolygon& p, const HalfPlane& h);

// Intersection of two convex polygons (iterated half-plane clipping).
ConvexPolygon intersect_convex(const ConvexPolygon& p, const ConvexPolygon& q);

// Axis-aligned square [-half, half]^2 as a polygon.
ConvexPolygon square_polygon(double half);

// 0 inside the polygon, otherwise the distance to its boundary.
double distance_to_polygon(const Point& p, const ConvexPolygon& poly);

// Common chord of two unit disks. Returns std::nullopt when the disks are
// disjoint (center distance > 2 beyond tolerance) or concentric; tangent disks
// yield a zero-length chord at the tangency point. The carrier half-plane
// faces d1's side of the radical line.
std::optional<Chord> common_chord(const Disk& d1, const Disk& d2);

// Interior angle at vertex b of the path a-b-c, in [0, pi]. Throws
// std::invalid_argument when a or c coincides with b.
double angle_at(const Point& a, const Point& b, const Point& c);

// Area of the circular segment of a unit circle cut by a chord with central
// angle theta, theta in (0, 2*pi): (theta - sin(theta)) / 2.
double circular_segment_area(double theta);

// True when the disk meets the open square Int([-lambda, lambda]^2), i.e. the
// center lies strictly within distance 1 of the closed square.
bool disk_intersects_open_square(const Disk& d, double lambda);

}  // namespace planecover
