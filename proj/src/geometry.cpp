#include "planecover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace planecover {

double geom_eps() {
    static const double eps = [] {
        if (const char* s = std::getenv("PLANECOVER_EPS")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && std::isfinite(v) && v > 0.0) return v;
        }
        return 1e-9;
    }();
    return eps;
}

namespace {

constexpr double kAreaZero = 1e-12;  // polygons below this area collapse to empty

double signed_area(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += cross(a, b);
    }
    return 0.5 * s;
}

}  // namespace

ConvexPolygon normalize_polygon(ConvexPolygon p) {
    const double eps = geom_eps();
    std::vector<Point>& v = p.v;
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        // merge consecutive near-duplicates
        std::vector<Point> merged;
        merged.reserve(v.size());
        for (const Point& q : v) {
            if (merged.empty() || (q - merged.back()).norm() > eps) merged.push_back(q);
        }
        while (merged.size() >= 2 && (merged.front() - merged.back()).norm() <= eps) merged.pop_back();
        if (merged.size() != v.size()) changed = true;
        v = std::move(merged);
        if (v.size() < 3) break;
        // drop collinear vertices (turn below eps)
        std::vector<Point> proper;
        proper.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[(i + v.size() - 1) % v.size()];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % v.size()];
            const Point u = b - a;
            const Point w = c - b;
            if (std::abs(cross(u, w)) <= eps * u.norm() * w.norm()) {
                changed = true;
                continue;
            }
            proper.push_back(b);
        }
        v = std::move(proper);
    }
    if (v.size() < 3 || std::abs(signed_area(v)) < kAreaZero) v.clear();
    return p;
}

ConvexPolygon make_convex_polygon(std::vector<Point> vertices) {
    for (const Point& q : vertices) {
        if (!q.allFinite()) throw std::invalid_argument("polygon vertex is not finite");
    }
    ConvexPolygon p{std::move(vertices)};
    p = normalize_polygon(std::move(p));
    if (!p.empty() && !polygon_is_valid(p)) {
        throw std::invalid_argument("vertices are not a counterclockwise convex polygon");
    }
    return p;
}

double polygon_area(const ConvexPolygon& p) {
    if (p.v.size() < 3) return 0.0;
    return std::abs(signed_area(p.v));
}

bool polygon_is_valid(const ConvexPolygon& p) {
    if (p.empty()) return true;
    const std::vector<Point>& v = p.v;
    if (v.size() < 3) return false;
    const double eps = geom_eps();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const Point& c = v[(i + 2) % v.size()];
        const Point u = b - a;
        const Point w = c - b;
        if (u.norm() <= eps || !b.allFinite()) return false;
        if (cross(u, w) <= eps * u.norm() * w.norm()) return false;  // ccw turn required
    }
    return true;
}

ConvexPolygon clip_halfplane(const ConvexPolygon& p, const HalfPlane& h) {
    if (p.empty()) return p;
    const double eps = geom_eps();
    std::vector<Point> out;
    out.reserve(p.v.size() + 1);
    const std::size_t n = p.v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p.v[i];
        const Point& b = p.v[(i + 1) % n];
        const double da = a.dot(h.normal) - h.offset;
        const double db = b.dot(h.normal) - h.offset;
        if (da <= eps) out.push_back(a);
        if ((da < -eps && db > eps) || (da > eps && db < -eps)) {
            const double t = da / (da - db);
            out.push_back(a + t * (b - a));
        }
    }
    return normalize_polygon(ConvexPolygon{std::move(out)});
}

ConvexPolygon intersect_convex(const ConvexPolygon& p, const ConvexPolygon& q) {
    ConvexPolygon r = p;
    const std::size_t n = q.v.size();
    for (std::size_t i = 0; i < n && !r.empty(); ++i) {
        const Point& a = q.v[i];
        const Point& b = q.v[(i + 1) % n];
        Point edge = b - a;
        Point normal{edge.y(), -edge.x()};  // inward side of a ccw edge is normal.dot(p) <= normal.dot(a)
        normal.normalize();
        r = clip_halfplane(r, HalfPlane{normal, normal.dot(a)});
    }
    return r;
}

ConvexPolygon square_polygon(double half) {
    if (!(half > 0.0)) throw std::invalid_argument("square half-width must be positive");
    return ConvexPolygon{{Point{half, -half}, Point{half, half}, Point{-half, half}, Point{-half, -half}}};
}

double distance_to_polygon(const Point& p, const ConvexPolygon& poly) {
    if (poly.empty()) throw std::invalid_argument("distance to empty polygon");
    const std::size_t n = poly.v.size();
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly.v[i];
        const Point& b = poly.v[(i + 1) % n];
        const Point e = b - a;
        if (cross(e, p - a) < 0.0) inside = false;
        const double t = std::clamp((p - a).dot(e) / e.squaredNorm(), 0.0, 1.0);
        best = std::min(best, (p - (a + t * e)).norm());
    }
    return inside ? 0.0 : best;
}

std::optional<Chord> common_chord(const Disk& d1, const Disk& d2) {
    const double eps = geom_eps();
    const Point delta = d2.center - d1.center;
    const double d = delta.norm();
    if (d <= eps) return std::nullopt;  // concentric: no radical line
    if (d > 2.0 + eps) return std::nullopt;
    const Point n = delta / d;
    const Point mid = d1.center + 0.5 * d * n;
    const double half2 = std::max(1.0 - 0.25 * d * d, 0.0);
    const double half = std::sqrt(half2);
    const Point perp{-n.y(), n.x()};
    Chord c;
    c.a = mid - half * perp;
    c.b = mid + half * perp;
    c.carrier = HalfPlane{n, n.dot(mid)};  // contains d1.center
    return c;
}

double angle_at(const Point& a, const Point& b, const Point& c) {
    const Point u = a - b;
    const Point w = c - b;
    const double nu = u.norm();
    const double nw = w.norm();
    if (nu <= geom_eps() || nw <= geom_eps()) {
        throw std::invalid_argument("angle_at: endpoint coincides with the vertex");
    }
    return std::atan2(std::abs(cross(u, w)), u.dot(w));
}

double circular_segment_area(double theta) {
    if (!(theta > 0.0 && theta < 2.0 * M_PI)) {
        throw std::invalid_argument("segment angle must lie in (0, 2*pi)");
    }
    return 0.5 * (theta - std::sin(theta));
}

bool disk_intersects_open_square(const Disk& d, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("square half-width must be positive");
    const double dx = std::max(std::abs(d.center.x()) - lambda, 0.0);
    const double dy = std::max(std::abs(d.center.y()) - lambda, 0.0);
    return std::hypot(dx, dy) < Disk::radius;
}

}  // namespace planecover
