#include "planecover/disk_region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planecover {

namespace {

Point circle_point(const Point& center, double angle) {
    return center + Point{std::cos(angle), std::sin(angle)};
}

}  // namespace

BoundaryPiece chord_piece(const Point& p0, const Point& p1) {
    BoundaryPiece b;
    b.kind = PieceKind::chord;
    b.p0 = p0;
    b.p1 = p1;
    return b;
}

BoundaryPiece arc_piece(const Point& center, double a0, double a1) {
    if (a1 < a0 || a1 - a0 > 2.0 * M_PI + geom_eps()) {
        throw std::invalid_argument("arc must run counterclockwise over at most a full turn");
    }
    BoundaryPiece b;
    b.kind = PieceKind::arc;
    b.a0 = a0;
    b.a1 = std::min(a1, a0 + 2.0 * M_PI);
    b.p0 = circle_point(center, b.a0);
    b.p1 = circle_point(center, b.a1);
    return b;
}

DiskRegion unit_disk_region(const Point& center) {
    DiskRegion r;
    r.center = center;
    r.pieces.push_back(arc_piece(center, 0.0, 2.0 * M_PI));
    return r;
}

DiskRegion region_M() {
    const double s = std::sqrt(3.0) / 2.0;
    const Point a0{0.0, -1.0};
    const Point b0{s, 0.5};
    const Point b0m{-s, 0.5};
    DiskRegion r;
    r.center = Point{0.0, 0.0};
    r.pieces.push_back(chord_piece(a0, b0));
    r.pieces.push_back(arc_piece(r.center, M_PI / 6.0, 5.0 * M_PI / 6.0));
    r.pieces.push_back(chord_piece(b0m, a0));
    return r;
}

DiskRegion region_M_theta(double theta) {
    const double eps = geom_eps();
    if (!(theta >= 2.0 * M_PI / 3.0 - eps && theta <= M_PI + eps)) {
        throw std::invalid_argument("theta must lie in [2*pi/3, pi]");
    }
    theta = std::clamp(theta, 2.0 * M_PI / 3.0, M_PI);
    const Point c{0.0, 0.0};
    // chord midpoint directions at -pi/2 +/- theta/2; each sqrt(3)-chord spans
    // a central angle of 2*pi/3 around its midpoint direction
    const double m1 = -M_PI / 2.0 + theta / 2.0;
    const double m2 = -M_PI / 2.0 - theta / 2.0;
    const double a1 = m1 - M_PI / 3.0, b1 = m1 + M_PI / 3.0;
    const double a2 = m2 - M_PI / 3.0, b2 = m2 + M_PI / 3.0;
    DiskRegion r;
    r.center = c;
    // the first arc spans theta - 2*pi/3, which vanishes at the lower end of
    // the theta range (and can round a hair negative there)
    if (a1 - b2 > 0.0) r.pieces.push_back(arc_piece(c, b2, a1));
    r.pieces.push_back(chord_piece(circle_point(c, a1), circle_point(c, b1)));
    r.pieces.push_back(arc_piece(c, b1, a2 + 2.0 * M_PI));           // span 4*pi/3 - theta
    r.pieces.push_back(chord_piece(circle_point(c, a2), circle_point(c, b2)));
    return r;
}

Point piece_start(const DiskRegion& r, const BoundaryPiece& piece) {
    return piece.kind == PieceKind::chord ? piece.p0 : circle_point(r.center, piece.a0);
}

Point piece_end(const DiskRegion& r, const BoundaryPiece& piece) {
    return piece.kind == PieceKind::chord ? piece.p1 : circle_point(r.center, piece.a1);
}

double piece_length(const BoundaryPiece& piece) {
    return piece.kind == PieceKind::chord ? (piece.p1 - piece.p0).norm() : piece.a1 - piece.a0;
}

bool region_is_valid(const DiskRegion& r) {
    if (r.pieces.empty()) return false;
    const double tol = 1e-9;
    const std::size_t n = r.pieces.size();
    for (std::size_t i = 0; i < n; ++i) {
        const BoundaryPiece& cur = r.pieces[i];
        const BoundaryPiece& nxt = r.pieces[(i + 1) % n];
        if ((piece_end(r, cur) - piece_start(r, nxt)).norm() > tol) return false;
        if (cur.kind == PieceKind::chord) {
            // both endpoints on the carrier circle
            if (std::abs((cur.p0 - r.center).norm() - 1.0) > tol) return false;
            if (std::abs((cur.p1 - r.center).norm() - 1.0) > tol) return false;
        } else if (cur.a1 < cur.a0) {
            return false;
        }
    }
    return true;
}

double region_area(const DiskRegion& r) {
    if (!region_is_valid(r)) throw std::invalid_argument("malformed disk region");
    double doubled = 0.0;
    const std::size_t n = r.pieces.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = piece_start(r, r.pieces[i]) - r.center;
        const Point b = piece_start(r, r.pieces[(i + 1) % n]) - r.center;
        doubled += cross(a, b);
    }
    double area = 0.5 * doubled;
    for (const BoundaryPiece& piece : r.pieces) {
        if (piece.kind == PieceKind::arc && piece.a1 > piece.a0) {
            const double span = piece.a1 - piece.a0;
            area += 0.5 * (span - std::sin(span));
        }
    }
    return area;
}

double region_boundary_length(const DiskRegion& r) {
    double total = 0.0;
    for (const BoundaryPiece& piece : r.pieces) total += piece_length(piece);
    return total;
}

std::vector<double> region_piece_offsets(const DiskRegion& r) {
    std::vector<double> offsets;
    offsets.reserve(r.pieces.size() + 1);
    double acc = 0.0;
    for (const BoundaryPiece& piece : r.pieces) {
        offsets.push_back(acc);
        acc += piece_length(piece);
    }
    offsets.push_back(acc);
    return offsets;
}

Point region_boundary_point(const DiskRegion& r, double t) {
    const double total = region_boundary_length(r);
    if (!(total > 0.0)) throw std::invalid_argument("region has zero boundary length");
    t = std::fmod(t, total);
    if (t < 0.0) t += total;
    for (const BoundaryPiece& piece : r.pieces) {
        const double len = piece_length(piece);
        if (t <= len) {
            if (len <= 0.0) continue;
            if (piece.kind == PieceKind::chord) {
                return piece.p0 + (t / len) * (piece.p1 - piece.p0);
            }
            return circle_point(r.center, piece.a0 + t);
        }
        t -= len;
    }
    return piece_end(r, r.pieces.back());
}

}  // namespace planecover
