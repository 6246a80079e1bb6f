#include "planecover/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planecover {

namespace {

void check_finite(const Lattice& L) {
    if (!L.v1.allFinite() || !L.v2.allFinite()) {
        throw std::invalid_argument("lattice basis must be finite");
    }
}

// central Voronoi cell of the origin: start from a generous bounding square
// and clip by the bisectors of nearby lattice vectors (reduced basis makes a
// 2-ring neighborhood sufficient)
ConvexPolygon origin_cell(const Lattice& reduced) {
    const double half = reduced.v1.norm() + reduced.v2.norm();
    std::vector<Point> sq = {{-half, -half}, {half, -half}, {half, half}, {-half, half}};
    ConvexPolygon cell{std::move(sq)};
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
            if (i == 0 && j == 0) continue;
            const Point g = i * reduced.v1 + j * reduced.v2;
            const Point n = g.normalized();  // keep the origin side: n . p <= |g| / 2
            cell = clip_halfplane(cell, HalfPlane{n, n.dot(0.5 * g)});
            if (cell.empty()) throw std::runtime_error("degenerate lattice cell");
        }
    }
    return cell;
}

}  // namespace

double lattice_det(const Lattice& L) {
    check_finite(L);
    const double d = std::abs(cross(L.v1, L.v2));
    if (d <= 1e-12) throw std::invalid_argument("lattice basis is singular");
    return d;
}

Lattice reduce_basis(const Lattice& L) {
    lattice_det(L);  // validates
    Point a = L.v1, b = L.v2;
    if (a.norm() > b.norm()) std::swap(a, b);
    for (int iter = 0; iter < 64; ++iter) {
        const double mu = std::round(b.dot(a) / a.squaredNorm());
        b -= mu * a;
        if (b.norm() >= a.norm()) break;
        std::swap(a, b);
    }
    return Lattice{a, b};
}

double shortest_vector(const Lattice& L) {
    const Lattice r = reduce_basis(L);
    double best = r.v1.norm();
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
            if (i == 0 && j == 0) continue;
            best = std::min(best, (i * r.v1 + j * r.v2).norm());
        }
    }
    return best;
}

double covering_radius(const Lattice& L) {
    const Lattice r = reduce_basis(L);
    const ConvexPolygon cell = origin_cell(r);
    double far = 0.0;
    for (const Point& p : cell.v) far = std::max(far, p.norm());
    return far;
}

bool two_center_constraint(const Lattice& L) {
    return shortest_vector(L) <= 1.0 + 1e-9;
}

double lattice_density(const Lattice& L) {
    if (covering_radius(L) > 1.0 + 1e-9) {
        throw std::invalid_argument("lattice does not cover the plane with unit disks");
    }
    return M_PI / lattice_det(L);
}

namespace {

// for v1 = (2a, 0), v2 = (b1, b2): is the covering radius still <= 1?
bool feasible(double a, double b1, double b2) {
    if (b2 > 2.0) return false;  // covering radius >= b2 / 2
    const Lattice L{Point{2.0 * a, 0.0}, Point{b1, b2}};
    if (std::abs(cross(L.v1, L.v2)) <= 1e-12) return false;
    return covering_radius(L) <= 1.0;
}

// largest b2 with covering radius <= 1, found by bisection starting from a
// known-feasible lo (the radius grows with b2 on this slab; b2/2 already
// lower-bounds it, so hi = 2.1 is always infeasible)
double max_feasible_b2(double a, double b1, double lo, double tol) {
    double hi = 2.1;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (feasible(a, b1, mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

LatticeSearchResult optimize_constrained_lattice(int resolution) {
    if (resolution < 100) throw std::invalid_argument("resolution must be >= 100");
    // normalize: v1 = (2a, 0) is a shortest vector with 2a <= 1 (two-center
    // constraint), v2 = (b1, b2) with 0 <= b1 <= a, b2 > 0
    double best_det = 0.0;
    double best_a = 0.0, best_b1 = 0.0, best_b2 = 0.0;
    for (int i = 1; i <= resolution; ++i) {
        const double a = 0.5 * i / resolution;
        if (2.0 * a * 2.0 <= best_det) continue;  // b2 < 2 always: cannot improve
        for (int k = 0; k <= resolution; ++k) {
            const double b1 = a * k / resolution;
            // only bisect in cells that can beat the incumbent
            const double need = std::max(best_det / (2.0 * a), 1e-3);
            if (!feasible(a, b1, need)) continue;
            const double b2 = max_feasible_b2(a, b1, need, 1e-4);
            const double det = 2.0 * a * b2;
            if (det > best_det) {
                best_det = det;
                best_a = a;
                best_b1 = b1;
                best_b2 = b2;
            }
        }
    }
    if (best_det <= 0.0) throw std::runtime_error("no feasible lattice found");
    best_b2 = max_feasible_b2(best_a, best_b1, best_b2, 1e-13);
    best_det = 2.0 * best_a * best_b2;
    // local refinement around the best grid point
    double step_a = 0.5 / resolution, step_b1 = best_a / resolution;
    for (int round = 0; round < 40; ++round) {
        bool improved = false;
        for (const double da : {-step_a, 0.0, step_a}) {
            for (const double db1 : {-step_b1, 0.0, step_b1}) {
                const double a = std::clamp(best_a + da, 1e-3, 0.5);
                const double b1 = std::clamp(best_b1 + db1, 0.0, a);
                if (!feasible(a, b1, 1e-3)) continue;
                const double b2 = max_feasible_b2(a, b1, 1e-3, 1e-13);
                const double det = 2.0 * a * b2;
                if (det > best_det + 1e-15) {
                    best_det = det;
                    best_a = a;
                    best_b1 = b1;
                    best_b2 = b2;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step_a *= 0.5;
            step_b1 *= 0.5;
        }
    }
    LatticeSearchResult res;
    res.lattice = Lattice{Point{2.0 * best_a, 0.0}, Point{best_b1, best_b2}};
    res.det = lattice_det(res.lattice);
    res.covering_radius = covering_radius(res.lattice);
    res.density = M_PI / res.det;
    return res;
}

Lattice optimal_lattice() {
    return Lattice{Point{1.0, 0.0}, Point{0.5, 1.0 + std::sqrt(3.0) / 2.0}};
}

Lattice kershner_lattice() {
    // hexagonal lattice scaled so the covering radius is exactly 1
    const double s = std::sqrt(3.0);
    return Lattice{Point{s, 0.0}, Point{s / 2.0, 1.5}};
}

std::vector<Point> lattice_points_in_radius(const Lattice& L, double radius) {
    if (!(radius >= 0.0)) throw std::invalid_argument("radius must be >= 0");
    const Lattice r = reduce_basis(L);
    // bound coefficients via the dual: |i| <= radius * |v2| / det etc.
    const double det = lattice_det(r);
    const int imax = static_cast<int>(std::floor(radius * r.v2.norm() / det)) + 1;
    const int jmax = static_cast<int>(std::floor(radius * r.v1.norm() / det)) + 1;
    std::vector<Point> pts;
    for (int i = -imax; i <= imax; ++i) {
        for (int j = -jmax; j <= jmax; ++j) {
            const Point p = i * r.v1 + j * r.v2;
            if (p.norm() <= radius) pts.push_back(p);
        }
    }
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        if (p.x() != q.x()) return p.x() < q.x();
        return p.y() < q.y();
    });
    return pts;
}

}  // namespace planecover
