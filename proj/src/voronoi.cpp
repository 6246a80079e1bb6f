#include "planecover/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace planecover {

namespace {

// max distance from p to the polygon's vertices; the farthest point of a
// convex polygon from any point is always a vertex
double max_vertex_distance(const Point& p, const ConvexPolygon& poly) {
    double best = 0.0;
    for (const Point& v : poly.v) best = std::max(best, (v - p).norm());
    return best;
}

}  // namespace

std::vector<Point> dedup_points(const std::vector<Point>& pts) {
    const double eps = geom_eps();
    // sort index view lexicographically, then scan a window in x
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x() != pts[b].x()) return pts[a].x() < pts[b].x();
        return pts[a].y() < pts[b].y();
    });
    std::vector<bool> drop(pts.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (drop[order[i]]) continue;
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (pts[order[j]].x() - pts[order[i]].x() > eps) break;
            if ((pts[order[j]] - pts[order[i]]).norm() <= eps) {
                // keep whichever appears first in the input ordering
                if (order[j] < order[i]) {
                    drop[order[i]] = true;
                    break;
                }
                drop[order[j]] = true;
            }
        }
    }
    std::vector<Point> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!drop[i]) out.push_back(pts[i]);
    }
    return out;
}

VoronoiPartition build_partition(const ConvexPolygon& boundary, const std::vector<Point>& seeds) {
    if (boundary.empty() || !polygon_is_valid(boundary)) {
        throw std::invalid_argument("partition boundary must be a non-empty convex polygon");
    }
    if (seeds.empty()) throw std::invalid_argument("seed list is empty");
    for (const Point& s : seeds) {
        if (!s.allFinite()) throw std::invalid_argument("seed is not finite");
    }
    if (dedup_points(seeds).size() != seeds.size()) {
        throw std::invalid_argument("duplicate seeds");
    }

    VoronoiPartition vp;
    vp.boundary = boundary;
    vp.seeds = seeds;
    vp.cells.resize(seeds.size());

    const std::size_t n = seeds.size();
    std::vector<std::pair<double, std::size_t>> cand(n);  // (squared distance, index)
    for (std::size_t i = 0; i < n; ++i) {
        const Point& s = seeds[i];
        for (std::size_t j = 0; j < n; ++j) cand[j] = {(seeds[j] - s).squaredNorm(), j};

        // nearest-first clipping, but only ever sort the band of candidates
        // that can still matter: a bisector at distance d/2 cannot cut a cell
        // whose farthest vertex from the seed is nearer than d/2
        ConvexPolygon cell = boundary;
        double reach = max_vertex_distance(s, cell);
        double band_lo = 0.0, band_hi = 4.0;
        auto begin = cand.begin();
        bool done = false;
        while (!done && begin != cand.end() && !cell.empty()) {
            if (0.5 * band_lo > reach) break;  // every remaining seed is too far
            const auto mid = std::partition(begin, cand.end(), [&](const auto& c) {
                return c.first <= band_hi * band_hi;
            });
            std::sort(begin, mid);
            for (auto it = begin; it != mid; ++it) {
                if (it->second == i) continue;
                const double d = std::sqrt(it->first);
                if (0.5 * d > reach) {  // sorted: everything farther cannot cut either
                    done = true;
                    break;
                }
                const Point normal = (seeds[it->second] - s) / d;
                cell = clip_halfplane(cell, HalfPlane{normal, normal.dot(0.5 * (s + seeds[it->second]))});
                if (cell.empty()) {
                    done = true;
                    break;
                }
                reach = max_vertex_distance(s, cell);
            }
            begin = mid;
            band_lo = band_hi;
            band_hi *= 2.0;
        }
        vp.cells[i] = std::move(cell);
    }
    return vp;
}

bool cells_inside_disks(const VoronoiPartition& vp) {
    const double slack = 1.0 + 1e-9;
    for (std::size_t i = 0; i < vp.cells.size(); ++i) {
        for (const Point& v : vp.cells[i].v) {
            if ((v - vp.seeds[i]).norm() > slack) return false;
        }
    }
    return true;
}

bool covers(const ConvexPolygon& boundary, const std::vector<Point>& centers) {
    if (boundary.empty() || !polygon_is_valid(boundary)) {
        throw std::invalid_argument("covering target must be a non-empty convex polygon");
    }
    if (centers.empty()) return false;
    std::vector<Point> seeds = dedup_points(centers);
    // a unit disk can only help if its center is within 1 of the polygon
    std::vector<Point> near;
    near.reserve(seeds.size());
    for (const Point& s : seeds) {
        if (distance_to_polygon(s, boundary) <= 1.0 + geom_eps()) near.push_back(s);
    }
    if (near.empty()) return false;
    return cells_inside_disks(build_partition(boundary, near));
}

std::vector<int> proper_vertex_counts(const VoronoiPartition& vp) {
    std::vector<int> counts;
    counts.reserve(vp.cells.size());
    for (const ConvexPolygon& cell : vp.cells) counts.push_back(static_cast<int>(cell.size()));
    return counts;
}

}  // namespace planecover
