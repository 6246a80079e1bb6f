#pragma once

// Voronoi partition of a convex polygon by a finite seed set, built by
// clipping the polygon with perpendicular-bisector half-planes. Drives the
// exact covering test: the polygon is covered by unit disks at the seeds
// exactly when every cell vertex lies within distance 1 of its own seed.

#include "planecover/geometry.hpp"

#include <vector>

namespace planecover {

struct VoronoiPartition {
    ConvexPolygon boundary;
    std::vector<Point> seeds;
    std::vector<ConvexPolygon> cells;  // cells[i] belongs to seeds[i]; may be empty
};

// Clips the boundary against each seed's bisectors, nearest seeds first, and
// stops once the remaining bisectors cannot reach the current cell. Throws on
// an empty boundary, an empty seed list, or duplicate seeds (within epsilon).
VoronoiPartition build_partition(const ConvexPolygon& boundary, const std::vector<Point>& seeds);

// True when every non-empty cell lies inside the unit disk of its seed, i.e.
// all cell vertices are within 1 + 1e-9 of the seed.
bool cells_inside_disks(const VoronoiPartition& vp);

// Exact decision: is the polygon covered by unit disks at `centers`? Centers
// are deduplicated, and centers farther than 1 from the polygon are discarded
// before partitioning (their disks cannot reach it).
bool covers(const ConvexPolygon& boundary, const std::vector<Point>& centers);

// Number of proper vertices of each cell (0 for empty cells).
std::vector<int> proper_vertex_counts(const VoronoiPartition& vp);

// Removes duplicate points within epsilon, keeping first occurrences in order.
std::vector<Point> dedup_points(const std::vector<Point>& pts);

}  // namespace planecover
