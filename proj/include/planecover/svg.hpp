#pragma once

#include "planecover/chain.hpp"
#include "planecover/disk_region.hpp"
#include "planecover/geometry.hpp"
#include "planecover/lattice.hpp"
#include "planecover/voronoi.hpp"

#include <string>
#include <vector>

namespace planecover {

// deterministic SVG renderers: fixed-precision coordinates, integer viewBox
// computed from the drawn geometry

// unit disks plus the square of half-width lambda (pass 0 to omit the square)
std::string render_svg(const std::vector<Point>& centers, double lambda);

// partition cells, their seeds, and the boundary polygon
std::string render_svg(const VoronoiPartition& partition);

// a disk-bounded region with an optional inscribed polygon on top
std::string render_svg(const DiskRegion& region, const ConvexPolygon& inscribed);

// a chain: its disks plus the path through consecutive centers
std::string render_svg(const Chain& chain);

// lattice disks out to the given radius
std::string render_svg(const Lattice& lattice, double radius);

}  // namespace planecover
