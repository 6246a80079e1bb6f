#pragma once

// Single-chain covering of growing regular dodecagons: disks are laid out at
// unit spacing along concentric dodecagon boundaries (plus the center), and
// short "jump" segments connect consecutive rings so that the whole covering
// is one chain with every gap <= 1 and every interior angle >= 2*pi/3.

#include "planecover/geometry.hpp"

#include <vector>

namespace planecover {

// Regular dodecagon with circumradius (1 + sqrt(3)) * j / sqrt(2) and
// vertices at polar angles pi * i / 6; its side length is exactly j.
ConvexPolygon dodecagon(int j);

// Disk centers of ring j: the origin for j = 0, otherwise the 12j points at
// unit spacing along the boundary of dodecagon(j), counterclockwise starting
// at the vertex on the positive x-axis.
std::vector<Point> layer(int j);

// Ordered disk centers forming the chain. layer_index[i] is j >= 0 for a disk
// on ring j and -j for a disk on the jump leading into ring j.
struct Chain {
    std::vector<Point> centers;
    std::vector<int> layer_index;
};

// Interior disks of the jump connecting ring j-1 to ring j as built by
// build_chain (at most 4 disks, spacing <= 1, turns of at most pi/3 at both
// junctions).
std::vector<Point> jump_path(int j);

// Builds the chain covering dodecagon(K): ring 0, jump, ring 1, jump, ...,
// ring K. Each ring's cyclic order is rotated to start at the jump entry
// point chosen to keep the junction turns within pi/3.
Chain build_chain(int K);

struct ChainReport {
    bool min_gap_ok = false;      // every consecutive distance <= 1 + 1e-9
    double min_angle = 0.0;       // smallest interior angle (pi if none)
    long long worst_angle_index = -1;
    int covered_up_to_layer = 0;  // largest k with dodecagon(k) covered
    long long disk_count = 0;
    long long duplicate_count = 0;
};

// Validates gaps, interior angles, duplicates, and how many dodecagon rings
// the disks cover.
ChainReport verify_chain(const Chain& c);

// Area of the crescent cut from a unit disk by a congruent disk at center
// distance 1: sin(2*pi/3) + pi/3.
double crescent_area();

// Crude density bound pi / crescent_area() for chain coverings.
double crude_lower_bound();

}  // namespace planecover
