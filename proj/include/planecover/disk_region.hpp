#pragma once

// Convex regions bounded by chords and arcs of a single unit circle, plus the
// two canonical instances used throughout: the region cut off by two chords of
// length sqrt(3) sharing an endpoint, and its family indexed by the angle
// between the chord midpoint normals.

#include "planecover/geometry.hpp"

#include <vector>

namespace planecover {

enum class PieceKind { chord, arc };

// One boundary piece of a region inscribed in a unit circle. Chord pieces run
// p0 -> p1 with the region on the left; arc pieces run counterclockwise from
// angle a0 to a1 (a1 >= a0) on the carrier circle, and may have zero length.
struct BoundaryPiece {
    PieceKind kind = PieceKind::chord;
    Point p0{0.0, 0.0};
    Point p1{0.0, 0.0};
    double a0 = 0.0;  // arc only
    double a1 = 0.0;  // arc only
};

BoundaryPiece chord_piece(const Point& p0, const Point& p1);
// Arc on the unit circle around `center`, counterclockwise from a0 to a1.
BoundaryPiece arc_piece(const Point& center, double a0, double a1);

// Convex region contained in the unit disk around `center`, bounded by a
// closed counterclockwise cycle of chord and arc pieces.
struct DiskRegion {
    Point center{0.0, 0.0};
    std::vector<BoundaryPiece> pieces;
};

// Whole unit disk as a single full-circle arc.
DiskRegion unit_disk_region(const Point& center = Point{0.0, 0.0});

// Region bounded by two sqrt(3)-chords sharing the endpoint (0,-1), with the
// other endpoints at (±sqrt(3)/2, 1/2), closed by the minor arc between them.
DiskRegion region_M();

// Two-chord family: both chords have length sqrt(3); theta in [2*pi/3, pi] is
// the angle between the chord midpoint normals. The boundary alternates
// arc/chord/arc/chord; the first arc shrinks to nothing at theta = 2*pi/3
// (where the family member coincides with region_M()) and is then omitted.
// Placement is symmetric about the y-axis with the chords below the center.
DiskRegion region_M_theta(double theta);

// True when consecutive pieces connect end-to-start within tolerance and all
// pieces lie on the carrier circle.
bool region_is_valid(const DiskRegion& r);

// Exact area: shoelace over the piece corner points plus one circular segment
// per arc piece.
double region_area(const DiskRegion& r);

// Start point of a piece (chord p0, or the arc point at angle a0).
Point piece_start(const DiskRegion& r, const BoundaryPiece& piece);
// End point of a piece (chord p1, or the arc point at angle a1).
Point piece_end(const DiskRegion& r, const BoundaryPiece& piece);
// Arc length of one piece (chord length, or radius * angular span).
double piece_length(const BoundaryPiece& piece);

// Total boundary length.
double region_boundary_length(const DiskRegion& r);

// Point on the boundary at arc-length parameter t (wrapped into [0, L)).
Point region_boundary_point(const DiskRegion& r, double t);

// Cumulative arc-length offsets of the piece start points: offsets[i] is the
// parameter of piece i's start; a final entry holds the total length.
std::vector<double> region_piece_offsets(const DiskRegion& r);

}  // namespace planecover
