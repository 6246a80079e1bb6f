#pragma once

// Largest inscribed n-gons of the two-chord regions. The closed form
//   a_star(n) = sqrt(3)/2 + (n-2)/2 * sin(2*pi/(3*(n-2)))
// gives the maximum area over region_M(); the brute-force oracle searches the
// boundary directly and is independent of that formula.

#include "planecover/disk_region.hpp"
#include "planecover/geometry.hpp"

#include <map>
#include <vector>

namespace planecover {

// Maximum area of an n-gon inscribed in region_M(), n >= 3.
double a_star(int n);

// Piecewise-linear interpolation of a_star between consecutive integers;
// x must lie in [3, +inf).
double a_star_interp(double x);

// Tabulated a_star values with the same interpolation, for report/CSV use.
struct AStarTable {
    std::map<int, double> values;

    static AStarTable up_to(int max_n);
    double interp(double x) const;
};

// The extremal n-gon in region_M(): vertices (0,-1), (sqrt(3)/2, 1/2),
// (-sqrt(3)/2, 1/2), and n-3 points splitting the top arc into n-2 equal
// parts; returned in counterclockwise order.
ConvexPolygon optimal_ngon_in_M(int n);

// Brute-force maximum inscribed n-gon: discretizes the region boundary into
// about `resolution` arc-length samples (piece corners included exactly),
// runs a rooted dynamic program over all sample placements, then refines each
// vertex along the boundary with exact per-piece moves. Independent of the
// closed form above. resolution >= 100.
struct InscribedResult {
    ConvexPolygon polygon;
    double area = 0.0;
};
InscribedResult max_inscribed_ngon_oracle(const DiskRegion& region, int n, int resolution);

// Verifies midpoint concavity a_star(n) >= (a_star(n-1) + a_star(n+1))/2 for
// all 4 <= n <= n_max, within tolerance 1e-12.
bool check_dowker(int n_max);

// Jensen-style bound: a_star_interp of the mean of a list of integers >= 3.
double jensen_bound(const std::vector<int>& nu_list);

// Lower bound for the density of constrained coverings: pi / a_star(6)
// = 2*pi / (2 + sqrt(3)).
double theorem_bound();

}  // namespace planecover
