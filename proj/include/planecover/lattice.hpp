#pragma once

#include "planecover/geometry.hpp"

#include <vector>

namespace planecover {

// lattice spanned by two basis vectors; all generated points carry unit disks
struct Lattice {
    Point v1;
    Point v2;
};

// |det(v1 v2)|; throws if the basis is (numerically) singular
double lattice_det(const Lattice& L);

// Lagrange-reduced basis: |v1| <= |v2| and |v2 +- v1| >= |v2|
Lattice reduce_basis(const Lattice& L);

// shortest nonzero lattice vector length
double shortest_vector(const Lattice& L);

// max distance from any point of the plane to the nearest lattice point
double covering_radius(const Lattice& L);

// true when some lattice vector has length <= 1 (up to tolerance), i.e. every
// disk has a companion whose center lies inside it
bool two_center_constraint(const Lattice& L);

// density of the unit-disk covering induced by the lattice: pi / det.
// Throws unless the lattice actually covers (covering radius <= 1).
double lattice_density(const Lattice& L);

struct LatticeSearchResult {
    Lattice lattice;
    double det = 0.0;
    double covering_radius = 0.0;
    double density = 0.0;
};

// maximize det over lattices that cover the plane and satisfy the two-center
// constraint; resolution controls the initial grid (must be >= 100)
LatticeSearchResult optimize_constrained_lattice(int resolution);

// best lattice under the two-center constraint: v1 = (1,0), v2 = (1/2, 1+sqrt(3)/2)
Lattice optimal_lattice();

// thinnest unconstrained covering lattice (hexagonal, density 2*pi/sqrt(27))
Lattice kershner_lattice();

// all lattice points with |p| <= radius
std::vector<Point> lattice_points_in_radius(const Lattice& L, double radius);

}  // namespace planecover
