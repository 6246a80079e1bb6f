#pragma once

#include "planecover/geometry.hpp"

#include <vector>

namespace planecover {

struct DensityRow {
    double lambda = 0.0;
    long long count = 0;   // distinct unit disks meeting the open square
    double gamma = 0.0;    // count * pi / (4 * lambda^2)
};

struct DensityTable {
    std::vector<DensityRow> rows;
    // set when the supplied centers do not extend past the largest square,
    // i.e. counts near the rim may be truncated artifacts
    bool extent_warning = false;
};

// number of distinct centers whose unit disk meets the open square
// (-lambda, lambda)^2; throws if lambda <= 0
long long count_intersecting(const std::vector<Point>& centers, double lambda);

// covering density of the square of half-width lambda
double gamma(const std::vector<Point>& centers, double lambda);

// densities for a list of half-widths; centers should extend to radius
// >= max lambda + 1, otherwise the extent warning is set
DensityTable density_sweep(const std::vector<Point>& centers, const std::vector<double>& lambdas);

// least-squares fit gamma(lambda) ~ g_inf + b / lambda; returns g_inf.
// Needs at least three rows.
double extrapolate_density(const DensityTable& table);

}  // namespace planecover
