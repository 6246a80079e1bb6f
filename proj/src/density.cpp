#include "planecover/density.hpp"

#include "planecover/voronoi.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planecover {

long long count_intersecting(const std::vector<Point>& centers, double lambda) {
    const std::vector<Point> unique = dedup_points(centers);
    long long n = 0;
    for (const Point& p : unique) {
        if (disk_intersects_open_square(Disk{p}, lambda)) ++n;
    }
    return n;
}

double gamma(const std::vector<Point>& centers, double lambda) {
    const long long n = count_intersecting(centers, lambda);
    return static_cast<double>(n) * M_PI / (4.0 * lambda * lambda);
}

DensityTable density_sweep(const std::vector<Point>& centers, const std::vector<double>& lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("need at least one half-width");
    DensityTable t;
    double max_lambda = 0.0;
    for (const double l : lambdas) {
        if (!(l > 0.0)) throw std::invalid_argument("half-widths must be positive");
        max_lambda = std::max(max_lambda, l);
        DensityRow row;
        row.lambda = l;
        row.count = count_intersecting(centers, l);
        row.gamma = static_cast<double>(row.count) * M_PI / (4.0 * l * l);
        t.rows.push_back(row);
    }
    std::sort(t.rows.begin(), t.rows.end(),
              [](const DensityRow& a, const DensityRow& b) { return a.lambda < b.lambda; });
    double max_norm = 0.0;
    for (const Point& p : centers) max_norm = std::max(max_norm, p.norm());
    t.extent_warning = max_norm < max_lambda + 1.0;
    return t;
}

double extrapolate_density(const DensityTable& table) {
    const std::size_t n = table.rows.size();
    if (n < 3) throw std::invalid_argument("need at least three density rows to extrapolate");
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = 1.0 / table.rows[i].lambda;
        y(i) = table.rows[i].gamma;
    }
    const Eigen::Vector2d coef = A.colPivHouseholderQr().solve(y);
    return coef(0);
}

}  // namespace planecover
