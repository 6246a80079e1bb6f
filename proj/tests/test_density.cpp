#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planecover/density.hpp"
#include "planecover/lattice.hpp"

#include <cmath>

using namespace planecover;

TEST_CASE("counting is strict about the open square") {
    const double lam = 5.0;
    CHECK(count_intersecting({Point{0, 0}}, lam) == 1);
    CHECK(count_intersecting({Point{5.999999, 0}}, lam) == 1);
    CHECK(count_intersecting({Point{6.0, 0.0}}, lam) == 0);   // tangent to the closed square
    CHECK(count_intersecting({Point{6.1, 0.0}}, lam) == 0);
    CHECK(count_intersecting({Point{5.8, 5.8}}, lam) == 0);   // past the corner
    CHECK_THROWS(count_intersecting({Point{0, 0}}, 0.0));
    CHECK_THROWS(count_intersecting({Point{0, 0}}, -2.0));
}

TEST_CASE("duplicates are counted once") {
    const std::vector<Point> pts = {{0, 0}, {0, 0}, {1, 1}, {1.0, 1.0 + 1e-12}};
    CHECK(count_intersecting(pts, 5.0) == 2);
}

TEST_CASE("density formula") {
    const std::vector<Point> pts = {{0, 0}, {1, 0}, {0, 1}};
    const double lam = 10.0;
    CHECK(gamma(pts, lam) == doctest::Approx(3.0 * M_PI / (4.0 * lam * lam)).epsilon(1e-12));
}

TEST_CASE("sweep sorts rows and warns when centers run out") {
    std::vector<Point> pts;
    for (int i = -12; i <= 12; ++i) {
        for (int j = -12; j <= 12; ++j) pts.emplace_back(i * 1.0, j * 1.0);
    }
    const DensityTable t = density_sweep(pts, {8.0, 2.0, 4.0});
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].lambda == 2.0);
    CHECK(t.rows[2].lambda == 8.0);
    CHECK_FALSE(t.extent_warning);  // centers reach past 8 + 1
    CHECK(t.rows[0].count > 0);

    const DensityTable warned = density_sweep(pts, {16.0});
    CHECK(warned.extent_warning);
    CHECK_THROWS(density_sweep(pts, {}));
    CHECK_THROWS(density_sweep(pts, {-1.0}));
}

TEST_CASE("extrapolation recovers an exact linear model") {
    DensityTable t;
    const double g = 1.7, b = 2.9;
    for (const double lam : {20.0, 40.0, 80.0, 160.0}) {
        DensityRow r;
        r.lambda = lam;
        r.gamma = g + b / lam;
        t.rows.push_back(r);
    }
    CHECK(extrapolate_density(t) == doctest::Approx(g).epsilon(1e-12));

    DensityTable two;
    two.rows.assign(t.rows.begin(), t.rows.begin() + 2);
    CHECK_THROWS(extrapolate_density(two));
}

TEST_CASE("lattice coverings approach their densities") {
    const std::vector<Point> hex = lattice_points_in_radius(kershner_lattice(), 130.0);
    const double hex_gamma = gamma(hex, 100.0);
    CHECK(std::abs(hex_gamma - 2.0 * M_PI / std::sqrt(27.0)) <
          0.05 * 2.0 * M_PI / std::sqrt(27.0));

    const std::vector<Point> best = lattice_points_in_radius(optimal_lattice(), 130.0);
    const double best_gamma = gamma(best, 100.0);
    CHECK(std::abs(best_gamma - 2.0 * M_PI / (2.0 + std::sqrt(3.0))) <
          0.05 * 2.0 * M_PI / (2.0 + std::sqrt(3.0)));
}
