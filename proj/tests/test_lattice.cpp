#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planecover/lattice.hpp"

#include <cmath>
#include <random>

using namespace planecover;

TEST_CASE("determinant") {
    CHECK(lattice_det(Lattice{Point{1, 0}, Point{0, 1}}) == doctest::Approx(1.0));
    CHECK(lattice_det(Lattice{Point{2, 1}, Point{1, 2}}) == doctest::Approx(3.0));
    CHECK_THROWS(lattice_det(Lattice{Point{1, 1}, Point{2, 2}}));  // singular
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS(lattice_det(Lattice{Point{inf, 0}, Point{0, 1}}));
}

TEST_CASE("basis reduction") {
    const Lattice skew{Point{1, 0}, Point{5, 1}};
    const Lattice red = reduce_basis(skew);
    CHECK(red.v1.norm() <= red.v2.norm() + 1e-12);
    CHECK(red.v1.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(red.v2.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lattice_det(red) == doctest::Approx(lattice_det(skew)).epsilon(1e-12));
    CHECK(shortest_vector(skew) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("covering radius of standard lattices") {
    // square lattice of side s: farthest point is the cell corner
    CHECK(covering_radius(Lattice{Point{1, 0}, Point{0, 1}}) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(covering_radius(Lattice{Point{2, 0}, Point{0, 2}}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    // hexagonal lattice of minimal distance d covers with radius d/sqrt(3)
    const double d = 1.2;
    const Lattice hex{Point{d, 0}, Point{d / 2.0, d * std::sqrt(3.0) / 2.0}};
    CHECK(covering_radius(hex) == doctest::Approx(d / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("named lattices hit their closed forms") {
    const Lattice best = optimal_lattice();
    CHECK(lattice_det(best) == doctest::Approx(1.0 + std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(covering_radius(best) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(two_center_constraint(best));
    CHECK(lattice_density(best) ==
          doctest::Approx(2.0 * M_PI / (2.0 + std::sqrt(3.0))).epsilon(1e-12));

    const Lattice hex = kershner_lattice();
    CHECK(lattice_det(hex) == doctest::Approx(std::sqrt(27.0) / 2.0).epsilon(1e-12));
    CHECK(covering_radius(hex) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lattice_density(hex) == doctest::Approx(2.0 * M_PI / std::sqrt(27.0)).epsilon(1e-12));
    CHECK_FALSE(two_center_constraint(hex));  // shortest vector sqrt(3) > 1
}

TEST_CASE("density requires an actual covering") {
    CHECK_THROWS(lattice_density(Lattice{Point{3, 0}, Point{0, 3}}));
    CHECK(lattice_density(Lattice{Point{1, 0}, Point{0, 1}}) == doctest::Approx(M_PI));
}

TEST_CASE("invariants under unimodular basis changes") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-3, 3);
    const Lattice base = optimal_lattice();
    int tried = 0;
    while (tried < 40) {
        const int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        if (a * d - b * c != 1 && a * d - b * c != -1) continue;
        ++tried;
        const Lattice same{static_cast<double>(a) * base.v1 + static_cast<double>(b) * base.v2,
                           static_cast<double>(c) * base.v1 + static_cast<double>(d) * base.v2};
        CHECK(lattice_det(same) == doctest::Approx(lattice_det(base)).epsilon(1e-9));
        CHECK(shortest_vector(same) == doctest::Approx(shortest_vector(base)).epsilon(1e-9));
        CHECK(covering_radius(same) == doctest::Approx(covering_radius(base)).epsilon(1e-9));
    }
}

TEST_CASE("points in a disk") {
    const std::vector<Point> pts = lattice_points_in_radius(Lattice{Point{1, 0}, Point{0, 1}}, 2.5);
    CHECK(pts.size() == 21);  // integer points with x^2 + y^2 <= 6.25
    bool has_origin = false;
    for (const Point& p : pts) {
        CHECK(p.norm() <= 2.5 + 1e-12);
        if (p.norm() == 0.0) has_origin = true;
    }
    CHECK(has_origin);
    // deterministic ordering
    const std::vector<Point> again =
        lattice_points_in_radius(Lattice{Point{1, 0}, Point{0, 1}}, 2.5);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK((pts[i] - again[i]).norm() == 0.0);
    CHECK_THROWS(lattice_points_in_radius(Lattice{Point{1, 0}, Point{0, 1}}, -1.0));
}

TEST_CASE("constrained search finds the optimal determinant") {
    const LatticeSearchResult res = optimize_constrained_lattice(100);
    CHECK(res.det == doctest::Approx(1.0 + std::sqrt(3.0) / 2.0).epsilon(1e-6));
    CHECK(res.covering_radius <= 1.0 + 1e-9);
    CHECK(two_center_constraint(res.lattice));
    CHECK(res.density == doctest::Approx(M_PI / res.det).epsilon(1e-12));
    CHECK_THROWS(optimize_constrained_lattice(50));  // resolution too coarse
}
