#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planecover/voronoi.hpp"

#include <cmath>
#include <random>

using namespace planecover;

TEST_CASE("two seeds split a square along the bisector") {
    const ConvexPolygon sq = square_polygon(2.0);
    const std::vector<Point> seeds = {{-1.0, 0.0}, {1.0, 0.0}};
    const VoronoiPartition part = build_partition(sq, seeds);
    REQUIRE(part.cells.size() == 2);
    CHECK(polygon_area(part.cells[0]) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(polygon_area(part.cells[1]) == doctest::Approx(8.0).epsilon(1e-12));
    for (const Point& v : part.cells[0].v) CHECK(v.x() <= 1e-9);
    for (const Point& v : part.cells[1].v) CHECK(v.x() >= -1e-9);
}

TEST_CASE("partition input validation") {
    const ConvexPolygon sq = square_polygon(1.0);
    CHECK_THROWS(build_partition(sq, {}));
    CHECK_THROWS(build_partition(ConvexPolygon{}, {Point{0, 0}}));
    CHECK_THROWS(build_partition(sq, {Point{0, 0}, Point{0, 0}}));  // duplicate
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS(build_partition(sq, {Point{inf, 0}}));
}

TEST_CASE("seed far outside the boundary gets an empty cell") {
    const ConvexPolygon sq = square_polygon(1.0);
    const VoronoiPartition part = build_partition(sq, {{0.0, 0.0}, {50.0, 0.0}});
    CHECK_FALSE(part.cells[0].empty());
    CHECK(part.cells[1].empty());
    CHECK(polygon_area(part.cells[0]) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("deduplication keeps first occurrences in order") {
    const std::vector<Point> pts = {{1, 1}, {0, 0}, {1.0, 1.0 + 5e-10}, {2, 2}, {0, 0}};
    const std::vector<Point> out = dedup_points(pts);
    REQUIRE(out.size() == 3);
    CHECK((out[0] - Point{1, 1}).norm() == 0.0);
    CHECK((out[1] - Point{0, 0}).norm() == 0.0);
    CHECK((out[2] - Point{2, 2}).norm() == 0.0);
}

TEST_CASE("covering check on a small grid") {
    const ConvexPolygon sq = square_polygon(1.5);
    std::vector<Point> grid;
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) grid.emplace_back(i * 1.2, j * 1.2);
    }
    CHECK(covers(sq, grid));
    CHECK_FALSE(covers(sq, {Point{0.0, 0.0}}));          // lone disk cannot cover
    CHECK_FALSE(covers(sq, {Point{100.0, 100.0}}));      // nothing near the square
    CHECK_FALSE(covers(sq, std::vector<Point>{}));       // empty covering
    CHECK(covers(square_polygon(0.5), {Point{0.0, 0.0}}));  // small square, one disk
}

TEST_CASE("covers agrees with direct point sampling") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const ConvexPolygon sq = square_polygon(2.0);
    for (int inst = 0; inst < 30; ++inst) {
        std::vector<Point> seeds;
        const int n = 6 + inst % 10;
        for (int k = 0; k < n; ++k) seeds.emplace_back(u(rng), u(rng));
        seeds = dedup_points(seeds);
        const bool claim = covers(sq, seeds);
        // rejection sampling: every sampled point of the square must be
        // within 1 of some seed whenever covers() says so
        bool sampled_ok = true;
        std::uniform_real_distribution<double> s(-2.0, 2.0);
        for (int k = 0; k < 4000; ++k) {
            const Point p{s(rng), s(rng)};
            double best = 1e300;
            for (const Point& q : seeds) best = std::min(best, (p - q).norm());
            if (best > 1.0 + 1e-9) {
                sampled_ok = false;
                break;
            }
        }
        if (claim) CHECK(sampled_ok);
        if (!sampled_ok) CHECK_FALSE(claim);
    }
}

TEST_CASE("cell areas always sum to the boundary area") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const ConvexPolygon sq = square_polygon(3.0);
    for (int inst = 0; inst < 50; ++inst) {
        std::vector<Point> seeds;
        for (int k = 0; k < 12; ++k) seeds.emplace_back(u(rng), u(rng));
        seeds = dedup_points(seeds);
        const VoronoiPartition part = build_partition(sq, seeds);
        double sum = 0.0;
        for (const ConvexPolygon& cell : part.cells) sum += polygon_area(cell);
        CHECK(sum == doctest::Approx(polygon_area(sq)).epsilon(1e-9));
    }
}

TEST_CASE("proper vertex counts match the cell polygons") {
    const ConvexPolygon sq = square_polygon(2.0);
    const VoronoiPartition part = build_partition(sq, {{-1.0, 0.0}, {1.0, 0.0}});
    const std::vector<int> nu = proper_vertex_counts(part);
    REQUIRE(nu.size() == 2);
    CHECK(nu[0] == 4);
    CHECK(nu[1] == 4);
}

TEST_CASE("cells of a covering stay inside their disks") {
    std::vector<Point> grid;
    for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) grid.emplace_back(i * 1.1, j * 1.1);
    }
    const ConvexPolygon sq = square_polygon(2.5);
    const VoronoiPartition part = build_partition(sq, grid);
    CHECK(cells_inside_disks(part));
    CHECK(covers(sq, grid));
}
