// planecover: build, verify, measure, and render unit-disk coverings
#include "planecover/chain.hpp"
#include "planecover/covering_io.hpp"
#include "planecover/density.hpp"
#include "planecover/disk_region.hpp"
#include "planecover/inscribed.hpp"
#include "planecover/lattice.hpp"
#include "planecover/report.hpp"
#include "planecover/svg.hpp"
#include "planecover/voronoi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace planecover;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// accepts a bare [[x,y],…] array or an object holding it under "centers",
// "vertices", or "points"
std::vector<Point> read_points_file(const std::string& path) {
    const nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    const nlohmann::json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else {
        for (const char* key : {"centers", "vertices", "points"}) {
            if (j.contains(key)) {
                arr = &j.at(key);
                break;
            }
        }
    }
    if (arr == nullptr) throw std::runtime_error("no point list found in " + path);
    std::vector<Point> pts;
    for (const auto& e : *arr) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("points must be [x, y] pairs");
        pts.emplace_back(e[0].get<double>(), e[1].get<double>());
        if (!pts.back().allFinite()) throw std::runtime_error("point coordinates must be finite");
    }
    return pts;
}

Point parse_xy(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("expected x,y: " + s);
    return Point{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int cmd_astar(int max_n, const std::string& csv) {
    std::ostringstream out;
    out << "n,a_star\n";
    for (int n = 3; n <= max_n; ++n) out << n << ',' << fmt17(a_star(n)) << '\n';
    if (csv.empty()) {
        std::cout << out.str();
    } else {
        write_text_file(csv, out.str());
    }
    return 0;
}

int cmd_regions(double theta, const std::string& svg, int resolution) {
    const DiskRegion region = region_M_theta(theta);
    const InscribedResult best = max_inscribed_ngon_oracle(region, 6, resolution);
    std::cout << "region area      " << fmt17(region_area(region)) << "\n"
              << "hexagon area     " << fmt17(best.area) << "\n"
              << "closed-form area " << fmt17(a_star(6)) << "\n";
    if (!svg.empty()) write_text_file(svg, render_svg(region, best.polygon));
    return 0;
}

int cmd_voronoi(const std::string& polygon_path, const std::string& seeds_path,
                const std::string& svg, const std::string& report_path) {
    const ConvexPolygon boundary = make_convex_polygon(read_points_file(polygon_path));
    const std::vector<Point> seeds = dedup_points(read_points_file(seeds_path));
    const VoronoiPartition part = build_partition(boundary, seeds);

    const std::vector<int> nu = proper_vertex_counts(part);
    long long nu_sum = 0;
    for (const int v : nu) nu_sum += v;
    double area_sum = 0.0;
    for (const ConvexPolygon& cell : part.cells) area_sum += polygon_area(cell);
    const bool inside = cells_inside_disks(part);
    const bool is_covering = covers(boundary, seeds);

    nlohmann::ordered_json rep;
    rep["boundary_area"] = polygon_area(boundary);
    rep["cell_area_sum"] = area_sum;
    rep["cell_areas"] = [&] {
        std::vector<double> a;
        for (const ConvexPolygon& cell : part.cells) a.push_back(polygon_area(cell));
        return a;
    }();
    rep["proper_vertex_counts"] = nu;
    rep["proper_vertex_sum"] = nu_sum;
    rep["six_n_bound"] = 6 * static_cast<long long>(seeds.size());
    const bool areas_ok = std::abs(area_sum - polygon_area(boundary)) <= 1e-6;
    rep["cells_inside_disks"] = inside;
    rep["covers"] = is_covering;
    rep["cell_areas_sum_to_boundary"] = areas_ok;
    if (!report_path.empty()) write_text_file(report_path, rep.dump(2) + "\n");
    std::cout << rep.dump(2) << "\n";
    if (!svg.empty()) write_text_file(svg, render_svg(part));
    return areas_ok ? 0 : 1;
}

int cmd_chain_build(int layers, const std::string& out) {
    const Chain chain = build_chain(layers);
    save_covering(covering_from_chain(chain), out);
    std::cout << "wrote " << chain.centers.size() << " centers to " << out << "\n";
    return 0;
}

int cmd_chain_verify(const std::string& in, const std::string& report_path) {
    const Chain chain = chain_from_covering(load_covering(in));
    const ChainReport r = verify_chain(chain);
    const double angle_floor = 2.0 * M_PI / 3.0 - 1e-9;
    const bool angles_ok = r.min_angle >= angle_floor;

    nlohmann::ordered_json rep;
    rep["disk_count"] = r.disk_count;
    rep["duplicate_count"] = r.duplicate_count;
    rep["min_gap_ok"] = r.min_gap_ok;
    rep["min_angle"] = r.min_angle;
    rep["min_angle_ok"] = angles_ok;
    rep["worst_angle_index"] = r.worst_angle_index;
    rep["covered_up_to_layer"] = r.covered_up_to_layer;
    if (!report_path.empty()) write_text_file(report_path, rep.dump(2) + "\n");
    std::cout << rep.dump(2) << "\n";
    return (r.min_gap_ok && angles_ok) ? 0 : 1;
}

int cmd_chain_render(const std::string& in, const std::string& svg) {
    const Chain chain = chain_from_covering(load_covering(in));
    write_text_file(svg, render_svg(chain));
    return 0;
}

int cmd_lattice_optimize(int resolution, const std::string& json_path) {
    const LatticeSearchResult res = optimize_constrained_lattice(resolution);
    nlohmann::ordered_json j;
    j["v1"] = {res.lattice.v1.x(), res.lattice.v1.y()};
    j["v2"] = {res.lattice.v2.x(), res.lattice.v2.y()};
    j["det"] = res.det;
    j["covering_radius"] = res.covering_radius;
    j["density"] = res.density;
    if (!json_path.empty()) write_text_file(json_path, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_lattice_check(const std::string& v1s, const std::string& v2s) {
    const Lattice L{parse_xy(v1s), parse_xy(v2s)};
    const double det = lattice_det(L);
    const double shortest = shortest_vector(L);
    const double radius = covering_radius(L);
    const bool two_center = two_center_constraint(L);
    const bool is_covering = radius <= 1.0 + 1e-9;
    std::cout << "det              " << fmt17(det) << "\n"
              << "shortest vector  " << fmt17(shortest) << "\n"
              << "covering radius  " << fmt17(radius) << "\n"
              << "two-center ok    " << (two_center ? "yes" : "no") << "\n"
              << "covers plane     " << (is_covering ? "yes" : "no") << "\n";
    if (is_covering) {
        std::cout << "density          " << fmt17(lattice_density(L)) << "\n";
    }
    return (two_center && is_covering) ? 0 : 1;
}

int cmd_lattice_render(const std::string& v1s, const std::string& v2s, double radius,
                       const std::string& svg) {
    const Lattice L = (v1s.empty() || v2s.empty()) ? optimal_lattice()
                                                   : Lattice{parse_xy(v1s), parse_xy(v2s)};
    write_text_file(svg, render_svg(L, radius));
    return 0;
}

int cmd_density(const std::string& covering_path, const std::vector<double>& lambdas,
                const std::string& csv, bool extrapolate) {
    const CoveringFile cov = load_covering(covering_path);
    const DensityTable table = density_sweep(cov.centers, lambdas);
    std::cout << "lambda,count,gamma\n";
    for (const DensityRow& r : table.rows) {
        std::cout << fmt17(r.lambda) << ',' << r.count << ',' << fmt17(r.gamma) << '\n';
    }
    if (table.extent_warning) {
        std::cerr << "warning: centers do not extend past the largest square; "
                     "rim counts may be truncated\n";
    }
    if (!csv.empty()) write_text_file(csv, density_csv(table));
    if (extrapolate) {
        std::cout << "extrapolated density " << fmt17(extrapolate_density(table)) << "\n";
    }
    return 0;
}

int cmd_constants_report(const std::string& json_path) {
    const ConstantsReport rep = constants_report();
    std::cout << report_text(rep);
    if (!json_path.empty()) write_text_file(json_path, report_json(rep));
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-disk covering toolkit"};
    app.require_subcommand(1);

    // astar
    int astar_max_n = 12;
    std::string astar_csv;
    auto* astar = app.add_subcommand("astar", "largest inscribed n-gon areas");
    astar->add_option("--max-n", astar_max_n, "largest n")->check(CLI::Range(3, 1000000));
    astar->add_option("--csv", astar_csv, "write rows (n, a_star) to this CSV");

    // regions
    double regions_theta = 2.0 * M_PI / 3.0;
    std::string regions_svg;
    int regions_resolution = 240;
    auto* regions = app.add_subcommand("regions", "two-disk region with its optimal hexagon");
    regions->add_option("--theta", regions_theta, "opening angle in [2pi/3, pi]");
    regions->add_option("--svg", regions_svg, "render to this SVG file");
    regions->add_option("--resolution", regions_resolution, "boundary samples for the search")
        ->check(CLI::Range(100, 100000));

    // voronoi
    std::string vor_polygon, vor_seeds, vor_svg, vor_report;
    auto* voronoi = app.add_subcommand("voronoi", "clipped Voronoi partition of a polygon");
    voronoi->add_option("--polygon", vor_polygon, "boundary polygon JSON")->required();
    voronoi->add_option("--seeds", vor_seeds, "seed points JSON")->required();
    voronoi->add_option("--svg", vor_svg, "render to this SVG file");
    voronoi->add_option("--report", vor_report, "write the JSON report here");

    // chain build|verify|render
    auto* chain = app.add_subcommand("chain", "layered chain coverings");
    chain->require_subcommand(1);
    int chain_layers = 3;
    std::string chain_out = "chain.json";
    auto* chain_build = chain->add_subcommand("build", "construct a chain covering");
    chain_build->add_option("--layers", chain_layers, "number of rings")->check(CLI::Range(1, 1000));
    chain_build->add_option("--out", chain_out, "output covering JSON");
    std::string chain_in, chain_report;
    auto* chain_verify = chain->add_subcommand("verify", "check gaps, angles, and coverage");
    chain_verify->add_option("--in", chain_in, "covering JSON")->required();
    chain_verify->add_option("--report", chain_report, "write the JSON report here");
    std::string chain_rin, chain_svg = "chain.svg";
    auto* chain_render = chain->add_subcommand("render", "draw a chain covering");
    chain_render->add_option("--in", chain_rin, "covering JSON")->required();
    chain_render->add_option("--svg", chain_svg, "output SVG file");

    // lattice optimize|check|render
    auto* lattice = app.add_subcommand("lattice", "lattice coverings");
    lattice->require_subcommand(1);
    int lat_resolution = 200;
    std::string lat_json;
    auto* lat_opt = lattice->add_subcommand("optimize", "search constrained covering lattices");
    lat_opt->add_option("--resolution", lat_resolution, "grid resolution")->check(CLI::Range(100, 5000));
    lat_opt->add_option("--json", lat_json, "write the result here");
    std::string lat_v1, lat_v2;
    auto* lat_check = lattice->add_subcommand("check", "measure one lattice");
    lat_check->add_option("--v1", lat_v1, "first basis vector x,y")->required();
    lat_check->add_option("--v2", lat_v2, "second basis vector x,y")->required();
    std::string lat_rv1, lat_rv2, lat_svg = "lattice.svg";
    double lat_radius = 6.0;
    auto* lat_render = lattice->add_subcommand("render", "draw a lattice covering");
    lat_render->add_option("--v1", lat_rv1, "first basis vector x,y (default: optimal)");
    lat_render->add_option("--v2", lat_rv2, "second basis vector x,y");
    lat_render->add_option("--radius", lat_radius, "draw disks out to this radius");
    lat_render->add_option("--svg", lat_svg, "output SVG file");

    // density
    std::string den_covering, den_csv;
    std::vector<double> den_lambdas = {25.0, 50.0, 100.0, 200.0};
    bool den_extrapolate = false;
    auto* density = app.add_subcommand("density", "covering density over growing squares");
    density->add_option("--covering", den_covering, "covering JSON")->required();
    density->add_option("--lambdas", den_lambdas, "square half-widths")->delimiter(',');
    density->add_option("--csv", den_csv, "write the table here");
    density->add_flag("--extrapolate", den_extrapolate, "fit gamma ~ g + b/lambda and print g");

    // constants-report
    std::string rep_json;
    auto* report = app.add_subcommand("constants-report", "verify the library's closed-form constants");
    report->add_option("--json", rep_json, "write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*astar) return cmd_astar(astar_max_n, astar_csv);
        if (*regions) return cmd_regions(regions_theta, regions_svg, regions_resolution);
        if (*voronoi) return cmd_voronoi(vor_polygon, vor_seeds, vor_svg, vor_report);
        if (*chain_build) return cmd_chain_build(chain_layers, chain_out);
        if (*chain_verify) return cmd_chain_verify(chain_in, chain_report);
        if (*chain_render) return cmd_chain_render(chain_rin, chain_svg);
        if (*lat_opt) return cmd_lattice_optimize(lat_resolution, lat_json);
        if (*lat_check) return cmd_lattice_check(lat_v1, lat_v2);
        if (*lat_render) return cmd_lattice_render(lat_rv1, lat_rv2, lat_radius, lat_svg);
        if (*density) return cmd_density(den_covering, den_lambdas, den_csv, den_extrapolate);
        if (*report) return cmd_constants_report(rep_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
