#include "planecover/report.hpp"

#include "planecover/chain.hpp"
#include "planecover/disk_region.hpp"
#include "planecover/inscribed.hpp"
#include "planecover/lattice.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace planecover {

namespace {

ReportRow row(const std::string& name, double computed, double reference, double tol) {
    ReportRow r;
    r.name = name;
    r.computed = computed;
    r.reference = reference;
    r.diff = std::abs(computed - reference);
    r.tolerance = tol;
    r.pass = r.diff <= tol;
    return r;
}

}  // namespace

bool ConstantsReport::all_pass() const {
    for (const ReportRow& r : rows) {
        if (!r.pass) return false;
    }
    return true;
}

ConstantsReport constants_report() {
    const double tol = 1e-5;
    const double s3 = std::sqrt(3.0);
    ConstantsReport rep;
    rep.rows.push_back(row("constrained covering density bound", theorem_bound(), 1.68357, tol));
    rep.rows.push_back(
        row("optimal constrained lattice density", lattice_density(optimal_lattice()), 1.68357, tol));
    rep.rows.push_back(
        row("thinnest lattice covering density", lattice_density(kershner_lattice()), 1.20920, tol));
    rep.rows.push_back(row("crescent area lower bound", crude_lower_bound(), 1.64204, tol));
    rep.rows.push_back(row("largest hexagon in two-disk region", a_star(6), 1.0 + s3 / 2.0, tol));
    rep.rows.push_back(
        row("two-disk region area", region_area(region_M()), s3 / 2.0 + M_PI / 3.0, tol));
    rep.rows.push_back(row("crescent area", crescent_area(), s3 / 2.0 + M_PI / 3.0, tol));
    rep.rows.push_back(
        row("optimal constrained lattice determinant", lattice_det(optimal_lattice()), 1.0 + s3 / 2.0, tol));
    rep.rows.push_back(
        row("first dodecagon area", polygon_area(dodecagon(1)), 3.0 * (2.0 + s3), tol));
    return rep;
}

std::string report_text(const ConstantsReport& r) {
    std::ostringstream out;
    for (const ReportRow& row : r.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-42s computed=%.10f reference=%.10f diff=%.3e %s\n",
                      row.name.c_str(), row.computed, row.reference, row.diff,
                      row.pass ? "pass" : "FAIL");
        out << buf;
    }
    out << (r.all_pass() ? "all rows pass\n" : "SOME ROWS FAIL\n");
    return out.str();
}

std::string report_json(const ConstantsReport& r) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : r.rows) {
        rows.push_back({{"name", row.name},
                        {"computed", row.computed},
                        {"reference", row.reference},
                        {"diff", row.diff},
                        {"tolerance", row.tolerance},
                        {"pass", row.pass}});
    }
    nlohmann::ordered_json j;
    j["rows"] = std::move(rows);
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

}  // namespace planecover
