#pragma once

#include <string>
#include <vector>

namespace planecover {

struct ReportRow {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ConstantsReport {
    std::vector<ReportRow> rows;
    bool all_pass() const;
};

// recompute the library's closed-form constants and compare each against its
// independently stated reference value
ConstantsReport constants_report();

std::string report_text(const ConstantsReport& r);
std::string report_json(const ConstantsReport& r);

}  // namespace planecover
