#pragma once

#include "planecover/chain.hpp"
#include "planecover/density.hpp"
#include "planecover/geometry.hpp"

#include <string>
#include <vector>

namespace planecover {

// on-disk description of a unit-disk covering; `ordered` marks center lists
// whose sequence is meaningful (consecutive disks overlap)
struct CoveringFile {
    double radius = 1.0;
    bool ordered = false;
    std::vector<Point> centers;
    std::vector<std::string> tags;  // empty, or one tag per center
};

// JSON serialization; writing then reading reproduces the struct exactly and
// re-writing yields byte-identical output
std::string write_covering_json(const CoveringFile& c);
CoveringFile read_covering_json(const std::string& text);

void save_covering(const CoveringFile& c, const std::string& path);
CoveringFile load_covering(const std::string& path);

// chains round-trip through coverings with "layer:<j>" / "jump:<j>" tags
CoveringFile covering_from_chain(const Chain& chain);
Chain chain_from_covering(const CoveringFile& c);

// CSV writers (full double precision)
std::string centers_csv(const std::vector<Point>& centers);
std::string density_csv(const DensityTable& table);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace planecover
