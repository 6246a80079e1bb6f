#include "planecover/covering_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace planecover {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string write_covering_json(const CoveringFile& c) {
    if (!c.tags.empty() && c.tags.size() != c.centers.size()) {
        throw std::invalid_argument("tags must be empty or match the number of centers");
    }
    nlohmann::ordered_json j;
    j["radius"] = c.radius;
    j["ordered"] = c.ordered;
    nlohmann::ordered_json centers = nlohmann::ordered_json::array();
    for (const Point& p : c.centers) {
        centers.push_back(nlohmann::ordered_json::array({p.x(), p.y()}));
    }
    j["centers"] = std::move(centers);
    if (!c.tags.empty()) j["tags"] = c.tags;
    return j.dump(2) + "\n";
}

CoveringFile read_covering_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    CoveringFile c;
    c.radius = j.at("radius").get<double>();
    if (c.radius != 1.0) throw std::invalid_argument("covering radius must be 1");
    c.ordered = j.at("ordered").get<bool>();
    for (const auto& e : j.at("centers")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("center must be [x, y]");
        const Point p{e[0].get<double>(), e[1].get<double>()};
        if (!p.allFinite()) throw std::invalid_argument("center coordinates must be finite");
        c.centers.push_back(p);
    }
    if (j.contains("tags")) {
        c.tags = j.at("tags").get<std::vector<std::string>>();
        if (c.tags.size() != c.centers.size()) {
            throw std::invalid_argument("tags must match the number of centers");
        }
    }
    return c;
}

void save_covering(const CoveringFile& c, const std::string& path) {
    write_text_file(path, write_covering_json(c));
}

CoveringFile load_covering(const std::string& path) {
    return read_covering_json(read_text_file(path));
}

CoveringFile covering_from_chain(const Chain& chain) {
    if (chain.centers.size() != chain.layer_index.size()) {
        throw std::invalid_argument("chain centers and layer indices disagree");
    }
    CoveringFile c;
    c.ordered = true;
    c.centers = chain.centers;
    c.tags.reserve(chain.layer_index.size());
    for (const int t : chain.layer_index) {
        c.tags.push_back(t >= 0 ? "layer:" + std::to_string(t) : "jump:" + std::to_string(-t));
    }
    return c;
}

Chain chain_from_covering(const CoveringFile& c) {
    if (!c.ordered) throw std::invalid_argument("chain requires an ordered covering");
    if (c.tags.size() != c.centers.size()) {
        throw std::invalid_argument("chain requires one tag per center");
    }
    Chain chain;
    chain.centers = c.centers;
    chain.layer_index.reserve(c.tags.size());
    for (const std::string& tag : c.tags) {
        const auto colon = tag.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad tag: " + tag);
        const std::string kind = tag.substr(0, colon);
        const int j = std::stoi(tag.substr(colon + 1));
        if (kind == "layer") {
            chain.layer_index.push_back(j);
        } else if (kind == "jump") {
            chain.layer_index.push_back(-j);
        } else {
            throw std::invalid_argument("bad tag: " + tag);
        }
    }
    return chain;
}

std::string centers_csv(const std::vector<Point>& centers) {
    std::ostringstream out;
    out << "x,y\n";
    for (const Point& p : centers) out << fmt17(p.x()) << ',' << fmt17(p.y()) << '\n';
    return out.str();
}

std::string density_csv(const DensityTable& table) {
    std::ostringstream out;
    out << "lambda,count,gamma\n";
    for (const DensityRow& r : table.rows) {
        out << fmt17(r.lambda) << ',' << r.count << ',' << fmt17(r.gamma) << '\n';
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace planecover
