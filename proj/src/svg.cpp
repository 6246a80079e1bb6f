#include "planecover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace planecover {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

// collects drawing commands in plane coordinates (y up) and emits them inside
// a y-flipping group with an integer viewBox around everything drawn
class SvgDoc {
  public:
    void include_point(const Point& p, double r = 0.0) {
        minx_ = std::min(minx_, p.x() - r);
        maxx_ = std::max(maxx_, p.x() + r);
        miny_ = std::min(miny_, p.y() - r);
        maxy_ = std::max(maxy_, p.y() + r);
    }

    void circle(const Point& c, double r, const std::string& style) {
        include_point(c, r);
        body_ << "  <circle cx=\"" << num(c.x()) << "\" cy=\"" << num(c.y()) << "\" r=\""
              << num(r) << "\" " << style << "/>\n";
    }

    void polygon(const std::vector<Point>& pts, const std::string& style, bool close = true) {
        if (pts.empty()) return;
        for (const Point& p : pts) include_point(p);
        body_ << (close ? "  <polygon points=\"" : "  <polyline points=\"");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << num(pts[i].x()) << ',' << num(pts[i].y());
        }
        body_ << "\" " << style << "/>\n";
    }

    void path(const std::string& d, const std::string& style) {
        body_ << "  <path d=\"" << d << "\" " << style << "/>\n";
    }

    void rect(double x0, double y0, double x1, double y1, const std::string& style) {
        include_point(Point{x0, y0});
        include_point(Point{x1, y1});
        body_ << "  <rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
              << num(x1 - x0) << "\" height=\"" << num(y1 - y0) << "\" " << style << "/>\n";
    }

    std::string finish(double pad = 1.0) const {
        if (minx_ > maxx_) throw std::runtime_error("nothing to render");
        // the group flips y, so the visible y range is [-maxy, -miny]
        const long x0 = static_cast<long>(std::floor(minx_ - pad));
        const long x1 = static_cast<long>(std::ceil(maxx_ + pad));
        const long y0 = static_cast<long>(std::floor(-maxy_ - pad));
        const long y1 = static_cast<long>(std::ceil(-miny_ + pad));
        const long w = x1 - x0, h = y1 - y0;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << y0 << ' '
            << w << ' ' << h << "\" width=\"800\" height=\""
            << static_cast<long>(std::lround(800.0 * h / w)) << "\">\n";
        out << " <g transform=\"scale(1,-1)\">\n";
        out << body_.str();
        out << " </g>\n</svg>\n";
        return out.str();
    }

  private:
    std::ostringstream body_;
    double minx_ = 1e300, maxx_ = -1e300, miny_ = 1e300, maxy_ = -1e300;
};

const char* kDiskStyle = "fill=\"#4a90d9\" fill-opacity=\"0.18\" stroke=\"#2a6099\" stroke-width=\"0.02\"";
const char* kDotStyle = "fill=\"#1a3d66\"";
const char* kOutlineStyle = "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.06\"";
const char* kPathStyle = "fill=\"none\" stroke=\"#1a3d66\" stroke-width=\"0.05\"";

std::string cell_style(std::size_t i) {
    std::ostringstream s;
    s << "fill=\"hsl(" << (i * 47) % 360
      << ",60%,70%)\" fill-opacity=\"0.35\" stroke=\"#444444\" stroke-width=\"0.02\"";
    return s.str();
}

// arc path for one region, splitting arcs so each SVG segment spans <= pi/2
std::string region_path(const DiskRegion& region) {
    std::ostringstream d;
    bool first = true;
    for (const BoundaryPiece& piece : region.pieces) {
        const Point start = piece_start(region, piece);
        if (first) {
            d << "M " << num(start.x()) << ' ' << num(start.y()) << ' ';
            first = false;
        }
        if (piece.kind == PieceKind::chord) {
            d << "L " << num(piece.p1.x()) << ' ' << num(piece.p1.y()) << ' ';
        } else {
            const double span = piece.a1 - piece.a0;
            const int parts = std::max(1, static_cast<int>(std::ceil(span / (M_PI / 2.0))));
            for (int k = 1; k <= parts; ++k) {
                const double a = piece.a0 + span * k / parts;
                const Point p = region.center + Point{std::cos(a), std::sin(a)};
                d << "A 1 1 0 0 1 " << num(p.x()) << ' ' << num(p.y()) << ' ';
            }
        }
    }
    d << "Z";
    return d.str();
}

}  // namespace

std::string render_svg(const std::vector<Point>& centers, double lambda) {
    if (centers.empty()) throw std::invalid_argument("empty covering");
    SvgDoc doc;
    for (const Point& c : centers) doc.circle(c, 1.0, kDiskStyle);
    for (const Point& c : centers) doc.circle(c, 0.04, kDotStyle);
    if (lambda > 0.0) doc.rect(-lambda, -lambda, lambda, lambda, kOutlineStyle);
    return doc.finish();
}

std::string render_svg(const VoronoiPartition& partition) {
    SvgDoc doc;
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
        if (!partition.cells[i].empty()) doc.polygon(partition.cells[i].v, cell_style(i));
    }
    doc.polygon(partition.boundary.v, kOutlineStyle);
    for (const Point& s : partition.seeds) doc.circle(s, 0.04, kDotStyle);
    return doc.finish();
}

std::string render_svg(const DiskRegion& region, const ConvexPolygon& inscribed) {
    if (!region_is_valid(region)) throw std::invalid_argument("invalid region");
    SvgDoc doc;
    doc.include_point(region.center, 1.0);
    doc.path(region_path(region),
             "fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#2a6099\" stroke-width=\"0.01\"");
    if (!inscribed.empty()) {
        doc.polygon(inscribed.v,
                    "fill=\"#e67e22\" fill-opacity=\"0.35\" stroke=\"#a35410\" stroke-width=\"0.01\"");
    }
    return doc.finish(0.5);
}

std::string render_svg(const Chain& chain) {
    if (chain.centers.empty()) throw std::invalid_argument("empty chain");
    SvgDoc doc;
    for (const Point& c : chain.centers) doc.circle(c, 1.0, kDiskStyle);
    doc.polygon(chain.centers, kPathStyle, /*close=*/false);
    for (const Point& c : chain.centers) doc.circle(c, 0.04, kDotStyle);
    return doc.finish();
}

std::string render_svg(const Lattice& lattice, double radius) {
    SvgDoc doc;
    for (const Point& p : lattice_points_in_radius(lattice, radius)) {
        doc.circle(p, 1.0, kDiskStyle);
        doc.circle(p, 0.04, kDotStyle);
    }
    return doc.finish();
}

}  // namespace planecover
