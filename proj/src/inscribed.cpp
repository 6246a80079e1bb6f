#include "planecover/inscribed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace planecover {

namespace {

// closed form extended to real n, used for interpolation endpoints
double a_star_formula(double n) {
    const double x = n - 2.0;
    return std::sqrt(3.0) / 2.0 + 0.5 * x * std::sin(2.0 * M_PI / (3.0 * x));
}

}  // namespace

double a_star(int n) {
    if (n < 3) throw std::invalid_argument("a_star requires n >= 3");
    return a_star_formula(static_cast<double>(n));
}

double a_star_interp(double x) {
    if (!(x >= 3.0)) throw std::invalid_argument("a_star_interp requires x >= 3");
    const double fl = std::floor(x);
    const double frac = x - fl;
    if (frac == 0.0) return a_star_formula(fl);
    return (1.0 - frac) * a_star_formula(fl) + frac * a_star_formula(fl + 1.0);
}

AStarTable AStarTable::up_to(int max_n) {
    if (max_n < 3) throw std::invalid_argument("table needs max_n >= 3");
    AStarTable t;
    for (int n = 3; n <= max_n; ++n) t.values[n] = a_star(n);
    return t;
}

double AStarTable::interp(double x) const {
    if (values.empty()) throw std::logic_error("empty a_star table");
    const int lo = values.begin()->first;
    const int hi = values.rbegin()->first;
    if (!(x >= lo && x <= hi)) throw std::invalid_argument("x outside tabulated range");
    const int fl = std::min(static_cast<int>(std::floor(x)), hi - 1);
    const double frac = x - fl;
    return (1.0 - frac) * values.at(fl) + frac * values.at(fl + 1);
}

ConvexPolygon optimal_ngon_in_M(int n) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    std::vector<Point> v;
    v.reserve(n);
    v.emplace_back(0.0, -1.0);
    const double lo = M_PI / 6.0, hi = 5.0 * M_PI / 6.0;
    // top arc split into n-2 equal parts, endpoints included
    for (int k = 0; k <= n - 2; ++k) {
        const double ang = lo + (hi - lo) * k / (n - 2);
        v.emplace_back(std::cos(ang), std::sin(ang));
    }
    return ConvexPolygon{std::move(v)};
}

bool check_dowker(int n_max) {
    if (n_max < 4) throw std::invalid_argument("need n_max >= 4");
    for (int n = 4; n <= n_max; ++n) {
        const double mid = 0.5 * (a_star(n - 1) + a_star(n + 1));
        if (a_star(n) + 1e-12 < mid) return false;
    }
    return true;
}

double jensen_bound(const std::vector<int>& nu_list) {
    if (nu_list.empty()) throw std::invalid_argument("empty vertex-count list");
    double sum = 0.0;
    for (int nu : nu_list) {
        if (nu < 3) throw std::invalid_argument("vertex counts must be >= 3");
        sum += nu;
    }
    return a_star_interp(sum / static_cast<double>(nu_list.size()));
}

double theorem_bound() { return M_PI / a_star(6); }

// ---------------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------------

namespace {

struct BoundarySamples {
    std::vector<Point> pts;      // sample points, ccw
    std::vector<double> params;  // arc-length parameter of each sample
};

BoundarySamples sample_boundary(const DiskRegion& region, int resolution) {
    const double total = region_boundary_length(region);
    BoundarySamples s;
    const std::vector<double> offsets = region_piece_offsets(region);
    for (std::size_t i = 0; i < region.pieces.size(); ++i) {
        const BoundaryPiece& piece = region.pieces[i];
        const double len = piece_length(piece);
        if (len <= 0.0) continue;  // zero arcs contribute no fresh points
        const int segs = std::max(1, static_cast<int>(std::ceil(resolution * len / total)));
        for (int k = 0; k < segs; ++k) {
            const double t = offsets[i] + len * k / segs;
            s.params.push_back(t);
            s.pts.push_back(region_boundary_point(region, t));
        }
    }
    return s;
}

// Rooted fan DP: root fixed at sample r, choose n-1 further samples in ccw
// order maximizing the doubled fan area. Returns the chosen sample indices.
struct DpResult {
    double doubled_area = -1.0;
    std::vector<int> indices;
};

DpResult best_polygon_on_samples(const std::vector<Point>& pts, int n) {
    const int m = static_cast<int>(pts.size());
    const double neg = -std::numeric_limits<double>::infinity();
    std::vector<double> xs(m), ys(m), dp_prev(m), dp_cur(m);

    double best_val = neg;
    int best_root = -1;
    for (int r = 0; r < m; ++r) {
        const Point base = pts[r];
        for (int o = 0; o < m; ++o) {
            const Point q = pts[(r + o) % m] - base;
            xs[o] = q.x();
            ys[o] = q.y();
        }
        std::fill(dp_prev.begin(), dp_prev.end(), neg);
        std::fill(dp_prev.begin() + 1, dp_prev.end(), 0.0);
        for (int layer = 2; layer <= n - 1; ++layer) {
            for (int o = layer; o < m; ++o) {
                const double xo = xs[o], yo = ys[o];
                double best = neg;
                for (int prev = layer - 1; prev < o; ++prev) {
                    const double val = dp_prev[prev] + xs[prev] * yo - ys[prev] * xo;
                    if (val > best) best = val;
                }
                dp_cur[o] = best;
            }
            std::fill(dp_cur.begin(), dp_cur.begin() + std::min(layer, m), neg);
            std::swap(dp_prev, dp_cur);
        }
        for (int o = n - 1; o < m; ++o) {
            if (dp_prev[o] > best_val) {
                best_val = dp_prev[o];
                best_root = r;
            }
        }
    }

    // reconstruction pass for the winning root
    const Point base = pts[best_root];
    for (int o = 0; o < m; ++o) {
        const Point q = pts[(best_root + o) % m] - base;
        xs[o] = q.x();
        ys[o] = q.y();
    }
    std::vector<std::vector<int>> parent(n, std::vector<int>(m, -1));
    std::fill(dp_prev.begin(), dp_prev.end(), neg);
    std::fill(dp_prev.begin() + 1, dp_prev.end(), 0.0);
    for (int layer = 2; layer <= n - 1; ++layer) {
        for (int o = layer; o < m; ++o) {
            const double xo = xs[o], yo = ys[o];
            double best = neg;
            int arg = -1;
            for (int prev = layer - 1; prev < o; ++prev) {
                const double val = dp_prev[prev] + xs[prev] * yo - ys[prev] * xo;
                if (val > best) {
                    best = val;
                    arg = prev;
                }
            }
            dp_cur[o] = best;
            parent[layer][o] = arg;
        }
        std::fill(dp_cur.begin(), dp_cur.begin() + std::min(layer, m), neg);
        std::swap(dp_prev, dp_cur);
    }
    double final_best = neg;
    int final_o = -1;
    for (int o = n - 1; o < m; ++o) {
        if (dp_prev[o] > final_best) {
            final_best = dp_prev[o];
            final_o = o;
        }
    }
    DpResult res;
    res.doubled_area = final_best;
    std::vector<int> offsets{final_o};
    for (int layer = n - 1; layer >= 2; --layer) offsets.push_back(parent[layer][offsets.back()]);
    offsets.push_back(0);
    res.indices.reserve(n);
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) {
        res.indices.push_back((best_root + *it) % m);
    }
    return res;
}

// doubled area contribution of vertex v between fixed neighbors a and b,
// relative to the region center
double corner_term(const Point& c, const Point& a, const Point& v, const Point& b) {
    return cross(a - c, v - c) + cross(v - c, b - c);
}

// Exact coordinate ascent: move one vertex at a time to its best boundary
// position between its neighbors. On chords the optimum sits at a piece
// junction; on arcs it is a junction or the point whose tangent is parallel
// to the neighbor segment, so only finitely many candidates exist.
std::vector<double> refine_on_boundary(const DiskRegion& region, std::vector<double> ts, int max_sweeps) {
    const double total = region_boundary_length(region);
    const std::vector<double> offsets = region_piece_offsets(region);
    const int n = static_cast<int>(ts.size());
    const double min_sep = 1e-9;

    std::vector<Point> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = region_boundary_point(region, ts[i]);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool moved = false;
        for (int i = 0; i < n; ++i) {
            const int ip = (i + n - 1) % n;
            const int in = (i + 1) % n;
            const double lo = ts[ip] - (i == 0 ? total : 0.0);
            const double hi = ts[in] + (i == n - 1 ? total : 0.0);
            const Point a = pos[ip];
            const Point b = pos[in];

            double best_t = ts[i];
            double best_val = corner_term(region.center, a, pos[i], b);

            auto consider = [&](double t_raw) {
                for (int k = -1; k <= 2; ++k) {
                    const double t = t_raw + k * total;
                    if (t <= lo + min_sep || t >= hi - min_sep) continue;
                    const Point v = region_boundary_point(region, t);
                    const double val = corner_term(region.center, a, v, b);
                    if (val > best_val + 1e-15) {
                        best_val = val;
                        best_t = t;
                    }
                }
            };

            for (std::size_t p = 0; p < region.pieces.size(); ++p) {
                const BoundaryPiece& piece = region.pieces[p];
                const double len = piece_length(piece);
                if (len <= 0.0) continue;
                consider(offsets[p]);  // junction at the piece start
                if (piece.kind == PieceKind::arc) {
                    const Point d = b - a;
                    if (d.norm() > 1e-15) {
                        const double phi = std::atan2(d.y(), d.x());
                        for (const double cand : {phi + M_PI / 2.0, phi - M_PI / 2.0}) {
                            double rel = std::fmod(cand - piece.a0, 2.0 * M_PI);
                            if (rel < 0.0) rel += 2.0 * M_PI;
                            if (rel <= piece.a1 - piece.a0) consider(offsets[p] + rel);
                        }
                    }
                }
            }

            // store the lifted parameter directly: it lies strictly between the
            // neighbors, which keeps the list ascending within one period
            if (best_t != ts[i]) {
                ts[i] = best_t;
                pos[i] = region_boundary_point(region, ts[i]);
                moved = true;
            }
        }
        // renormalize the common lift so junction candidates stay reachable
        while (ts[0] < 0.0) {
            for (double& t : ts) t += total;
        }
        while (ts[0] >= total) {
            for (double& t : ts) t -= total;
        }
        if (!moved) break;
    }
    for (double& t : ts) {
        t = std::fmod(t, total);
        if (t < 0.0) t += total;
    }
    return ts;
}

}  // namespace

InscribedResult max_inscribed_ngon_oracle(const DiskRegion& region, int n, int resolution) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    if (resolution < 100) throw std::invalid_argument("need resolution >= 100");
    if (!region_is_valid(region)) throw std::invalid_argument("malformed disk region");

    const BoundarySamples samples = sample_boundary(region, resolution);
    if (static_cast<int>(samples.pts.size()) <= n) {
        throw std::invalid_argument("resolution too small for requested n");
    }

    const DpResult dp = best_polygon_on_samples(samples.pts, n);
    std::vector<double> ts;
    ts.reserve(n);
    for (int idx : dp.indices) ts.push_back(samples.params[idx]);
    std::sort(ts.begin(), ts.end());

    ts = refine_on_boundary(region, std::move(ts), 50);

    std::sort(ts.begin(), ts.end());
    InscribedResult out;
    out.polygon.v.reserve(n);
    for (double t : ts) out.polygon.v.push_back(region_boundary_point(region, t));
    double doubled = 0.0;
    for (int i = 0; i < n; ++i) {
        doubled += cross(out.polygon.v[i] - region.center, out.polygon.v[(i + 1) % n] - region.center);
    }
    out.area = 0.5 * std::abs(doubled);
    return out;
}

}  // namespace planecover
