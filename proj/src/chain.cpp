#include "planecover/chain.hpp"

#include "planecover/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace planecover {

namespace {

constexpr double kApothemStep = 1.0 + 0.8660254037844386;  // 1 + sqrt(3)/2
constexpr double kMaxTurn = M_PI / 3.0;
constexpr double kTurnMargin = 1e-6;
constexpr int kJumpInterior = 4;  // interior disks per jump

double direction_change(const Point& d_in, const Point& d_out) {
    double a = std::atan2(d_out.y(), d_out.x()) - std::atan2(d_in.y(), d_in.x());
    while (a > M_PI) a -= 2.0 * M_PI;
    while (a < -M_PI) a += 2.0 * M_PI;
    return std::abs(a);
}

struct JumpChoice {
    std::vector<Point> interior;
    std::size_t entry = 0;
};

// straight connection with exactly kJumpInterior equally spaced interior
// disks; feasible when both junction turns stay within the limit
std::optional<JumpChoice> straight_jump(const Point& exit_pt, const std::optional<Point>& dir_in,
                                        const std::vector<Point>& ring) {
    const std::size_t n = ring.size();
    std::optional<JumpChoice> best;
    double best_score = 0.0;
    for (std::size_t f = 0; f < n; ++f) {
        const Point diag = ring[f] - exit_pt;
        const double dist = diag.norm();
        if (dist <= geom_eps() || dist > kJumpInterior + 1.0) continue;  // spacing <= 1
        const double turn_exit = dir_in ? direction_change(*dir_in, diag) : 0.0;
        const double turn_entry = direction_change(diag, ring[(f + 1) % n] - ring[f]);
        if (turn_exit > kMaxTurn - kTurnMargin || turn_entry > kMaxTurn - kTurnMargin) continue;
        const double score = std::max(turn_exit, turn_entry);
        if (!best || score < best_score) {
            best_score = score;
            JumpChoice jc;
            jc.entry = f;
            for (int k = 1; k <= kJumpInterior; ++k) {
                jc.interior.push_back(exit_pt + diag * (static_cast<double>(k) / (kJumpInterior + 1)));
            }
            best = std::move(jc);
        }
    }
    return best;
}

// two-segment connection with a single bend, used where no straight jump
// keeps both junction turns small enough (the innermost rings)
std::optional<JumpChoice> dogleg_jump(const Point& exit_pt, const std::optional<Point>& dir_in,
                                      const std::vector<Point>& ring) {
    const std::size_t n = ring.size();
    std::optional<JumpChoice> best;
    double best_score = 0.0;
    for (std::size_t f = 0; f < n; ++f) {
        const Point out = ring[(f + 1) % n] - ring[f];
        const double out_ang = std::atan2(out.y(), out.x());
        for (int bdeg = -58; bdeg <= 58; bdeg += 2) {
            const double beta = out_ang - bdeg * M_PI / 180.0;
            const Point approach{std::cos(beta), std::sin(beta)};
            for (int li = 2; li <= 30; ++li) {
                const double len2 = 0.1 * li;
                const Point bend = ring[f] - len2 * approach;
                const Point leg1 = bend - exit_pt;
                const double len1 = leg1.norm();
                if (len1 < 0.2) continue;
                const double turn_exit = dir_in ? direction_change(*dir_in, leg1) : 0.0;
                const double turn_bend = direction_change(leg1, approach);
                const double turn_entry = direction_change(approach, out);
                if (std::max({turn_exit, turn_bend, turn_entry}) > kMaxTurn - kTurnMargin) continue;
                int k1 = std::max(static_cast<int>(std::ceil(len1)) - 1, 0);
                int k2 = std::max(static_cast<int>(std::ceil(len2)) - 1, 0);
                const int extra = (kJumpInterior - 1) - k1 - k2;
                if (extra < 0) continue;
                if (len1 >= len2) {
                    k1 += extra;
                } else {
                    k2 += extra;
                }
                const double score = std::max({turn_exit, turn_bend, turn_entry});
                if (!best || score < best_score) {
                    best_score = score;
                    JumpChoice jc;
                    jc.entry = f;
                    for (int k = 1; k <= k1; ++k) {
                        jc.interior.push_back(exit_pt + leg1 * (static_cast<double>(k) / (k1 + 1)));
                    }
                    jc.interior.push_back(bend);
                    for (int k = 1; k <= k2; ++k) {
                        jc.interior.push_back(bend + (ring[f] - bend) * (static_cast<double>(k) / (k2 + 1)));
                    }
                    best = std::move(jc);
                }
            }
        }
    }
    return best;
}

JumpChoice choose_jump(const Point& exit_pt, const std::optional<Point>& dir_in,
                       const std::vector<Point>& ring, int j) {
    if (auto jc = straight_jump(exit_pt, dir_in, ring)) return *jc;
    if (auto jc = dogleg_jump(exit_pt, dir_in, ring)) return *jc;
    throw std::runtime_error("no jump satisfies the turn limits for ring " + std::to_string(j));
}

Chain build_chain_impl(int K, int capture_jump, std::vector<Point>* captured) {
    Chain c;
    c.centers.emplace_back(0.0, 0.0);
    c.layer_index.push_back(0);
    for (int j = 1; j <= K; ++j) {
        const std::vector<Point> ring = layer(j);
        const Point exit_pt = c.centers.back();
        std::optional<Point> dir_in;
        if (c.centers.size() >= 2) dir_in = exit_pt - c.centers[c.centers.size() - 2];
        const JumpChoice jc = choose_jump(exit_pt, dir_in, ring, j);
        if (j == capture_jump && captured) *captured = jc.interior;
        for (const Point& p : jc.interior) {
            c.centers.push_back(p);
            c.layer_index.push_back(-j);
        }
        for (std::size_t k = 0; k < ring.size(); ++k) {
            c.centers.push_back(ring[(jc.entry + k) % ring.size()]);
            c.layer_index.push_back(j);
        }
    }
    return c;
}

}  // namespace

ConvexPolygon dodecagon(int j) {
    if (j < 1) throw std::invalid_argument("dodecagon index must be >= 1");
    const double R = (1.0 + std::sqrt(3.0)) * j / std::sqrt(2.0);
    std::vector<Point> v;
    v.reserve(12);
    for (int i = 0; i < 12; ++i) {
        const double ang = M_PI * i / 6.0;
        v.emplace_back(R * std::cos(ang), R * std::sin(ang));
    }
    return ConvexPolygon{std::move(v)};
}

std::vector<Point> layer(int j) {
    if (j < 0) throw std::invalid_argument("ring index must be >= 0");
    if (j == 0) return {Point{0.0, 0.0}};
    const ConvexPolygon dode = dodecagon(j);
    std::vector<Point> pts;
    pts.reserve(12 * j);
    for (int side = 0; side < 12; ++side) {
        const Point& a = dode.v[side];
        const Point& b = dode.v[(side + 1) % 12];
        for (int k = 0; k < j; ++k) {
            pts.push_back(a + (b - a) * (static_cast<double>(k) / j));
        }
    }
    return pts;
}

std::vector<Point> jump_path(int j) {
    if (j < 1) throw std::invalid_argument("jump index must be >= 1");
    std::vector<Point> captured;
    build_chain_impl(j, j, &captured);
    return captured;
}

Chain build_chain(int K) {
    if (K < 1) throw std::invalid_argument("need at least one ring");
    return build_chain_impl(K, -1, nullptr);
}

ChainReport verify_chain(const Chain& c) {
    if (c.centers.empty()) throw std::invalid_argument("empty chain");
    ChainReport r;
    r.disk_count = static_cast<long long>(c.centers.size());
    r.duplicate_count = r.disk_count - static_cast<long long>(dedup_points(c.centers).size());

    const double gap_limit = 1.0 + 1e-9;
    r.min_gap_ok = true;
    for (std::size_t i = 1; i < c.centers.size(); ++i) {
        if ((c.centers[i] - c.centers[i - 1]).norm() > gap_limit) r.min_gap_ok = false;
    }

    r.min_angle = M_PI;
    for (std::size_t i = 1; i + 1 < c.centers.size(); ++i) {
        const Point u = c.centers[i - 1] - c.centers[i];
        const Point w = c.centers[i + 1] - c.centers[i];
        if (u.norm() <= geom_eps() || w.norm() <= geom_eps()) continue;
        const double ang = angle_at(c.centers[i - 1], c.centers[i], c.centers[i + 1]);
        if (ang < r.min_angle) {
            r.min_angle = ang;
            r.worst_angle_index = static_cast<long long>(i);
        }
    }

    double max_norm = 0.0;
    for (const Point& p : c.centers) max_norm = std::max(max_norm, p.norm());
    const int k_cap = static_cast<int>(std::ceil(max_norm / kApothemStep)) + 1;
    int k = 0;
    while (k < k_cap && covers(dodecagon(k + 1), c.centers)) ++k;
    r.covered_up_to_layer = k;
    return r;
}

double crescent_area() { return std::sin(2.0 * M_PI / 3.0) + M_PI / 3.0; }

double crude_lower_bound() { return M_PI / crescent_area(); }

}  // namespace planecover
