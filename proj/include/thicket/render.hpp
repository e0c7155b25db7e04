#pragma once

// SVG chord diagrams for NC^A / NC^D and AR-quiver strips (SVG and ASCII).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "derived.hpp"
#include "partitions.hpp"

namespace thicket {

struct CircleStyle {
    double radius = 80.0;
    double margin = 30.0;
    double dot = 3.5;
};

struct StripStyle {
    double dx = 18.0;  // per unit of t = 2m + eps
    double dy = 36.0;
    double margin = 24.0;
    double dot = 3.0;
    double marked_dot = 6.0;
    int max_columns = 400;
};

struct Point {
    double x = 0;
    double y = 0;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

inline std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
}

inline std::string polygon(const std::vector<Point>& pts, const std::string& cls) {
    if (pts.size() == 2)
        return "  <line class=\"" + cls + "\" x1=\"" + fmt(pts[0].x) + "\" y1=\"" + fmt(pts[0].y) + "\" x2=\"" +
               fmt(pts[1].x) + "\" y2=\"" + fmt(pts[1].y) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    std::string s = "  <polygon class=\"" + cls + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + fmt(pts[i].x) + "," + fmt(pts[i].y);
    return s + "\" fill=\"#cfd8e6\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

inline std::string dot(Point p, double r, const std::string& fill) {
    return "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(r) + "\" fill=\"" + fill + "\"/>\n";
}

inline std::string text(Point p, const std::string& s) {
    return "  <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) +
           "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + s + "</text>\n";
}

}  // namespace detail

/// Position k (0-based) of `count` points: k = 0 at the top, clockwise.
inline Point circle_position(int k, int count, const CircleStyle& st = {}) {
    const double c = st.margin + st.radius;
    const double theta = M_PI / 2 - 2 * M_PI * k / count;
    return {c + st.radius * std::cos(theta), c - st.radius * std::sin(theta)};
}

inline std::string render_circle(const SetPartitionA& p, const CircleStyle& st = {}) {
    const int n = p.n();
    const double size = 2 * (st.margin + st.radius);
    std::string s = detail::svg_open(size, size);
    const Point centre{st.margin + st.radius, st.margin + st.radius};
    s += "  <circle cx=\"" + detail::fmt(centre.x) + "\" cy=\"" + detail::fmt(centre.y) + "\" r=\"" +
         detail::fmt(st.radius) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (const auto& b : p.blocks()) {
        if (b.size() < 2) continue;
        std::vector<Point> pts;
        for (int x : b) pts.push_back(circle_position(x - 1, n, st));
        s += detail::polygon(pts, "block");
    }
    for (int i = 1; i <= n; ++i) {
        const Point q = circle_position(i - 1, n, st);
        s += detail::dot(q, st.dot, "black");
        const Point lab{centre.x + (q.x - centre.x) * (1 + 14 / st.radius), centre.y + (q.y - centre.y) * (1 + 14 / st.radius)};
        s += detail::text(lab, std::to_string(i));
    }
    return s + "</svg>\n";
}

/// D-partitions on the (2n-2)-gon 1..n-1, -1..-(n-1); +-n at the centroid.
inline std::string render_circle(const DPartition& p, const CircleStyle& st = {}) {
    const int n = p.n();
    const int m = 2 * n - 2;
    auto slot = [n](int x) { return x > 0 ? x - 1 : n - 1 + (-x) - 1; };
    const double size = 2 * (st.margin + st.radius);
    const Point centre{st.margin + st.radius, st.margin + st.radius};
    std::string s = detail::svg_open(size, size);
    s += "  <circle cx=\"" + detail::fmt(centre.x) + "\" cy=\"" + detail::fmt(centre.y) + "\" r=\"" +
         detail::fmt(st.radius) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (const auto& b : p.blocks()) {
        std::vector<Point> pts;
        bool has_centre = false;
        for (int x : b) {
            if (std::abs(x) == n) {
                has_centre = true;
                continue;
            }
            pts.push_back(circle_position(slot(x), m, st));
        }
        const bool zero = SignedPartition::is_zero(b);
        // +n and -n share the centroid
        if (has_centre && !zero) pts.push_back(centre);
        if (pts.size() >= 2) s += detail::polygon(pts, zero ? "zero-block" : "block");
    }
    for (int x = 1; x < n; ++x)
        for (int y : {x, -x}) {
            const Point q = circle_position(slot(y), m, st);
            s += detail::dot(q, st.dot, "black");
            const Point lab{centre.x + (q.x - centre.x) * (1 + 14 / st.radius), centre.y + (q.y - centre.y) * (1 + 14 / st.radius)};
            s += detail::text(lab, std::to_string(y));
        }
    s += detail::dot(centre, st.dot, "black");
    s += detail::text({centre.x, centre.y + 14}, "&#177;" + std::to_string(n));
    return s + "</svg>\n";
}

struct StripWindow {
    int m_lo = 0;
    int m_hi = 12;
    int period = 0;  // dashed boundary every `period` columns, 0 for none
};

inline void check_window(const StripWindow& w, const StripStyle& st) {
    if (w.m_hi <= w.m_lo) throw WindowTooLarge("window must be non-empty");
    if (w.m_hi - w.m_lo > st.max_columns)
        throw WindowTooLarge("window of " + std::to_string(w.m_hi - w.m_lo) + " columns exceeds the cap of " +
                             std::to_string(st.max_columns));
}

inline std::string render_ar_strip_svg(const Context& ctx, const RootSet& roots, const StripWindow& w,
                                       const StripStyle& st = {}) {
    check_window(w, st);
    const ZDelta& zd = ctx.zd;
    const int n = ctx.rs.rank();
    const auto& eps = zd.potential();
    const int emax = *std::max_element(eps.begin(), eps.end());
    const int t_lo = 2 * w.m_lo;
    const int t_hi = 2 * (w.m_hi - 1) + emax;
    auto pos = [&](Vertex v) {
        return Point{st.margin + (zd.t_of(v) - t_lo) * st.dx, st.margin + v.q * st.dy};
    };
    const double width = 2 * st.margin + (t_hi - t_lo) * st.dx;
    const double height = 2 * st.margin + (n - 1) * st.dy;
    std::string s = detail::svg_open(width, height);
    if (w.period > 0)
        for (int m = w.m_lo; m <= w.m_hi; ++m) {
            if (mod_pos(m, w.period) != 0) continue;
            const double x = st.margin + (2 * m - t_lo) * st.dx;
            s += "  <line class=\"boundary\" x1=\"" + detail::fmt(x) + "\" y1=\"0\" x2=\"" + detail::fmt(x) + "\" y2=\"" +
                 detail::fmt(height) + "\" stroke=\"#999\" stroke-dasharray=\"4,3\"/>\n";
        }
    auto in = [&](Vertex v) { return v.m >= w.m_lo && v.m < w.m_hi; };
    for (int m = w.m_lo; m < w.m_hi; ++m)
        for (auto [a, b] : ctx.rs.arrows()) {
            for (auto [u, v] : {std::pair<Vertex, Vertex>{{m, a}, {m, b}}, {{m - 1, b}, {m, a}}}) {
                if (!in(u) || !in(v)) continue;
                const Point p = pos(u), q = pos(v);
                s += "  <line class=\"arrow\" x1=\"" + detail::fmt(p.x) + "\" y1=\"" + detail::fmt(p.y) + "\" x2=\"" +
                     detail::fmt(q.x) + "\" y2=\"" + detail::fmt(q.y) + "\" stroke=\"#666\" stroke-width=\"0.8\"/>\n";
            }
        }
    for (int m = w.m_lo; m < w.m_hi; ++m)
        for (int q = 0; q < n; ++q) {
            const Vertex v{m, q};
            const bool marked = roots.test(zd.root_index(v));
            s += marked ? detail::dot(pos(v), st.marked_dot, "black") : detail::dot(pos(v), st.dot, "#bbb");
        }
    return s + "</svg>\n";
}

/// One text row per vertex of Delta; '*' marked, 'o' unmarked, '|' boundary.
inline std::string render_ar_strip_ascii(const Context& ctx, const RootSet& roots, const StripWindow& w,
                                         const StripStyle& st = {}) {
    check_window(w, st);
    const ZDelta& zd = ctx.zd;
    const int n = ctx.rs.rank();
    const auto& eps = zd.potential();
    const int emax = *std::max_element(eps.begin(), eps.end());
    const int t_lo = 2 * w.m_lo;
    const int t_hi = 2 * (w.m_hi - 1) + emax;
    std::string out;
    for (int q = 0; q < n; ++q) {
        std::string row(static_cast<std::size_t>(2 * (t_hi - t_lo) + 2), ' ');
        if (w.period > 0)
            for (int m = w.m_lo; m < w.m_hi; ++m)
                if (mod_pos(m, w.period) == 0) row[2 * (2 * m - t_lo)] = '|';
        for (int m = w.m_lo; m < w.m_hi; ++m) {
            const Vertex v{m, q};
            row[2 * (zd.t_of(v) - t_lo) + 1] = roots.test(zd.root_index(v)) ? '*' : 'o';
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += std::to_string(q + 1) + " " + row + "\n";
    }
    return out;
}

}  // namespace thicket
