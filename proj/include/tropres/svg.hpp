#pragma once

/**
 * SVG pictures for d = 3.  The tropical plane is drawn through
 * p -> (p_2 - p_1, p_3 - p_1) with bounded 2-cells shaded; a mixed
 * subdivision of n*Delta_2 is drawn in barycentric coordinates.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "cell_complex.hpp"
#include "errors.hpp"
#include "tropical.hpp"

namespace tropres {

namespace detail {

struct Point2
{
    double x = 0;
    double y = 0;
};

inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

inline Point2 project(const std::vector<Rational>& p)
{
    return {(p[1] - p[0]).convert_to<double>(), (p[2] - p[0]).convert_to<double>()};
}

/** Convex hull, counterclockwise, without collinear points. */
inline std::vector<Point2> convex_hull(std::vector<Point2> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3)
        return pts;
    auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i)
    {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 1e-12)
            --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

/** Maps model coordinates into a square canvas with y pointing up. */
struct Canvas
{
    double min_x = 0, min_y = 0, scale = 1, size = 600, margin = 40;

    Canvas(const std::vector<Point2>& pts, double pad)
    {
        double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
        if (!pts.empty())
        {
            lo_x = hi_x = pts[0].x;
            lo_y = hi_y = pts[0].y;
        }
        for (const auto& p : pts)
        {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
        min_x = lo_x - pad;
        min_y = lo_y - pad;
        double span = std::max({hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad, 1e-9});
        scale = (size - 2 * margin) / span;
    }

    std::string x(const Point2& p) const { return fmt(margin + (p.x - min_x) * scale); }
    std::string y(const Point2& p) const { return fmt(size - margin - (p.y - min_y) * scale); }
};

inline std::string header(double size)
{
    std::string s = fmt(size);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + s + "\" height=\"" + s +
           "\" viewBox=\"0 0 " + s + " " + s + "\">\n"
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string polygon(const Canvas& cv, const std::vector<Point2>& pts, const std::string& style)
{
    std::string s = "<polygon points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k)
        s += (k ? " " : "") + cv.x(pts[k]) + "," + cv.y(pts[k]);
    return s + "\" " + style + "/>\n";
}

inline std::string line(const Canvas& cv, const Point2& a, const Point2& b, const std::string& style)
{
    return "<line x1=\"" + cv.x(a) + "\" y1=\"" + cv.y(a) + "\" x2=\"" + cv.x(b) + "\" y2=\"" + cv.y(b) + "\" " +
           style + "/>\n";
}

inline std::string circle(const Canvas& cv, const Point2& p, double r, const std::string& style)
{
    return "<circle cx=\"" + cv.x(p) + "\" cy=\"" + cv.y(p) + "\" r=\"" + fmt(r) + "\" " + style + "/>\n";
}

inline std::string text(const Canvas& cv, const Point2& p, const std::string& body, const std::string& style)
{
    return "<text x=\"" + cv.x(p) + "\" y=\"" + cv.y(p) + "\" " + style + ">" + body + "</text>\n";
}

}   // namespace detail

/**
 * The type decomposition of T^2: bounded 2-cells shaded and labeled by
 * coarse type, bounded edges, rays clipped to the canvas, apices marked.
 */
inline std::string render_svg(const Arrangement& arr, const TropicalComplex& tc)
{
    using namespace detail;
    if (tc.ambient() != 3 || arr.dim() != 3)
        throw DimensionError("rendering supports d = 3 only");

    std::vector<Point2> anchor;
    std::map<std::size_t, Point2> vertex;
    for (auto x : tc.of_dimension(0))
    {
        vertex[x] = project(tc[x].point->coords());
        anchor.push_back(vertex[x]);
    }
    for (const auto& a : arr.apices())
        anchor.push_back(project(a.coords()));
    double lo = 0, hi = 0;
    for (const auto& p : anchor)
    {
        lo = std::min({lo, p.x, p.y});
        hi = std::max({hi, p.x, p.y});
    }
    double pad = std::max(1.0, 0.25 * (hi - lo));
    Canvas cv(anchor, pad);
    double far = 4 * (hi - lo + pad) + 10;

    std::ostringstream out;
    out << header(cv.size);
    out << "<g id=\"bounded-cells\">\n";
    for (auto x : tc.of_dimension(2))
    {
        if (!tc[x].bounded)
            continue;
        std::vector<Point2> pts;
        std::set<std::size_t> seen;
        for (auto e : tc.facets(x))
            for (auto v : tc.facets(e))
                if (seen.insert(v).second)
                    pts.push_back(vertex[v]);
        auto hull = convex_hull(pts);
        out << polygon(cv, hull, "fill=\"#c8d8ee\" stroke=\"none\"");
        Point2 c;
        for (const auto& p : hull)
        {
            c.x += p.x / static_cast<double>(hull.size());
            c.y += p.y / static_cast<double>(hull.size());
        }
        out << text(cv, c, tc[x].coarse.to_string(), "font-size=\"11\" text-anchor=\"middle\" fill=\"#333\"");
    }
    out << "</g>\n<g id=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (auto x : tc.of_dimension(1))
    {
        const auto& fs = tc.facets(x);
        if (fs.size() == 2)
        {
            out << line(cv, vertex[fs[0]], vertex[fs[1]], "");
            continue;
        }
        // ray from its vertex along the sum of the unit vectors of the sectors it meets
        std::vector<double> u(3, 0.0);
        for (std::size_t k = 0; k < 3; ++k)
            if (tc[x].coarse[k] > 0)
                u[k] = 1.0;
        Point2 dir{u[1] - u[0], u[2] - u[0]};
        double len = std::hypot(dir.x, dir.y);
        if (fs.empty() || len == 0)
            continue;
        const auto& a = vertex[fs[0]];
        out << line(cv, a, {a.x + far * dir.x / len, a.y + far * dir.y / len}, "");
    }
    out << "</g>\n<g id=\"vertices\">\n";
    for (const auto& [x, p] : vertex)
        out << circle(cv, p, 2.5, "fill=\"black\"");
    out << "</g>\n<g id=\"apices\">\n";
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        auto p = project(arr[i].coords());
        out << circle(cv, p, 5, "fill=\"none\" stroke=\"#b22\" stroke-width=\"2\"");
        out << text(cv, {p.x + 0.08 * pad, p.y + 0.08 * pad}, "v" + std::to_string(i + 1),
                    "font-size=\"12\" fill=\"#b22\"");
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

inline std::string render_svg(const Arrangement& arr) { return render_svg(arr, enumerate_cells(arr)); }

/** n*Delta_2 in barycentric coordinates: maximal cells outlined, lattice points of vertex cells marked. */
inline std::string render_svg(const MixedSubdivision& ms)
{
    using namespace detail;
    if (ms.d != 3)
        throw DimensionError("rendering supports d = 3 only");
    auto embed = [](const std::vector<unsigned>& c) {
        return Point2{c[1] + 0.5 * c[2], c[2] * std::sqrt(3.0) / 2};
    };
    double n = static_cast<double>(ms.n);
    std::vector<Point2> corners{{0, 0}, {n, 0}, {n / 2, n * std::sqrt(3.0) / 2}};
    Canvas cv(corners, 0.05 * n);

    std::ostringstream out;
    out << header(cv.size);
    out << polygon(cv, corners, "fill=\"#f4f4f4\" stroke=\"none\"");
    out << "<g id=\"cells\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (auto x : ms.maximal())
    {
        std::vector<Point2> pts;
        for (const auto& v : embed_mixed_cell(ms.cells[x]))
            pts.push_back(embed(v));
        bool fine = ms.dims[x] == ms.cells[x].fine_dim();
        out << polygon(cv, convex_hull(pts), fine ? "fill=\"#c8d8ee\"" : "fill=\"#eec8c8\"");
    }
    out << "</g>\n<g id=\"lattice-points\">\n";
    for (auto x : ms.vertices())
    {
        auto c = coarse_type_mixed(ms.cells[x]);
        auto p = embed(c.counts());
        out << circle(cv, p, 3, "fill=\"black\"");
        out << text(cv, {p.x, p.y + 0.04 * n}, c.to_string(), "font-size=\"10\" text-anchor=\"middle\" fill=\"#333\"");
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}   // namespace tropres
