#pragma once

// Minimal SVG emitter for debugging figures. Output is a pure function of
// the drawn content: fixed precision, no timestamps.

#include <cstdio>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

class SvgWriter {
  public:
    void circle(Point2 c, double r, const std::string& stroke,
                const std::string& fill = "none", double opacity = 1.0) {
        add_bounds(c - Point2{r, r});
        add_bounds(c + Point2{r, r});
        body_ += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(-c.y) + "\" r=\"" +
                 fmt(r) + "\" stroke=\"" + stroke + "\" fill=\"" + fill +
                 "\" stroke-width=\"0.01\" opacity=\"" + fmt(opacity) + "\"/>\n";
    }

    void polygon(const std::vector<Point2>& pts, const std::string& stroke,
                 const std::string& fill = "none", double opacity = 1.0) {
        if (pts.empty()) return;
        std::string s = "<polygon points=\"";
        for (Point2 p : pts) {
            add_bounds(p);
            s += fmt(p.x) + "," + fmt(-p.y) + " ";
        }
        s += "\" stroke=\"" + stroke + "\" fill=\"" + fill +
             "\" stroke-width=\"0.01\" opacity=\"" + fmt(opacity) + "\"/>\n";
        body_ += s;
    }

    void polyline(const std::vector<Point2>& pts, const std::string& stroke) {
        if (pts.size() < 2) return;
        std::string s = "<polyline points=\"";
        for (Point2 p : pts) {
            add_bounds(p);
            s += fmt(p.x) + "," + fmt(-p.y) + " ";
        }
        s += "\" stroke=\"" + stroke + "\" fill=\"none\" stroke-width=\"0.01\"/>\n";
        body_ += s;
    }

    void line(Point2 a, Point2 b, const std::string& stroke) {
        add_bounds(a);
        add_bounds(b);
        body_ += "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(-a.y) + "\" x2=\"" +
                 fmt(b.x) + "\" y2=\"" + fmt(-b.y) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"0.01\"/>\n";
    }

    void point(Point2 p, const std::string& fill, const std::string& label = "") {
        add_bounds(p);
        body_ += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(-p.y) +
                 "\" r=\"0.03\" fill=\"" + fill + "\"/>\n";
        if (!label.empty()) text(p + Point2{0.05, 0.05}, label);
    }

    void text(Point2 p, const std::string& s) {
        add_bounds(p);
        body_ += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(-p.y) +
                 "\" font-size=\"0.12\" fill=\"black\">" + s + "</text>\n";
    }

    std::string str() const {
        double pad = 0.3;
        double x0 = minx_ - pad, y0 = -maxy_ - pad;
        double w = (maxx_ - minx_) + 2 * pad, h = (maxy_ - miny_) + 2 * pad;
        if (w <= 0 || h <= 0) {
            x0 = -1;
            y0 = -1;
            w = h = 2;
        }
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
                          fmt(x0) + " " + fmt(y0) + " " + fmt(w) + " " + fmt(h) +
                          "\">\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

  private:
    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        return buf;
    }

    void add_bounds(Point2 p) {
        minx_ = std::min(minx_, p.x);
        maxx_ = std::max(maxx_, p.x);
        miny_ = std::min(miny_, p.y);
        maxy_ = std::max(maxy_, p.y);
    }

    std::string body_;
    double minx_ = 1e30, maxx_ = -1e30, miny_ = 1e30, maxy_ = -1e30;
};

inline void svg_draw_body(SvgWriter& svg, const ConvexBody& body, Point2 t,
                          const std::string& stroke, const std::string& fill = "none",
                          double opacity = 1.0) {
    if (body.is_disk()) {
        svg.circle(body.center() + t, body.radius(), stroke, fill, opacity);
    } else {
        std::vector<Point2> pts;
        for (Point2 v : body.verts()) pts.push_back(v + t);
        svg.polygon(pts, stroke, fill, opacity);
    }
}

inline const char* svg_family_color(size_t f) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};
    return colors[f % 6];
}

}  // namespace pierce
