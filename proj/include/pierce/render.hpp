#pragma once

// Figure rendering: instances, certificates and the construction overlays
// (blown-up balls, hexagon frames, cover triangles, lens points). Output is
// byte-stable for identical inputs.

#include <string>

#include "pierce/disk.hpp"
#include "pierce/four_color.hpp"
#include "pierce/svg.hpp"
#include "pierce/symmetric.hpp"
#include "pierce/triangle.hpp"

namespace pierce {

namespace detail {

inline void draw_instance(SvgWriter& svg, const ColoredInstance& inst) {
    for (size_t f = 0; f < inst.families.size(); ++f)
        for (Point2 t : inst.families[f].translates)
            svg_draw_body(svg, inst.generator, t, svg_family_color(f),
                          svg_family_color(f), 0.15);
}

inline void draw_points(SvgWriter& svg, const std::vector<Point2>& pts,
                        const std::string& color) {
    int idx = 1;
    for (Point2 p : pts) svg.point(p, color, "p" + std::to_string(idx++));
}

}  // namespace detail

inline std::string render_symmetric(const ColoredInstance& inst,
                                    const SymmetricResult& res) {
    SvgWriter svg;
    detail::draw_instance(svg, inst);
    Gauge g = difference_gauge(inst.generator);
    Point2 ck = inst.generator.reference_center();
    ConvexBody s2 = scaled_ball(g, 2.0);
    svg_draw_body(svg, s2, res.cons.x1 - ck, "#888888");
    svg_draw_body(svg, s2, res.cons.x2 - ck, "#888888");
    svg_draw_body(svg, g.unit_ball, res.cons.r1 - ck, "#000000");
    svg_draw_body(svg, g.unit_ball, res.cons.r2 - ck, "#000000");
    svg.point(res.cons.q, "#555555", "q");
    svg.point(res.cons.x1, "#555555", "x1");
    svg.point(res.cons.x2, "#555555", "x2");
    detail::draw_points(svg, res.cert.points, "#000000");
    return svg.str();
}

inline std::string render_jung(const ColoredInstance& inst,
                               const JungPierceResult& res) {
    SvgWriter svg;
    detail::draw_instance(svg, inst);
    Gauge g = difference_gauge(inst.generator);
    Point2 ck = inst.generator.reference_center();
    svg_draw_body(svg, scaled_ball(g, std::max(res.jung.j, 1.0)),
                  res.ball_center - ck, "#888888");
    detail::draw_points(svg, res.cert.points, "#000000");
    return svg.str();
}

inline std::string render_triangle(const ColoredInstance& inst,
                                   const TrianglePierceResult& res) {
    SvgWriter svg;
    detail::draw_instance(svg, inst);
    AffineMap inv = res.to_normalized.inverse();
    const HexagonFrame& f = res.cover.frame;
    // Hexagon ABCDEF back in instance coordinates.
    std::vector<Point2> hex;
    for (Point2 v : f.v) hex.push_back(inv.apply(f.from_frame(v)));
    svg.polygon(hex, "#000000");
    // The three unit cover triangles, in normalized space at translate w.
    for (Point2 v : res.cover.triple.unit_translate) {
        Point2 w = f.unit_translate_real(v);
        std::vector<Point2> tri;
        for (Point2 u : kUnitTriangle) tri.push_back(inv.apply(u + w));
        svg.polygon(tri, "#555555");
    }
    svg.point(inv.apply(f.from_frame(res.cover.triple.K)), "#555555", "K");
    svg.point(inv.apply(f.from_frame(res.cover.triple.L)), "#555555", "L");
    svg.point(inv.apply(f.from_frame(res.cover.triple.M)), "#555555", "M");
    detail::draw_points(svg, res.cert.points, "#000000");
    return svg.str();
}

inline std::string render_disk_sets(const std::vector<std::vector<Point2>>& sets,
                                    const DiskPierceResult& res) {
    SvgWriter svg;
    for (size_t s = 0; s < sets.size(); ++s)
        for (Point2 p : sets[s]) svg.point(p, svg_family_color(s));
    // Unit disks around the excluded set's diameter endpoints bound the lens.
    if (res.dispatch != DiskCase::Borsuk2) {
        svg.circle(res.diam_a, 1.0, "#bbbbbb");
        svg.circle(res.diam_b, 1.0, "#bbbbbb");
    }
    for (const CoverDisk& d : res.disks) svg.circle(d.center, d.radius, "#000000");
    for (const auto& [name, p] : res.landmarks) svg.point(p, "#555555", name);
    return svg.str();
}

inline std::string render_disk_instance(const ColoredInstance& inst,
                                        const DiskPierceResult& res) {
    SvgWriter svg;
    detail::draw_instance(svg, inst);
    double scale = 2.0 * inst.generator.radius();
    if (res.dispatch != DiskCase::Borsuk2) {
        svg.circle(res.diam_a, scale, "#bbbbbb");
        svg.circle(res.diam_b, scale, "#bbbbbb");
    }
    for (const CoverDisk& d : res.disks) svg.circle(d.center, d.radius, "#000000");
    for (const auto& [name, p] : res.landmarks) svg.point(p, "#555555", name);
    detail::draw_points(svg, res.pierce_cert.points, "#000000");
    return svg.str();
}

inline std::string render_four_color(const ColoredInstance& inst,
                                     const FourColorResult& res) {
    SvgWriter svg;
    detail::draw_instance(svg, inst);
    if (res.winner) {
        std::vector<Point2> tri{res.winner->x[0], res.winner->x[1], res.winner->x[2]};
        svg.polygon(tri, "#000000");
    }
    detail::draw_points(svg, res.cert.points, "#000000");
    return svg.str();
}

}  // namespace pierce
