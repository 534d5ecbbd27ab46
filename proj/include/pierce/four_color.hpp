#pragma once

// Four color classes: among all
// rainbow triples with empty triple intersection, the maximum-area hole
// triangle (one vertex per body, interior disjoint from all three, each
// supporting line parallel to the opposite side) has its vertices meeting
// every member of the remaining family.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/geometry.hpp"
#include "pierce/instance.hpp"

namespace pierce {

struct RainbowTriple {
    std::array<size_t, 3> families{};
    std::array<size_t, 3> members{};
    std::array<Point2, 3> x;  // triangle vertices, x[i] on body i
    double area = 0;
};

namespace detail {

inline double triangle_area(Point2 a, Point2 b, Point2 c) {
    return 0.5 * std::abs(orient(a, b, c));
}

// Nonempty intersection test for three placed translates of one body.
inline bool triple_intersects(const ConvexBody& body, Point2 t1, Point2 t2,
                              Point2 t3) {
    if (body.is_disk()) {
        Point2 c1 = body.center() + t1, c2 = body.center() + t2,
               c3 = body.center() + t3;
        double r = body.radius();
        if (dist(c1, c2) < kEpsDedup) return dist(c1, c3) <= 2 * r + kEpsGeom;
        if (dist(c1, c3) < kEpsDedup || dist(c2, c3) < kEpsDedup)
            return dist(c1, c2) <= 2 * r + kEpsGeom;
        std::array<std::pair<Point2, Point2>, 3> pairs{
            std::pair{c1, c2}, std::pair{c1, c3}, std::pair{c2, c3}};
        std::array<Point2, 3> third{c3, c2, c1};
        for (int k = 0; k < 3; ++k) {
            auto cc = circle_circle(pairs[k].first, r, pairs[k].second, r);
            if (!cc) return false;  // a pair is disjoint
            for (Point2 p : *cc)
                if (dist(p, third[k]) <= r + kEpsGeom) return true;
        }
        return false;
    }
    std::vector<Point2> region;
    for (Point2 v : body.verts()) region.push_back(v + t1);
    const auto& bv = body.verts();
    size_t n = bv.size();
    for (Point2 t : {t2, t3}) {
        for (size_t e = 0; e < n && !region.empty(); ++e) {
            Point2 p0 = bv[e] + t, p1 = bv[(e + 1) % n] + t;
            Vec2 nn{(p1 - p0).y, -(p1 - p0).x};
            region = clip_halfplane(region, nn, dot(nn, p0), kEpsGeom);
        }
    }
    return !region.empty();
}

// Verify the three RainbowTriple invariants: vertices on their bodies, the
// supporting-line conditions, and an interior disjoint from all bodies.
inline bool verify_hole_triangle(const ConvexBody& body,
                                 const std::array<Point2, 3>& t,
                                 const std::array<Point2, 3>& x,
                                 double slack = kCertSlack) {
    for (int i = 0; i < 3; ++i)
        if (!contains(body, t[i], x[i], slack)) return false;
    if (triangle_area(x[0], x[1], x[2]) < 1e-12) return false;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        Vec2 edge = x[k] - x[j];
        Vec2 n = perp(edge);
        if (dot(n, x[i] - x[j]) > 0) n = -n;  // from the vertex toward its side
        double gap = support_value(body, n) + dot(n, t[i]) - dot(n, x[i]);
        if (gap > slack * std::max(1.0, norm(n))) return false;
    }
    // Interior disjointness: barycentric grid plus exact edge tests.
    for (int i = 0; i < 3; ++i) {
        for (int g1 = 1; g1 < 50; ++g1) {
            for (int g2 = 1; g2 + g1 < 50; ++g2) {
                double u = g1 / 50.0, v = g2 / 50.0;
                Point2 p = x[0] + u * (x[1] - x[0]) + v * (x[2] - x[0]);
                if (body.functional(p, t[i]) < 1.0 - 1e-7) return false;
            }
        }
        for (int e = 0; e < 3; ++e)
            if (segment_enters_interior(body, t[i], x[e], x[(e + 1) % 3]))
                return false;
    }
    return true;
}

}  // namespace detail

namespace detail {

// Exact hole triangle for polygons. Each vertex of the hole triangle touches
// its body on an edge (the supporting line is then that edge's line, forcing
// the opposite triangle side parallel to it: a linear equation on the edge
// parameters) or at a polygon vertex (the supporting normal may lie anywhere
// in the vertex cone: no equation, an inclusion checked by verification).
// Enumerating the contact combinations and solving the tiny linear systems
// finds every supporting configuration; the maximum-area verified one wins.
inline std::optional<RainbowTriple> polygon_hole_triangle(
    const ConvexBody& body, const std::array<Point2, 3>& t) {
    const auto& v = body.verts();
    size_t n = v.size();
    struct Contact {
        bool is_edge;
        size_t idx;
    };
    std::vector<Contact> contacts;
    for (size_t e = 0; e < n; ++e) contacts.push_back({true, e});
    for (size_t i = 0; i < n; ++i) contacts.push_back({false, i});

    auto base_of = [&](const Contact& c, int body_idx) {
        return v[c.idx] + t[body_idx];
    };
    auto dir_of = [&](const Contact& c) {
        return c.is_edge ? v[(c.idx + 1) % n] - v[c.idx] : Vec2{0, 0};
    };

    std::optional<RainbowTriple> best;
    std::array<Contact, 3> combo{};
    for (const Contact& c0 : contacts) {
        combo[0] = c0;
        for (const Contact& c1 : contacts) {
            combo[1] = c1;
            for (const Contact& c2 : contacts) {
                combo[2] = c2;
                // Linear system on the edge parameters: for each edge
                // contact i the opposite side is parallel to that edge,
                // i.e. <edge normal_i, x_j - x_k> = 0.
                double A[3][3] = {{0}};
                double rhs[3] = {0};
                int rows = 0;
                int var_of[3] = {-1, -1, -1};
                int vars = 0;
                for (int i = 0; i < 3; ++i)
                    if (combo[i].is_edge) var_of[i] = vars++;
                for (int i = 0; i < 3; ++i) {
                    if (!combo[i].is_edge) continue;
                    int j = (i + 1) % 3, k = (i + 2) % 3;
                    Vec2 nrm = perp(dir_of(combo[i]));
                    double r = -dot(nrm, base_of(combo[j], j) - base_of(combo[k], k));
                    if (var_of[j] >= 0) A[rows][var_of[j]] = dot(nrm, dir_of(combo[j]));
                    if (var_of[k] >= 0) A[rows][var_of[k]] = -dot(nrm, dir_of(combo[k]));
                    rhs[rows] = r;
                    ++rows;
                }
                double s[3] = {0, 0, 0};
                // Gaussian elimination on the square system (rows == vars).
                bool singular = false;
                {
                    double M[3][4];
                    for (int r = 0; r < rows; ++r) {
                        for (int c = 0; c < vars; ++c) M[r][c] = A[r][c];
                        M[r][vars] = rhs[r];
                    }
                    for (int col = 0; col < vars && !singular; ++col) {
                        int piv = col;
                        for (int r = col + 1; r < rows; ++r)
                            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
                        if (std::abs(M[piv][col]) < 1e-12) {
                            singular = true;
                            break;
                        }
                        std::swap(M[piv], M[col]);
                        for (int r = 0; r < rows; ++r) {
                            if (r == col) continue;
                            double f = M[r][col] / M[col][col];
                            for (int c = col; c <= vars; ++c) M[r][c] -= f * M[col][c];
                        }
                    }
                    if (!singular)
                        for (int col = 0; col < vars; ++col)
                            s[col] = M[col][vars] / M[col][col];
                }
                if (singular) continue;
                bool in_range = true;
                std::array<Point2, 3> x;
                for (int i = 0; i < 3; ++i) {
                    double si = var_of[i] >= 0 ? s[var_of[i]] : 0.0;
                    if (combo[i].is_edge) {
                        if (si < -1e-9 || si > 1 + 1e-9) in_range = false;
                        si = std::clamp(si, 0.0, 1.0);
                    }
                    x[i] = base_of(combo[i], i) + si * dir_of(combo[i]);
                }
                if (!in_range) continue;
                if (triangle_area(x[0], x[1], x[2]) < 1e-12) continue;
                if (best && triangle_area(x[0], x[1], x[2]) <= best->area) continue;
                if (!verify_hole_triangle(body, t, x)) continue;
                RainbowTriple rt;
                rt.x = x;
                rt.area = triangle_area(x[0], x[1], x[2]);
                best = rt;
            }
        }
    }
    return best;
}

}  // namespace detail

// Hole triangle of three pairwise-intersecting placed bodies with empty
// triple intersection. Disks use a fixed-point iteration (each vertex moves
// to the support point of its body toward the opposite side, converging to
// the supporting configuration); polygons use the exact contact enumeration.
inline RainbowTriple hole_triangle(const ConvexBody& body, Point2 t1, Point2 t2,
                                   Point2 t3) {
    if (detail::triple_intersects(body, t1, t2, t3))
        throw NoHoleTriangleError("triple intersection is nonempty");
    std::array<Point2, 3> t{t1, t2, t3};

    if (body.is_polygon()) {
        auto found = detail::polygon_hole_triangle(body, t);
        if (found) return *found;
        throw IterationDivergedError("no verified polygon hole triangle");
    }

    // Disk path: x_i = c_i + r u(phi_i). A supporting configuration solves
    // the smooth tangency system F_i = <u(phi_i), x_j - x_k> = 0 (each
    // exposing direction perpendicular to the opposite side). Newton from a
    // spread of seeds; verification rejects roots with the wrong
    // orientation, such as the outer enclosing triangle.
    std::array<Point2, 3> centers;
    for (int i = 0; i < 3; ++i) centers[i] = body.center() + t[i];
    double r = body.radius();
    std::optional<RainbowTriple> best;
    for (int seed = 0; seed < 16; ++seed) {
        std::array<double, 3> phi;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            Vec2 d = 0.5 * (centers[j] + centers[k]) - centers[i];
            if (norm(d) < 1e-12) d = {1, 0};
            phi[i] = std::atan2(d.y, d.x);
        }
        // Common rotation plus an asymmetric twist over the seed grid.
        double rot = (seed % 8) * M_PI / 4.0;
        double twist = (seed / 8) * 0.35;
        phi[0] += rot;
        phi[1] += rot + twist;
        phi[2] += rot - twist;

        bool converged = false;
        std::array<Point2, 3> x;
        for (int iter = 0; iter < 120; ++iter) {
            std::array<Vec2, 3> u, du;
            for (int i = 0; i < 3; ++i) {
                u[i] = {std::cos(phi[i]), std::sin(phi[i])};
                du[i] = {-std::sin(phi[i]), std::cos(phi[i])};
                x[i] = centers[i] + r * u[i];
            }
            std::array<double, 3> F;
            double fmax = 0;
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                F[i] = dot(u[i], x[j] - x[k]);
                fmax = std::max(fmax, std::abs(F[i]));
            }
            if (fmax < 1e-12) {
                converged = true;
                break;
            }
            double J[3][3];
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                J[i][i] = dot(du[i], x[j] - x[k]);
                J[i][j] = r * dot(u[i], du[j]);
                J[i][k] = -r * dot(u[i], du[k]);
            }
            // Solve J d = -F by elimination with partial pivoting.
            double M[3][4];
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) M[a][b] = J[a][b];
                M[a][3] = -F[a];
            }
            bool singular = false;
            for (int col = 0; col < 3 && !singular; ++col) {
                int piv = col;
                for (int rr = col + 1; rr < 3; ++rr)
                    if (std::abs(M[rr][col]) > std::abs(M[piv][col])) piv = rr;
                if (std::abs(M[piv][col]) < 1e-14) {
                    singular = true;
                    break;
                }
                std::swap(M[piv], M[col]);
                for (int rr = 0; rr < 3; ++rr) {
                    if (rr == col) continue;
                    double f = M[rr][col] / M[col][col];
                    for (int cc = col; cc < 4; ++cc) M[rr][cc] -= f * M[col][cc];
                }
            }
            if (singular) break;
            for (int i = 0; i < 3; ++i)
                phi[i] += std::clamp(M[i][3] / M[i][i], -0.5, 0.5);
        }
        if (!converged) continue;
        if (detail::triangle_area(x[0], x[1], x[2]) < 1e-12) continue;
        if (best && detail::triangle_area(x[0], x[1], x[2]) <= best->area) continue;
        if (!detail::verify_hole_triangle(body, t, x)) continue;
        RainbowTriple rt;
        rt.x = x;
        rt.area = detail::triangle_area(x[0], x[1], x[2]);
        best = rt;
    }
    if (best) return *best;
    throw IterationDivergedError("hole triangle iteration failed to verify");
}

struct FourColorResult {
    PiercingCertificate cert;
    std::optional<RainbowTriple> winner;  // empty when the Helly fallback fired
};

// The four-color piercer end to end: enumerate empty-intersection rainbow
// triples across
// the four color classes, take the maximal-area hole triangle, and pierce
// the left-out family with its vertices. With no empty triple, colorful
// Helly guarantees some family has a common point.
inline FourColorResult four_color_pierce(const ColoredInstance& inst,
                                         double slack = kCertSlack) {
    inst.validate_shape();
    if (inst.families.size() != 4)
        throw InputError("four_color_pierce needs exactly 4 colors");

    std::optional<RainbowTriple> best;
    auto lex_key = [](const RainbowTriple& rt) {
        std::array<Point2, 3> v = rt.x;
        std::sort(v.begin(), v.end(), lex_less_xy);
        return v;
    };
    auto key_less = [](const std::array<Point2, 3>& a,
                       const std::array<Point2, 3>& b) {
        for (int i = 0; i < 3; ++i) {
            if (a[i].x != b[i].x) return a[i].x < b[i].x;
            if (a[i].y != b[i].y) return a[i].y < b[i].y;
        }
        return false;
    };

    for (size_t f1 = 0; f1 < 4; ++f1)
        for (size_t f2 = f1 + 1; f2 < 4; ++f2)
            for (size_t f3 = f2 + 1; f3 < 4; ++f3) {
                const auto& A = inst.families[f1].translates;
                const auto& B = inst.families[f2].translates;
                const auto& C = inst.families[f3].translates;
                for (size_t i = 0; i < A.size(); ++i)
                    for (size_t j = 0; j < B.size(); ++j)
                        for (size_t k = 0; k < C.size(); ++k) {
                            if (detail::triple_intersects(inst.generator, A[i], B[j],
                                                          C[k]))
                                continue;
                            RainbowTriple rt =
                                hole_triangle(inst.generator, A[i], B[j], C[k]);
                            rt.families = {f1, f2, f3};
                            rt.members = {i, j, k};
                            if (!best || rt.area > best->area + 1e-12 ||
                                (std::abs(rt.area - best->area) <= 1e-12 &&
                                 key_less(lex_key(rt), lex_key(*best))))
                                best = rt;
                        }
            }

    FourColorResult res;
    if (best) {
        size_t m = 0 + 1 + 2 + 3 - best->families[0] - best->families[1] -
                   best->families[2];
        res.winner = best;
        res.cert.method = "four-color";
        res.cert.family_index = static_cast<int>(m);
        res.cert.points = {best->x[0], best->x[1], best->x[2]};
        auto w = assign_witnesses(inst.generator, inst.families[m].translates,
                                  res.cert.points, slack);
        if (!w)
            throw ClaimViolatedError(
                "a member of the remaining family misses all three vertices");
        res.cert.witnesses = *w;
        return res;
    }

    // No empty rainbow triple: some family has a common point.
    for (size_t m = 0; m < 4; ++m) {
        const auto& ts = inst.families[m].translates;
        std::optional<Point2> common;
        if (inst.generator.is_disk()) {
            std::vector<Point2> centers;
            for (Point2 t : ts) centers.push_back(inst.generator.center() + t);
            Circle c = miniball(centers);
            if (c.radius <= inst.generator.radius() + kEpsGeom) common = c.center;
        } else {
            std::vector<Point2> region;
            for (Point2 v : inst.generator.verts()) region.push_back(v + ts[0]);
            const auto& bv = inst.generator.verts();
            size_t n = bv.size();
            for (size_t ti = 1; ti < ts.size() && !region.empty(); ++ti) {
                for (size_t e = 0; e < n && !region.empty(); ++e) {
                    Point2 p0 = bv[e] + ts[ti], p1 = bv[(e + 1) % n] + ts[ti];
                    Vec2 nn{(p1 - p0).y, -(p1 - p0).x};
                    region = clip_halfplane(region, nn, dot(nn, p0), kEpsGeom);
                }
            }
            if (!region.empty()) {
                Point2 c{0, 0};
                for (Point2 v : region) c = c + v;
                common = (1.0 / static_cast<double>(region.size())) * c;
            }
        }
        if (!common) continue;
        std::vector<Point2> pts{*common};
        auto w = assign_witnesses(inst.generator, ts, pts, slack);
        if (!w) continue;
        res.cert.method = "four-color";
        res.cert.family_index = static_cast<int>(m);
        res.cert.points = pts;
        res.cert.witnesses = *w;
        return res;
    }
    throw ClaimViolatedError("no empty rainbow triple and no family with a "
                             "common point: bug or invalid input");
}

}  // namespace pierce
