#pragma once

// Unit-distance point sets: k >= 2 point sets with all cross distances at
// most 1. Exclude the set of maximum diameter; the rest fits in the lens of
// two unit disks and is covered by three disks of diameter strictly less
// than 1. Dispatch on the diameter d of the excluded set:
//   (1a) 2/sqrt(3) <= d <= 2 : fixed 25-degree construction at d = 2/sqrt(3)
//   (1b) 1 < d < 2/sqrt(3)   : strip construction inside the unit lens
//   (2)  d <= 1              : Borsuk cover of the whole union via the
//                              width-1 hexagon cut into three pentagons.
// For families of equal disks the cover-disk centers pierce every family but
// the excluded one.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/gauge.hpp"
#include "pierce/geometry.hpp"
#include "pierce/instance.hpp"

namespace pierce {

// Every returned cover disk keeps its diameter at or below this.
inline constexpr double kDiskDiameterCap = 1.0 - 1e-6;

struct CoverDisk {
    Point2 center;
    double radius = 0;
};

namespace detail {

inline bool in_disk(const CoverDisk& d, Point2 p, double slack) {
    return dist(p, d.center) <= d.radius + slack;
}

inline bool in_lens(Point2 p, double r, double slack) {
    Point2 x1{-r / 2, 0}, y1{r / 2, 0};
    return dist(p, x1) <= 1.0 + slack && dist(p, y1) <= 1.0 + slack;
}

// Sampling of A(r), the lens of the unit disks at (+-r/2, 0): boundary arcs
// plus an interior grid.
inline std::vector<Point2> sample_lens(double r, int target) {
    std::vector<Point2> pts;
    double half = std::sqrt(std::max(0.0, 1.0 - r * r / 4.0));  // top y of the lens
    double xext = 1.0 - r / 2.0;                                // right x of the lens
    int arc = std::max(target / 4, 8);
    for (int k = 0; k <= arc; ++k) {
        double t = -half + 2 * half * k / arc;
        double dx = std::sqrt(std::max(0.0, 1.0 - t * t)) - r / 2.0;
        pts.push_back({dx, t});   // right arc (circle around -r/2)
        pts.push_back({-dx, t});  // left arc
    }
    int grid = static_cast<int>(std::sqrt(static_cast<double>(target)));
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; j <= grid; ++j) {
            Point2 p{-xext + 2 * xext * i / std::max(grid, 1),
                     -half + 2 * half * j / std::max(grid, 1)};
            if (in_lens(p, r, -1e-9)) pts.push_back(p);
        }
    }
    return pts;
}

}  // namespace detail

struct LensCover {
    double r0 = 2.0 / std::sqrt(3.0);
    Point2 a, b, c, e;  // top/bottom lens corners and the 25-degree points
    std::array<CoverDisk, 3> disks;
    double be = 0;            // |b - e|
    double circumradius = 0;  // circumradius of triangle ace
};

// Case (1a) cover, computed once at r0 = 2/sqrt(3) and valid for every
// r >= r0 since A(r) shrinks as r grows. c and e sit on the far circles, 25
// degrees off the vertical axis through b; the cover is the circumdisk of
// ace plus the disks on diameters [c,b] and [b,e].
inline LensCover lens_cover_three(double r) {
    const double r0 = 2.0 / std::sqrt(3.0);
    if (r < r0 - 1e-9 || r > 2.0 + 1e-9)
        throw InputError("lens_cover_three needs r in [2/sqrt(3), 2]");
    LensCover lc;
    Point2 x1{-r0 / 2, 0}, y1{r0 / 2, 0};
    double half = std::sqrt(1.0 - r0 * r0 / 4.0);
    lc.a = {0, half};
    lc.b = {0, -half};
    const double deg25 = 25.0 * M_PI / 180.0;
    // b lies on both circles; the ray from b at the given tilt from the
    // upward axis hits the circle again at t = -2 d.(b - center).
    auto ray_hit = [&](Point2 center, double tilt) {
        Vec2 d{std::cos(M_PI / 2 + tilt), std::sin(M_PI / 2 + tilt)};
        double t = -2.0 * dot(d, lc.b - center);
        return lc.b + t * d;
    };
    lc.c = ray_hit(y1, +deg25);  // upper left, on the boundary of B(y1)
    lc.e = ray_hit(x1, -deg25);  // upper right, on the boundary of B(x1)
    lc.be = dist(lc.b, lc.e);
    Circle circ = detail::circum3(lc.a, lc.c, lc.e);
    lc.circumradius = circ.radius;
    if (!(lc.be < 1.0))
        throw TheoremViolationError("25-degree construction: |b-e| >= 1");
    if (!(lc.circumradius < 0.5))
        throw TheoremViolationError("25-degree construction: circumradius >= 1/2");
    lc.disks[0] = {circ.center, circ.radius};
    lc.disks[1] = {0.5 * (lc.c + lc.b), 0.5 * lc.be};
    lc.disks[2] = {0.5 * (lc.b + lc.e), 0.5 * lc.be};
    for (const CoverDisk& d : lc.disks)
        if (2 * d.radius > kDiskDiameterCap)
            throw TheoremViolationError("cover disk diameter too close to 1");
    for (Point2 p : detail::sample_lens(r0, 2000)) {
        bool ok = false;
        for (const CoverDisk& d : lc.disks)
            if (detail::in_disk(d, p, kCertSlack)) ok = true;
        if (!ok) throw TheoremViolationError("lens cover misses a sample of A(r0)");
    }
    return lc;
}

// Frozen geometry of case (1b), in the A(1) frame with x1 = (-1/2, 0) and
// y1 = (1/2, 0).
struct StripFrame {
    Point2 p, a, b;        // p = (0, 1/sqrt3); a, b = lens top and bottom
    Point2 q, s;           // unit circle at -p meets the lens boundary
    Point2 z, w, xl, yl;   // horizontal chord endpoints through p and -p
    Point2 o1;             // circumcenter of triangle a q s
    Point2 qp, sp;         // circle(o1, 0.49) meets the lens boundary
    double alpha_deg = 0;  // angle q-a-o in degrees
    double qa = 0;         // |q - a|
    double o1a = 0;        // |o1 - a|
    std::array<CoverDisk, 3> upper;  // covers the lens cap above the xl-yl line
};

inline StripFrame make_strip_frame() {
    StripFrame f;
    const double is3 = 1.0 / std::sqrt(3.0);
    Point2 x1{-0.5, 0}, y1{0.5, 0};
    f.p = {0, is3};
    f.a = {0, std::sqrt(3.0) / 2};
    f.b = {0, -std::sqrt(3.0) / 2};
    auto cc = circle_circle(Point2{0, -is3}, 1.0, x1, 1.0);
    if (!cc) throw TheoremViolationError("strip frame: q construction failed");
    f.q = (*cc)[0].y > (*cc)[1].y ? (*cc)[0] : (*cc)[1];
    if (!(f.q.x > 0) || dist(f.q, y1) > 1.0 + kEpsGeom)
        throw TheoremViolationError("strip frame: q not on the lens boundary");
    f.s = {-f.q.x, f.q.y};
    double chord = std::sqrt(1.0 - is3 * is3) - 0.5;
    f.z = {-chord, is3};
    f.w = {chord, is3};
    f.xl = {-chord, -is3};
    f.yl = {chord, -is3};
    Circle circ = detail::circum3(f.a, f.q, f.s);
    f.o1 = circ.center;
    f.o1a = dist(f.o1, f.a);
    f.qa = dist(f.q, f.a);
    f.alpha_deg = std::atan2(std::abs(f.q.x), f.a.y - f.q.y) * 180.0 / M_PI;
    if (!(f.o1a < 0.47) || !(f.qa < 0.72) || !(f.alpha_deg < 39.3))
        throw TheoremViolationError("strip frame constants out of the stated bounds");
    auto qq = circle_circle(f.o1, 0.49, x1, 1.0);
    if (!qq) throw TheoremViolationError("strip frame: q' construction failed");
    // Keep the crossing on the lens boundary (inside the other unit disk).
    Point2 qp = (*qq)[0];
    bool ok0 = dist((*qq)[0], y1) <= 1.0 + kEpsGeom;
    bool ok1 = dist((*qq)[1], y1) <= 1.0 + kEpsGeom;
    if (!ok0 && !ok1)
        throw TheoremViolationError("strip frame: q' not on the lens boundary");
    if (!ok0 || (ok1 && (*qq)[1].x > qp.x)) qp = (*qq)[1];
    f.qp = qp;
    f.sp = {-qp.x, qp.y};
    double dpq = dist(Point2{0, -is3}, f.qp);
    if (!(dpq < 1.0)) throw TheoremViolationError("strip frame: |{-p} - q'| >= 1");
    f.upper[0] = {0.5 * (Point2{0, -is3} + f.qp), 0.5 * dpq};
    f.upper[1] = {0.5 * (Point2{0, -is3} + f.sp), 0.5 * dpq};
    f.upper[2] = {f.o1, 0.49};
    for (const CoverDisk& d : f.upper)
        if (2 * d.radius > kDiskDiameterCap)
            throw TheoremViolationError("strip cover disk diameter too close to 1");
    for (Point2 pt : detail::sample_lens(1.0, 2000)) {
        if (pt.y < -is3 - 1e-9) continue;
        bool ok = false;
        for (const CoverDisk& d : f.upper)
            if (detail::in_disk(d, pt, kCertSlack)) ok = true;
        if (!ok) throw TheoremViolationError("strip cover misses a sample of the cap");
    }
    return f;
}

// Case (1b): points inside A(1). A point strictly above the chord through p
// forces everything into the cap above the chord through -p (covered by the
// upper three disks); a point strictly below the chord through -p forces the
// mirrored cap. Both at once is impossible for valid inputs.
inline std::array<CoverDisk, 3> strip_cover_three(const std::vector<Point2>& points,
                                                  const StripFrame& frame) {
    const double is3 = 1.0 / std::sqrt(3.0);
    bool above = false, below = false;
    for (Point2 p : points) {
        if (p.y > is3) above = true;
        if (p.y < -is3) below = true;
    }
    if (above && below)
        throw RegionConflictError(
            "points strictly above zw and strictly below xy simultaneously");
    std::array<CoverDisk, 3> cover = frame.upper;
    if (below)
        for (CoverDisk& d : cover) d.center.y = -d.center.y;
    for (Point2 p : points) {
        bool ok = false;
        for (const CoverDisk& d : cover)
            if (detail::in_disk(d, p, kCertSlack)) ok = true;
        if (!ok) throw TheoremViolationError("strip cover misses an input point");
    }
    return cover;
}

// Case (2): any set of diameter <= 1 fits in a regular hexagon of width 1;
// cut it into three pentagons whose circumdisks have diameter sqrt(3)/2.
inline std::array<CoverDisk, 3> borsuk_three_cover(const std::vector<Point2>& X) {
    if (X.empty()) throw InputError("borsuk_three_cover of empty set");
    double diam = 0;
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j)
            diam = std::max(diam, dist(X[i], X[j]));
    if (diam > 1.0 + kCrossTol)
        throw InputError("borsuk_three_cover needs diameter <= 1");
    if (diam < 1e-12) {
        CoverDisk d{X[0], std::sqrt(3.0) / 4.0};
        return {d, d, d};
    }

    auto support = [&](double ang) {
        Vec2 u{std::cos(ang), std::sin(ang)};
        double mx = dot(u, X[0]);
        for (Point2 p : X) mx = std::max(mx, dot(u, p));
        return mx;
    };
    // Balance the two strip triples: a root of s(theta) - s(theta + 60deg)
    // (s has period 120deg, so the difference flips sign across 60deg).
    auto s3 = [&](double th) {
        return support(th) + support(th + 2 * M_PI / 3) + support(th + 4 * M_PI / 3);
    };
    auto balance = [&](double th) { return s3(th) - s3(th + M_PI / 3); };
    double lo = 0.0, hi = M_PI / 3;
    double blo = balance(lo);
    double theta = lo;
    if (std::abs(blo) > 1e-12) {
        for (int it = 0; it < 100; ++it) {
            double mid = 0.5 * (lo + hi);
            double bm = balance(mid);
            if (std::abs(bm) <= 1e-12) {
                lo = hi = mid;
                break;
            }
            if ((bm > 0) == (blo > 0)) {
                lo = mid;
                blo = bm;
            } else {
                hi = mid;
            }
        }
        theta = 0.5 * (lo + hi);
    }

    // Width-1 strips in directions theta + j*60deg containing X. Tolerance
    // noise can push a width a hair over 1; widen that strip accordingly.
    std::array<double, 3> w{}, hmax{}, hmin{};
    for (int j = 0; j < 3; ++j) {
        double ang = theta + j * M_PI / 3;
        hmax[j] = support(ang);
        hmin[j] = -support(ang + M_PI);
        w[j] = std::max(1.0, hmax[j] - hmin[j]);
    }
    // Upper supports c_j in [hmax_j, hmin_j + w_j] with the concurrency
    // condition c0 + c2 - c1 = (w0 + w2 - w1)/2 (the strip midlines meet).
    std::array<double, 3> c{hmax[0], hmax[1], hmax[2]};
    double target = 0.5 * (w[0] + w[2] - w[1]);
    double dev = target - (c[0] + c[2] - c[1]);
    if (dev > 0) {
        double step = std::min(dev, hmin[0] + w[0] - hmax[0]);
        c[0] += step;
        dev -= step;
        step = std::min(dev, hmin[2] + w[2] - hmax[2]);
        c[2] += step;
        dev -= step;
    } else {
        double step = std::min(-dev, hmin[1] + w[1] - hmax[1]);
        c[1] += step;
        dev += step;
    }
    if (std::abs(dev) > 1e-9)
        throw TheoremViolationError("hexagon strip positioning failed");

    std::array<Vec2, 6> nrm;
    std::array<double, 6> off;
    for (int j = 0; j < 3; ++j) {
        double ang = theta + j * M_PI / 3;
        nrm[j] = {std::cos(ang), std::sin(ang)};
        off[j] = c[j];
        nrm[j + 3] = {-nrm[j].x, -nrm[j].y};
        off[j + 3] = w[j] - c[j];
    }
    std::array<Point2, 6> hex;
    for (int i = 0; i < 6; ++i) {
        int a = i, b = (i + 1) % 6;
        double d = cross(nrm[a], nrm[b]);
        hex[i] = {(off[a] * nrm[b].y - off[b] * nrm[a].y) / d,
                  (nrm[a].x * off[b] - nrm[b].x * off[a]) / d};
    }
    for (Point2 p : X)
        for (int i = 0; i < 6; ++i)
            if (dot(nrm[i], p) > off[i] + 1e-7)
                throw TheoremViolationError("width-1 hexagon misses an input point");

    // Midpoint of the edge lying on line i (between hex[i-1] and hex[i]).
    auto edge_mid = [&](int i) { return 0.5 * (hex[(i + 5) % 6] + hex[i]); };
    Point2 center = [&] {
        double c0 = c[0] - w[0] / 2, c1 = c[1] - w[1] / 2;
        double d = cross(nrm[0], nrm[1]);
        return Point2{(c0 * nrm[1].y - c1 * nrm[0].y) / d,
                      (nrm[0].x * c1 - nrm[1].x * c0) / d};
    }();
    // Pentagons walk counterclockwise from the midpoint of side 2k to the
    // midpoint of side 2k+2, then back through the center.
    std::array<CoverDisk, 3> disks;
    for (int k = 0; k < 3; ++k) {
        int i = 2 * k;
        std::vector<Point2> pent{edge_mid(i), hex[i], hex[(i + 1) % 6],
                                 edge_mid((i + 2) % 6), center};
        Circle circ = miniball(pent);
        if (2 * circ.radius > std::sqrt(3.0) / 2 + 1e-6)
            throw TheoremViolationError("pentagon circumdisk exceeds sqrt(3)/2");
        disks[k] = {circ.center, circ.radius};
    }
    for (Point2 p : X) {
        bool ok = false;
        for (const CoverDisk& d : disks)
            if (detail::in_disk(d, p, kCertSlack)) ok = true;
        if (!ok) throw TheoremViolationError("Borsuk cover misses an input point");
    }
    return disks;
}

enum class DiskCase { Lens1a, Strip1b, Borsuk2 };

struct DiskPierceResult {
    CoverCertificate cover_cert;
    PiercingCertificate pierce_cert;  // for disk instances (empty otherwise)
    DiskCase dispatch = DiskCase::Borsuk2;
    size_t m = 0;        // excluded set
    double diameter = 0; // diameter of the excluded set (the case variable d)
    std::array<CoverDisk, 3> disks;  // in input coordinates
    Point2 diam_a, diam_b;           // diameter endpoints of the excluded set
    // Labeled construction points in input coordinates, for figures.
    std::vector<std::pair<std::string, Point2>> landmarks;
};

// Cover construction for raw point sets with cross distances <= 1.
inline DiskPierceResult disk_pierce_points(const std::vector<std::vector<Point2>>& sets) {
    if (sets.size() < 2) throw InputError("disk_pierce needs k >= 2 sets");
    for (const auto& s : sets)
        if (s.empty()) throw InputError("point sets must be non-empty");
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a + 1; b < sets.size(); ++b)
            for (size_t i = 0; i < sets[a].size(); ++i)
                for (size_t j = 0; j < sets[b].size(); ++j)
                    if (dist(sets[a][i], sets[b][j]) > 1.0 + kCrossTol)
                        throw InvalidInstanceError(
                            "cross pair exceeds distance 1: sets " +
                            std::to_string(a) + "/" + std::to_string(b) +
                            " points " + std::to_string(i) + "/" +
                            std::to_string(j));

    size_t m = 0;
    double best_diam = -1;
    Point2 dx{}, dy{};
    for (size_t s = 0; s < sets.size(); ++s) {
        double diam = 0;
        Point2 a = sets[s][0], b = sets[s][0];
        for (size_t i = 0; i < sets[s].size(); ++i)
            for (size_t j = i + 1; j < sets[s].size(); ++j)
                if (dist(sets[s][i], sets[s][j]) > diam) {
                    diam = dist(sets[s][i], sets[s][j]);
                    a = sets[s][i];
                    b = sets[s][j];
                }
        if (diam > best_diam + 1e-15) {
            best_diam = diam;
            m = s;
            dx = a;
            dy = b;
        }
    }
    double r = std::max(best_diam, 0.0);

    DiskPierceResult res;
    res.m = m;
    res.diameter = r;

    // Normalize: diameter endpoints on the x-axis, centered at the origin.
    Point2 centerpt = 0.5 * (dx + dy);
    Vec2 axis = r > 1e-12 ? normalized(dy - dx) : Vec2{1, 0};
    auto fwd = [&](Point2 p) {
        Vec2 rel = p - centerpt;
        return Point2{dot(axis, rel), cross(axis, rel)};
    };
    auto back = [&](Point2 p) {
        return centerpt +
               Point2{axis.x * p.x - axis.y * p.y, axis.y * p.x + axis.x * p.y};
    };

    std::vector<Point2> others;
    for (size_t s = 0; s < sets.size(); ++s) {
        if (s == m) continue;
        for (Point2 p : sets[s]) others.push_back(fwd(p));
    }

    const double r0 = 2.0 / std::sqrt(3.0);
    std::array<CoverDisk, 3> disks;
    if (r >= r0) {
        res.dispatch = DiskCase::Lens1a;
        LensCover lc = lens_cover_three(r);
        disks = lc.disks;
        res.landmarks = {{"a", back(lc.a)}, {"b", back(lc.b)}, {"c", back(lc.c)},
                         {"e", back(lc.e)}};
    } else if (r > 1.0) {
        res.dispatch = DiskCase::Strip1b;
        static const StripFrame frame = make_strip_frame();
        disks = strip_cover_three(others, frame);
        res.landmarks = {{"p", back(frame.p)},   {"q", back(frame.q)},
                         {"s", back(frame.s)},   {"o1", back(frame.o1)},
                         {"q'", back(frame.qp)}, {"s'", back(frame.sp)}};
    } else {
        res.dispatch = DiskCase::Borsuk2;
        std::vector<Point2> all;
        for (const auto& s : sets)
            for (Point2 p : s) all.push_back(fwd(p));
        disks = borsuk_three_cover(all);
    }

    res.diam_a = dx;
    res.diam_b = dy;
    for (int i = 0; i < 3; ++i) res.disks[i] = {back(disks[i].center), disks[i].radius};

    res.cover_cert.method = "disk";
    res.cover_cert.excluded_index = static_cast<int>(m);
    for (const CoverDisk& d : res.disks)
        res.cover_cert.covers.push_back(
            PlacedBody{ConvexBody::disk(d.radius, d.center), {0, 0}});
    for (size_t s = 0; s < sets.size(); ++s) {
        if (s == m) continue;
        for (size_t i = 0; i < sets[s].size(); ++i) {
            int found = -1;
            for (int k = 0; k < 3; ++k)
                if (detail::in_disk(res.disks[k], sets[s][i], kCertSlack)) {
                    found = k;
                    break;
                }
            if (found < 0)
                throw TheoremViolationError("cover misses a point after mapping back");
            res.cover_cert.witnesses[{static_cast<int>(s), static_cast<int>(i)}] = found;
        }
    }
    return res;
}

// Bridge to piercing: families of disks of one radius rho intersect across
// colors iff their centers are within 2*rho; scale centers by 1/(2*rho), run
// the point-set theorem, and the scaled-back cover centers pierce every
// family except m (each lies strictly inside any disk whose center it
// covers, by the diameter margin).
inline DiskPierceResult disk_pierce(const ColoredInstance& inst) {
    inst.validate_shape();
    if (!inst.generator.is_disk())
        throw InputError("disk_pierce needs a disk generator");
    double scale = 2.0 * inst.generator.radius();
    Point2 c0 = inst.generator.center();
    std::vector<std::vector<Point2>> sets;
    for (const Family& f : inst.families) {
        std::vector<Point2> s;
        for (Point2 t : f.translates)
            s.push_back({(t.x + c0.x) / scale, (t.y + c0.y) / scale});
        sets.push_back(std::move(s));
    }
    DiskPierceResult res = disk_pierce_points(sets);
    for (int i = 0; i < 3; ++i) {
        res.disks[i].center = scale * res.disks[i].center;
        res.disks[i].radius *= scale;
    }
    res.diam_a = scale * res.diam_a;
    res.diam_b = scale * res.diam_b;
    for (auto& [name, p] : res.landmarks) p = scale * p;
    res.cover_cert.covers.clear();
    for (const CoverDisk& d : res.disks)
        res.cover_cert.covers.push_back(
            PlacedBody{ConvexBody::disk(d.radius, d.center), {0, 0}});
    res.pierce_cert.method = "disk";
    res.pierce_cert.family_index = static_cast<int>(res.m);
    for (const CoverDisk& d : res.disks) res.pierce_cert.points.push_back(d.center);
    std::vector<Point2> targets = detail::union_translates_except(inst, res.m);
    auto w = assign_witnesses(inst.generator, targets, res.pierce_cert.points,
                              kCertSlack);
    if (!w)
        throw TheoremViolationError("cover centers fail to pierce the kept families");
    res.pierce_cert.witnesses = *w;
    return res;
}

}  // namespace pierce
