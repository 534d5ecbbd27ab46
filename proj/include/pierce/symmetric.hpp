#pragma once

// Two routes to the symmetric piercing result (three families of translates
// of a centrally symmetric body, cross-intersecting => one family pierced
// by 3 points):
//
//  * symmetric_pierce: the constructive route. Pick the cross pair whose
//    intersection has the highest lowest point p; blow both bodies up to
//    radius 2 around their centers, take the lower crossing q of the two
//    boundaries, and pierce with p plus the midpoints of [x1,q] and [x2,q].
//
//  * colorful_jung_pierce: the Jung-ball route. Some family fits in a single
//    ball of the Jung radius; that ball is covered by three unit balls whose
//    centers pierce the family.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/gauge.hpp"
#include "pierce/geometry.hpp"
#include "pierce/instance.hpp"

namespace pierce {

struct BestPair {
    size_t family_i = 0, index_i = 0;
    size_t family_j = 0, index_j = 0;
    Point2 t1, t2;  // the two translate vectors
    Point2 p;       // lowest point of the intersection, maximal over pairs
};

namespace detail {

// Lowest point of the intersection of two unit-ball translates in the gauge.
inline std::optional<Point2> pair_lowest_point(const Gauge& g, Point2 t1, Point2 t2) {
    Region r = intersect_bodies(g.unit_ball, t1, g.unit_ball, t2);
    return r.lowest_point();
}

}  // namespace detail

// Over all cross-color pairs, the pair whose intersection's lowest point is
// maximal in (y, then x) order; ties broken by smallest indices. The
// comparison uses a tolerance band so interpolation noise between pairs
// sharing a flat bottom edge cannot rank them inconsistently. Pairs with
// empty intersection cannot win and are skipped.
inline BestPair best_cross_pair(const CoveringInstance& cov) {
    auto lex_greater_tol = [](Point2 a, Point2 b) {
        if (a.y > b.y + kEpsGeom) return true;
        if (a.y < b.y - kEpsGeom) return false;
        return a.x > b.x + kEpsGeom;
    };
    std::optional<BestPair> best;
    for (size_t fa = 0; fa < cov.point_sets.size(); ++fa) {
        for (size_t fb = fa + 1; fb < cov.point_sets.size(); ++fb) {
            const auto& xa = cov.point_sets[fa].translates;
            const auto& xb = cov.point_sets[fb].translates;
            for (size_t i = 0; i < xa.size(); ++i) {
                for (size_t j = 0; j < xb.size(); ++j) {
                    auto p = detail::pair_lowest_point(cov.gauge, xa[i], xb[j]);
                    if (!p) continue;
                    if (!best || lex_greater_tol(*p, best->p))
                        best = BestPair{fa, i, fb, j, xa[i], xb[j], *p};
                }
            }
        }
    }
    if (!best)
        throw InvalidInstanceError("no intersecting cross pair: hypothesis violated");
    return *best;
}

// The full data of the constructive proof, in piercing-space coordinates.
struct SymmetricConstruction {
    size_t m = 0;        // chosen family index
    Point2 x1, x2;       // centers of the best cross pair
    Point2 p;            // lowest point of K1 cap K2, maximal over pairs
    Point2 q;            // lower crossing of the boundaries of S1, S2
    Point2 y1, y2;       // boundary points diametrically opposite x1, x2 through p
    Point2 r1, r2;       // centers of R1, R2 (midpoints of [x1,q], [x2,q])
    bool degenerate = false;  // x1 == x2, straight-down rule used
};

struct SymmetricResult {
    PiercingCertificate cert;
    SymmetricConstruction cons;
};

namespace detail {

// Crossing points of the boundaries of two translates of the same body.
inline std::vector<Point2> boundary_crossings(const ConvexBody& body, Point2 t1,
                                              Point2 t2) {
    std::vector<Point2> out;
    if (body.is_disk()) {
        if (auto cc = circle_circle(body.center() + t1, body.radius(),
                                    body.center() + t2, body.radius()))
            out.assign(cc->begin(), cc->end());
        return out;
    }
    const auto& v = body.verts();
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        Point2 a0 = v[i] + t1, a1 = v[(i + 1) % n] + t1;
        for (size_t j = 0; j < n; ++j) {
            Point2 b0 = v[j] + t2, b1 = v[(j + 1) % n] + t2;
            Vec2 da = a1 - a0, db = b1 - b0;
            double den = cross(da, db);
            if (std::abs(den) > 1e-12) {
                double s = cross(b0 - a0, db) / den;
                double u = cross(b0 - a0, da) / den;
                if (s >= -1e-9 && s <= 1 + 1e-9 && u >= -1e-9 && u <= 1 + 1e-9)
                    out.push_back(a0 + s * da);
            } else if (std::abs(cross(da, b0 - a0)) <= 1e-9 * std::max(1.0, norm(da))) {
                // Collinear overlap: keep the overlap segment endpoints.
                double len2 = norm2(da);
                if (len2 == 0) continue;
                double u0 = dot(b0 - a0, da) / len2;
                double u1 = dot(b1 - a0, da) / len2;
                double lo = std::max(0.0, std::min(u0, u1));
                double hi = std::min(1.0, std::max(u0, u1));
                if (lo <= hi + 1e-12) {
                    out.push_back(a0 + lo * da);
                    out.push_back(a0 + hi * da);
                }
            }
        }
    }
    return out;
}

}  // namespace detail

// The constructive route. Requires a centrally symmetric generator
// and exactly three colors.
inline SymmetricResult symmetric_pierce(const ColoredInstance& inst,
                                        double slack = kCertSlack) {
    inst.validate_shape();
    if (inst.families.size() != 3)
        throw InputError("symmetric_pierce needs exactly 3 colors");
    if (!is_centrally_symmetric(inst.generator))
        throw NotSymmetricError("generator is not centrally symmetric");

    CoveringInstance cov = to_covering(inst);
    const Gauge& g = cov.gauge;
    Point2 ck = inst.generator.reference_center();

    BestPair bp = best_cross_pair(cov);
    size_t m = 3 - bp.family_i - bp.family_j;

    SymmetricConstruction cons;
    cons.m = m;
    // Work in translate space; shift by the body's center at the end.
    Point2 x1 = bp.t1, x2 = bp.t2;
    Point2 q;
    if (dist(x1, x2) <= 1e-12) {
        cons.degenerate = true;
        // Straight down from x1 to the boundary of x1 + 2K: the radial extent
        // of the unit ball below the origin, doubled.
        double h = 1.0 / gauge_norm(g, {0, -1});
        q = x1 + Point2{0, -2.0 * h};
    } else {
        ConvexBody s = scaled_ball(g, 2.0);
        std::vector<Point2> crossings = detail::boundary_crossings(s, x1, x2);
        if (crossings.empty())
            throw TheoremViolationError("S1 and S2 boundaries do not cross");
        q = lex_min_yx_tol(crossings, kEpsGeom);
    }
    Point2 r1 = 0.5 * (x1 + q);
    Point2 r2 = 0.5 * (x2 + q);

    cons.x1 = x1 + ck;
    cons.x2 = x2 + ck;
    cons.p = bp.p + ck;
    cons.q = q + ck;
    cons.r1 = r1 + ck;
    cons.r2 = r2 + ck;
    cons.y1 = 2.0 * cons.p - cons.x1;
    cons.y2 = 2.0 * cons.p - cons.x2;

    SymmetricResult res;
    res.cons = cons;
    res.cert.method = "symmetric";
    res.cert.family_index = static_cast<int>(m);
    res.cert.points = {cons.p, cons.r1, cons.r2};
    auto w = assign_witnesses(inst.generator, inst.families[m].translates,
                              res.cert.points, slack);
    if (!w)
        throw TheoremViolationError(
            "symmetric construction failed to pierce the chosen family");
    res.cert.witnesses = *w;
    return res;
}

// The per-translate claim behind the construction: every member of the
// chosen family contains p, or its center lies in R1 union R2.
inline bool symmetric_claim_holds(const ColoredInstance& inst,
                                  const SymmetricResult& res,
                                  double slack = kCertSlack) {
    Gauge g = difference_gauge(inst.generator);
    Point2 ck = inst.generator.reference_center();
    for (Point2 t : inst.families[res.cons.m].translates) {
        if (contains(inst.generator, t, res.cons.p, slack)) continue;
        Point2 center = t + ck;
        double d1 = gauge_distance(g, center, res.cons.r1);
        double d2 = gauge_distance(g, center, res.cons.r2);
        if (d1 > 1.0 + slack && d2 > 1.0 + slack) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Jung radius and the Gruenbaum three-ball cover.

struct JungData {
    double j = 1.0;
    Point2 u, v;  // witness triangle {0, u, v} of gauge diameter <= 2
    int starts = 0;
    int refine_steps = 0;
};

namespace detail {

inline double circumradius3(const Gauge& g, Point2 u, Point2 v) {
    std::array<Point2, 3> pts{Point2{0, 0}, u, v};
    return smallest_gauge_ball(g, pts).radius;
}

// Scale (u, v) back into the diameter-2 constraint set.
inline void project_feasible(const Gauge& g, Point2& u, Point2& v) {
    double fu = gauge_norm(g, u);
    if (fu > 2.0) u = (2.0 / fu) * u;
    double fv = gauge_norm(g, v);
    if (fv > 2.0) v = (2.0 / fv) * v;
}

}  // namespace detail

// Jung radius of the gauge: the largest circumradius of a triangle of gauge
// diameter 2, by multi-start coordinate refinement. The returned value is a
// certified lower bound (the witness is feasible and its circumradius exact);
// for every gauge J >= 1, with equality exactly for parallelograms.
inline JungData jung_radius(const Gauge& g) {
    constexpr int kGrid = 24;         // kGrid^2 start direction pairs
    constexpr int kMaxSteps = 10000;  // refinement budget per start
    JungData best;
    best.j = 0.0;
    best.starts = kGrid * kGrid;

    auto dir_on_ball = [&](double angle) {
        Vec2 d{std::cos(angle), std::sin(angle)};
        return (2.0 / gauge_norm(g, d)) * d;
    };

    for (int a = 0; a < kGrid; ++a) {
        for (int b = 0; b < kGrid; ++b) {
            if (a == b) continue;
            Point2 u = dir_on_ball(2.0 * M_PI * a / kGrid);
            Point2 v = dir_on_ball(2.0 * M_PI * b / kGrid);
            if (gauge_norm(g, u - v) > 2.0) {
                // Shrink toward each other until the third side fits.
                for (int it = 0; it < 60 && gauge_norm(g, u - v) > 2.0; ++it) {
                    u = 0.97 * u;
                    v = 0.97 * v;
                }
                if (gauge_norm(g, u - v) > 2.0) continue;
            }
            double val = detail::circumradius3(g, u, v);
            int steps = 0;
            double step = 0.25;
            while (step > 1e-6 && steps < kMaxSteps) {
                bool improved = false;
                for (int coord = 0; coord < 4 && steps < kMaxSteps; ++coord) {
                    for (double sgn : {1.0, -1.0}) {
                        ++steps;
                        Point2 nu = u, nv = v;
                        double* target =
                            coord == 0 ? &nu.x : coord == 1 ? &nu.y
                                              : coord == 2 ? &nv.x
                                                           : &nv.y;
                        *target += sgn * step;
                        detail::project_feasible(g, nu, nv);
                        if (gauge_norm(g, nu - nv) > 2.0) continue;
                        double nval = detail::circumradius3(g, nu, nv);
                        if (nval > val + 1e-12) {
                            u = nu;
                            v = nv;
                            val = nval;
                            improved = true;
                        }
                    }
                }
                if (!improved) step *= 0.5;
            }
            if (val > best.j) {
                best.j = val;
                best.u = u;
                best.v = v;
                best.refine_steps = steps;
            }
        }
    }
    // Clamp the witness inside the diameter constraint if refinement left it
    // a hair outside.
    double diam = std::max({gauge_norm(g, best.u), gauge_norm(g, best.v),
                            gauge_norm(g, best.u - best.v)});
    if (diam > 2.0) {
        best.u = (2.0 / diam) * best.u;
        best.v = (2.0 / diam) * best.v;
        best.j = detail::circumradius3(g, best.u, best.v);
    }
    return best;
}

namespace detail {

// Arc-length parameterization of the boundary of r * unit ball.
struct BallBoundary {
    bool is_disk = false;
    double radius = 0;
    std::vector<Point2> verts;   // polygon case
    std::vector<double> cumlen;  // cumulative edge lengths, cumlen[0] = 0
    double total = 0;

    static BallBoundary make(const Gauge& g, double r) {
        BallBoundary bb;
        if (g.unit_ball.is_disk()) {
            bb.is_disk = true;
            bb.radius = r * g.unit_ball.radius();
            bb.total = 2 * M_PI * bb.radius;
            return bb;
        }
        for (Point2 v : g.unit_ball.verts()) bb.verts.push_back(r * v);
        size_t n = bb.verts.size();
        bb.cumlen.resize(n + 1, 0.0);
        for (size_t i = 0; i < n; ++i)
            bb.cumlen[i + 1] =
                bb.cumlen[i] + dist(bb.verts[i], bb.verts[(i + 1) % n]);
        bb.total = bb.cumlen[n];
        return bb;
    }

    // Point at normalized arc parameter s in [0, 1).
    Point2 at(double s) const {
        s -= std::floor(s);
        if (is_disk) {
            double a = 2 * M_PI * s;
            return {radius * std::cos(a), radius * std::sin(a)};
        }
        double target = s * total;
        size_t n = verts.size();
        for (size_t i = 0; i < n; ++i) {
            if (target <= cumlen[i + 1] || i + 1 == n) {
                double seg = cumlen[i + 1] - cumlen[i];
                double t = seg > 0 ? (target - cumlen[i]) / seg : 0.0;
                return verts[i] + t * (verts[(i + 1) % n] - verts[i]);
            }
        }
        return verts[0];
    }
};

// The set { s : gauge distance from base to gamma(s) = 2 } reached by
// scanning from s0 in the given direction. Polygonal gauges can hold the
// distance at exactly 2 along a whole arc, so both the entry and the exit of
// that plateau are returned (they coincide for strictly convex gauges).
struct PlateauHit {
    double enter = 0;
    double exit = 0;
};

inline std::optional<PlateauHit> distance2_plateau(const Gauge& g,
                                                   const BallBoundary& bb,
                                                   Point2 base, double s0,
                                                   double dir) {
    constexpr int kScan = 720;
    const double kUp = 2.0 + 1e-12;
    double prev = s0;
    int enter_k = -1;
    for (int k = 1; k <= kScan; ++k) {
        double s = s0 + dir * static_cast<double>(k) / kScan;
        if (gauge_distance(g, base, bb.at(s)) >= 2.0) {
            enter_k = k;
            break;
        }
        prev = s;
    }
    if (enter_k < 0) return std::nullopt;
    PlateauHit hit;
    {
        double lo = prev, hi = s0 + dir * static_cast<double>(enter_k) / kScan;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            if (gauge_distance(g, base, bb.at(mid)) >= 2.0)
                hi = mid;
            else
                lo = mid;
        }
        hit.enter = lo;  // just below distance 2
    }
    // Walk until the distance leaves the plateau upward, then bisect the exit.
    double in_pl = hit.enter;
    double out_pl = in_pl;
    bool found_exit = false;
    for (int k = enter_k; k <= kScan; ++k) {
        double s = s0 + dir * static_cast<double>(k) / kScan;
        if (gauge_distance(g, base, bb.at(s)) > kUp) {
            out_pl = s;
            found_exit = true;
            break;
        }
        in_pl = s;
    }
    if (!found_exit) {
        hit.exit = in_pl;
        return hit;
    }
    double lo = in_pl, hi = out_pl;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (gauge_distance(g, base, bb.at(mid)) > kUp)
            hi = mid;
        else
            lo = mid;
    }
    hit.exit = lo;
    return hit;
}

}  // namespace detail

// Three unit-ball centers covering the ball of radius j at the origin
// (Gruenbaum's construction: three boundary points with two pairs at gauge
// distance 2, cover with the balls on the pair midpoints). The cover is
// verified on a dense boundary sampling plus the ball's vertices before being
// returned; an unverifiable search surfaces CoverNotVerifiedError.
inline std::vector<Point2> jung_cover_three(const Gauge& g, double j,
                                            double slack = kCertSlack) {
    if (j < 1.0 - 1e-6) throw InputError("jung_cover_three needs j >= 1");
    if (j <= 1.0 + 1e-9) return {Point2{0, 0}, Point2{0, 0}, Point2{0, 0}};

    detail::BallBoundary bb = detail::BallBoundary::make(g, j);
    std::vector<Point2> samples;
    constexpr int kSamples = 720;
    for (int k = 0; k < kSamples; ++k)
        samples.push_back(bb.at(static_cast<double>(k) / kSamples));
    if (!bb.is_disk)
        for (Point2 v : bb.verts) samples.push_back(v);
    samples.push_back({0, 0});

    auto verified = [&](const std::vector<Point2>& centers) {
        for (Point2 p : samples) {
            bool covered = false;
            for (Point2 c : centers)
                if (gauge_norm(g, p - c) <= 1.0 + slack) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return true;
    };

    // Start positions: a coarse grid enriched with the exact vertex and
    // edge-midpoint parameters (the extremal gauges have zero slack and the
    // working triple anchors exactly there).
    std::vector<double> starts;
    constexpr int kStarts = 180;
    for (int k = 0; k < kStarts; ++k)
        starts.push_back(static_cast<double>(k) / kStarts);
    if (!bb.is_disk) {
        size_t nv = bb.verts.size();
        for (size_t i = 0; i < nv; ++i) {
            starts.push_back(bb.cumlen[i] / bb.total);
            starts.push_back((bb.cumlen[i] + 0.5 * (bb.cumlen[i + 1] - bb.cumlen[i])) /
                             bb.total);
        }
    }
    for (double s1 : starts) {
        Point2 x1 = bb.at(s1);
        auto fwd = detail::distance2_plateau(g, bb, x1, s1, +1.0);
        auto bwd = detail::distance2_plateau(g, bb, x1, s1, -1.0);
        if (!fwd || !bwd) continue;
        for (double s2 : {fwd->enter, fwd->exit}) {
            for (double s3 : {bwd->enter, bwd->exit}) {
                Point2 x2 = bb.at(s2);
                Point2 x3 = bb.at(s3);
                if (gauge_norm(g, x2 - x3) > 2.0 + kEpsGeom) continue;
                std::vector<Point2> centers{0.5 * (x1 + x2), 0.5 * (x1 + x3),
                                            0.5 * (x2 + x3)};
                if (verified(centers)) return centers;
            }
        }
    }
    throw CoverNotVerifiedError("no verified Gruenbaum cover found for j = " +
                                std::to_string(j));
}

struct JungPierceResult {
    PiercingCertificate cert;
    JungData jung;
    Point2 ball_center;  // piercing-space center of the covering Jung ball
};

// The Jung-ball route: colorful Helly on Jung balls. Finds the family
// whose points all fit in one Jung ball, then covers that ball by three unit
// balls; the three centers pierce the family. The Jung data and the ball
// cover depend only on the gauge and may be precomputed and reused across
// instances of the same generator.
inline JungPierceResult colorful_jung_pierce(
    const ColoredInstance& inst, const JungData* precomputed = nullptr,
    double slack = kCertSlack, const std::vector<Point2>* precomputed_cover = nullptr) {
    inst.validate_shape();
    if (inst.families.size() != 3)
        throw InputError("colorful_jung_pierce needs exactly 3 colors");
    if (!is_centrally_symmetric(inst.generator))
        throw NotSymmetricError("generator is not centrally symmetric");

    CoveringInstance cov = to_covering(inst);
    const Gauge& g = cov.gauge;
    Point2 ck = inst.generator.reference_center();
    JungData jd = precomputed ? *precomputed : jung_radius(g);
    double j = std::max(jd.j, 1.0);

    std::vector<Point2> cover_centers =
        precomputed_cover ? *precomputed_cover : jung_cover_three(g, j, slack);

    for (size_t m = 0; m < 3; ++m) {
        const auto& xs = cov.point_sets[m].translates;
        // Center x with all of X_m within gauge distance j: intersection of
        // the j-balls around the points.
        std::optional<Point2> x;
        if (g.unit_ball.is_disk()) {
            Circle c = miniball(xs);
            if (c.radius <= j * g.unit_ball.radius() + kEpsGeom) x = c.center;
        } else {
            ConvexBody jball = scaled_ball(g, j);
            std::vector<Point2> region;
            for (Point2 v : jball.verts()) region.push_back(v + xs[0]);
            const auto& bv = jball.verts();
            size_t nv = bv.size();
            for (size_t i = 1; i < xs.size() && !region.empty(); ++i) {
                for (size_t e = 0; e < nv && !region.empty(); ++e) {
                    Point2 p0 = bv[e] + xs[i];
                    Point2 p1 = bv[(e + 1) % nv] + xs[i];
                    Vec2 n{(p1 - p0).y, -(p1 - p0).x};
                    region = clip_halfplane(region, n, dot(n, p0), kEpsGeom);
                }
            }
            if (!region.empty()) {
                Point2 c{0, 0};
                for (Point2 v : region) c = c + v;
                x = (1.0 / static_cast<double>(region.size())) * c;
            }
        }
        if (!x) continue;

        std::vector<Point2> points;
        for (Point2 c : cover_centers) points.push_back(*x + c + ck);
        auto w = assign_witnesses(inst.generator, xs, points, slack);
        if (!w) continue;
        JungPierceResult res;
        res.cert.method = "jung";
        res.cert.family_index = static_cast<int>(m);
        res.cert.points = std::move(points);
        res.cert.witnesses = *w;
        res.jung = jd;
        res.ball_center = *x + ck;
        return res;
    }
    throw NoFamilyCoveredError(
        "no family fits in a Jung ball: bug or invalid input");
}

}  // namespace pierce
