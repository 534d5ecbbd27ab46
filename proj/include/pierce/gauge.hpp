#pragma once

// Minkowski gauges: a metric whose unit ball is a centrally symmetric convex
// body centered at the origin. Includes the smallest enclosing gauge ball
// (Welzl for disks, a tiny dense LP for polygonal balls).

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/geometry.hpp"

namespace pierce {

struct Gauge {
    ConvexBody unit_ball;

    static Gauge from_unit_ball(ConvexBody b, double tau = kTauSym) {
        if (b.is_point()) throw InputError("gauge unit ball must have interior");
        if (!is_centrally_symmetric(b, tau))
            throw NotSymmetricError("gauge unit ball is not centrally symmetric");
        Point2 c = b.reference_center();
        if (norm(c) > tau * 10 + kEpsGeom)
            throw InputError("gauge unit ball must be centered at the origin");
        if (b.is_polygon()) {
            // Origin strictly interior.
            if (b.functional({0, 0}) >= 1.0 - kEpsGeom)
                throw InputError("origin not strictly interior to unit ball");
        }
        return Gauge{std::move(b)};
    }
};

// Gauge of the difference body: the unit ball is (K + (-K)) / 2, symmetric by
// construction. Two translates K+t1, K+t2 intersect iff this gauge distance
// of (t1, t2) is at most 2.
inline Gauge difference_gauge(const ConvexBody& k) {
    if (k.is_disk()) return Gauge{ConvexBody::disk(k.radius(), {0, 0})};
    if (k.is_point()) throw InputError("difference_gauge of a degenerate point body");
    ConvexBody d = minkowski_sum(k, reflect(k));
    std::vector<Point2> half;
    half.reserve(d.verts().size());
    for (Point2 v : d.verts()) half.push_back(0.5 * v);
    return Gauge{ConvexBody::polygon(std::move(half))};
}

inline double gauge_norm(const Gauge& g, Vec2 v) {
    if (v.x == 0.0 && v.y == 0.0) return 0.0;
    if (g.unit_ball.is_disk()) return norm(v) / g.unit_ball.radius();
    return g.unit_ball.functional(Point2{0, 0} + v);
}

inline double gauge_distance(const Gauge& g, Point2 p, Point2 q) {
    return gauge_norm(g, q - p);
}

// r * unit ball, still centered at the origin.
inline ConvexBody scaled_ball(const Gauge& g, double r) {
    if (!(r > 0)) throw InputError("ball radius must be positive");
    if (g.unit_ball.is_disk()) return ConvexBody::disk(r * g.unit_ball.radius());
    std::vector<Point2> v;
    v.reserve(g.unit_ball.verts().size());
    for (Point2 p : g.unit_ball.verts()) v.push_back(r * p);
    return ConvexBody::polygon(std::move(v));
}

struct Circle {
    Point2 center;
    double radius = 0;
};

namespace detail {

inline uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

template <class T>
inline void deterministic_shuffle(std::vector<T>& v, uint64_t seed) {
    uint64_t s = seed ^ (0xabcdef12ULL + v.size());
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(splitmix64(s) % i);
        std::swap(v[i - 1], v[j]);
    }
}

inline Circle circum3(Point2 a, Point2 b, Point2 c) {
    double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-14) {
        // Collinear: diametral circle of the farthest pair.
        double ab = dist(a, b), ac = dist(a, c), bc = dist(b, c);
        if (ab >= ac && ab >= bc) return {0.5 * (a + b), 0.5 * ab};
        if (ac >= bc) return {0.5 * (a + c), 0.5 * ac};
        return {0.5 * (b + c), 0.5 * bc};
    }
    double ux = ((norm2(a)) * (b.y - c.y) + (norm2(b)) * (c.y - a.y) +
                 (norm2(c)) * (a.y - b.y)) /
                d;
    double uy = ((norm2(a)) * (c.x - b.x) + (norm2(b)) * (a.x - c.x) +
                 (norm2(c)) * (b.x - a.x)) /
                d;
    Point2 o{ux, uy};
    return {o, std::max({dist(o, a), dist(o, b), dist(o, c)})};
}

}  // namespace detail

// Smallest enclosing Euclidean circle (Welzl, move-to-front, deterministic).
inline Circle miniball(std::span<const Point2> points) {
    if (points.empty()) throw InputError("miniball of empty set");
    std::vector<Point2> p(points.begin(), points.end());
    detail::deterministic_shuffle(p, 0x5eedULL + p.size());
    auto inside = [](const Circle& c, Point2 q) {
        return dist(c.center, q) <= c.radius + 1e-12;
    };
    Circle c{p[0], 0.0};
    for (size_t i = 1; i < p.size(); ++i) {
        if (inside(c, p[i])) continue;
        c = {p[i], 0.0};
        for (size_t j = 0; j < i; ++j) {
            if (inside(c, p[j])) continue;
            c = {0.5 * (p[i] + p[j]), 0.5 * dist(p[i], p[j])};
            for (size_t k = 0; k < j; ++k) {
                if (inside(c, p[k])) continue;
                c = detail::circum3(p[i], p[j], p[k]);
            }
        }
    }
    return c;
}

namespace detail {

// Seidel's randomized LP in up to 3 variables: minimize obj . z subject to
// a . z <= b for each constraint, with an implicit box |z_i| <= bound.
// Feasibility is assumed (our instances always are); throws otherwise.

struct Con {
    std::array<double, 3> a;
    double b;
};

inline constexpr double kLpEps = 1e-11;

inline std::array<double, 1> lp1(const std::vector<std::array<double, 2>>& cons,
                                 double obj, double bound) {
    double lo = -bound, hi = bound;
    for (auto& c : cons) {
        if (std::abs(c[0]) < kLpEps) {
            if (c[1] < -kLpEps) throw Error("lp1 infeasible");
            continue;
        }
        double v = c[1] / c[0];
        if (c[0] > 0)
            hi = std::min(hi, v);
        else
            lo = std::max(lo, v);
    }
    if (lo > hi + 1e-9) throw Error("lp1 infeasible");
    return {obj >= 0 ? lo : hi};
}

inline std::array<double, 2> lp2(std::vector<std::array<double, 3>> cons,
                                 std::array<double, 2> obj, double bound,
                                 uint64_t seed) {
    deterministic_shuffle(cons, seed);
    std::array<double, 2> z{obj[0] >= 0 ? -bound : bound,
                            obj[1] >= 0 ? -bound : bound};
    for (size_t i = 0; i < cons.size(); ++i) {
        const auto& c = cons[i];
        if (c[0] * z[0] + c[1] * z[1] <= c[2] + kLpEps) continue;
        // Solve on the line c.a . z = c.b, eliminating the larger coefficient.
        int k = std::abs(c[0]) >= std::abs(c[1]) ? 0 : 1;
        int o = 1 - k;
        if (std::abs(c[k]) < kLpEps) throw Error("lp2 infeasible");
        // z[k] = (c[2] - c[o]*z[o]) / c[k]
        std::vector<std::array<double, 2>> sub;
        sub.reserve(i + 2);
        for (size_t j = 0; j < i; ++j) {
            const auto& d = cons[j];
            // d[k]*zk + d[o]*zo <= d[2]
            double coef = d[o] - d[k] * c[o] / c[k];
            double rhs = d[2] - d[k] * c[2] / c[k];
            sub.push_back({coef, rhs});
        }
        // Box on eliminated variable: |z[k]| <= bound.
        sub.push_back({-c[o] / c[k], bound - c[2] / c[k]});
        sub.push_back({c[o] / c[k], bound + c[2] / c[k]});
        double sobj = obj[o] - obj[k] * c[o] / c[k];
        auto zo = lp1(sub, sobj, bound);
        z[o] = zo[0];
        z[k] = (c[2] - c[o] * z[o]) / c[k];
    }
    return z;
}

inline std::array<double, 3> lp3(std::vector<Con> cons, std::array<double, 3> obj,
                                 double bound, uint64_t seed) {
    deterministic_shuffle(cons, seed);
    std::array<double, 3> z{obj[0] >= 0 ? -bound : bound, obj[1] >= 0 ? -bound : bound,
                            obj[2] >= 0 ? -bound : bound};
    for (size_t i = 0; i < cons.size(); ++i) {
        const Con& c = cons[i];
        if (c.a[0] * z[0] + c.a[1] * z[1] + c.a[2] * z[2] <= c.b + kLpEps) continue;
        int k = 0;
        for (int t = 1; t < 3; ++t)
            if (std::abs(c.a[t]) > std::abs(c.a[k])) k = t;
        if (std::abs(c.a[k]) < kLpEps) throw Error("lp3 infeasible");
        int o0 = (k + 1) % 3, o1 = (k + 2) % 3;
        std::vector<std::array<double, 3>> sub;
        sub.reserve(i + 2);
        auto reduce = [&](const std::array<double, 3>& a, double b) {
            double f = a[k] / c.a[k];
            sub.push_back({a[o0] - f * c.a[o0], a[o1] - f * c.a[o1], b - f * c.b});
        };
        for (size_t j = 0; j < i; ++j) reduce(cons[j].a, cons[j].b);
        std::array<double, 3> boxp{0, 0, 0}, boxm{0, 0, 0};
        boxp[k] = 1;
        boxm[k] = -1;
        reduce(boxp, bound);
        reduce(boxm, bound);
        double fk = obj[k] / c.a[k];
        std::array<double, 2> sobj{obj[o0] - fk * c.a[o0], obj[o1] - fk * c.a[o1]};
        auto zz = lp2(std::move(sub), sobj, bound, seed + i + 1);
        z[o0] = zz[0];
        z[o1] = zz[1];
        z[k] = (c.b - c.a[o0] * z[o0] - c.a[o1] * z[o1]) / c.a[k];
    }
    return z;
}

}  // namespace detail

struct GaugeBall {
    Point2 center;
    double radius = 0;
};

// Smallest ball of the gauge containing all points: min r s.t. points are in
// center + r * unit_ball.
inline GaugeBall smallest_gauge_ball(const Gauge& g, std::span<const Point2> points) {
    if (points.empty()) throw InputError("smallest_gauge_ball of empty set");
    if (g.unit_ball.is_disk()) {
        Circle c = miniball(points);
        return {c.center, c.radius / g.unit_ball.radius()};
    }
    // minimize r subject to <n_e, p - x> <= r * h_e for every point p, edge e.
    const std::vector<Point2>& v = g.unit_ball.verts();
    size_t n = v.size();
    std::vector<detail::Con> cons;
    cons.reserve(points.size() * n + 1);
    for (size_t e = 0; e < n; ++e) {
        Vec2 nrm = normalized(Vec2{(v[(e + 1) % n] - v[e]).y, -(v[(e + 1) % n] - v[e]).x});
        double h = dot(nrm, v[e]);
        for (Point2 p : points)
            cons.push_back({{-nrm.x / h, -nrm.y / h, -1.0}, -dot(nrm, p) / h});
    }
    cons.push_back({{0, 0, -1}, 0});  // r >= 0
    auto z = detail::lp3(std::move(cons), {0, 0, 1}, 1e7,
                         0x9e37ULL + points.size() * 131 + n);
    return {{z[0], z[1]}, z[2]};
}

}  // namespace pierce
