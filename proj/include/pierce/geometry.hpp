#pragma once

// Planar primitives: points, convex bodies (polygons and exact disks),
// Minkowski sums, supports, widths and intersection regions. Everything is a
// value type; operations are pure.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pierce/errors.hpp"

namespace pierce {

// Orientation / containment predicate tolerance.
inline constexpr double kEpsGeom = 1e-9;
// Vertex dedup tolerance used by polygon normalization.
inline constexpr double kEpsDedup = 1e-12;
// Slack used when checking certificates (looser than kEpsGeom on purpose:
// certificates must survive representation noise).
inline constexpr double kCertSlack = 1e-7;
// How far a body may deviate from its point reflection and still count as
// centrally symmetric.
inline constexpr double kTauSym = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

using Vec2 = Point2;

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Counterclockwise quarter turn.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    if (n == 0.0) throw InputError("cannot normalize zero vector");
    return {a.x / n, a.y / n};
}

inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// (y, then x) order; "lowest point" throughout means the minimum in this order.
inline bool lex_less_yx(Point2 a, Point2 b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
}

// Lexicographic (y, then x) minimum with a tolerance band on y, so that
// roundoff noise along a flat horizontal edge cannot flip the tie toward the
// wrong end.
template <class Container>
inline Point2 lex_min_yx_tol(const Container& pts, double eps) {
    double ymin = pts[0].y;
    for (const Point2& p : pts) ymin = std::min(ymin, p.y);
    bool have = false;
    Point2 best{};
    for (const Point2& p : pts) {
        if (p.y > ymin + eps) continue;
        if (!have || p.x < best.x || (p.x == best.x && p.y < best.y)) {
            best = p;
            have = true;
        }
    }
    return best;
}

// (x, then y) order, used for canonical vertex rotation.
inline bool lex_less_xy(Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Twice the signed area of triangle abc; > 0 when counterclockwise.
inline double orient(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

inline double segment_point_distance(Point2 a, Point2 b, Point2 p) {
    Vec2 ab = b - a;
    double len2 = norm2(ab);
    if (len2 == 0.0) return dist(a, p);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(a + t * ab, p);
}

// Strict convex hull (collinear points dropped), CCW, starting at the
// lexicographic (x, y) minimum.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less_xy);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) {
                              return std::abs(a.x - b.x) <= kEpsDedup &&
                                     std::abs(a.y - b.y) <= kEpsDedup;
                          }),
              pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Point2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= kEpsDedup) --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= kEpsDedup) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// A convex generator body: a strictly convex CCW polygon, a degenerate
// single-point polygon (legal only as the Minkowski identity), or an exact
// disk. Disks are never polygonized.
class ConvexBody {
  public:
    enum class Kind { Polygon, Disk };

    static ConvexBody polygon(std::vector<Point2> pts) {
        for (Point2 p : pts)
            if (!finite(p)) throw InputError("polygon vertex not finite");
        std::vector<Point2> hull = convex_hull(std::move(pts));
        if (hull.size() < 3)
            throw InputError("polygon must have positive area (got " +
                             std::to_string(hull.size()) + " hull vertices)");
        ConvexBody b;
        b.kind_ = Kind::Polygon;
        b.verts_ = std::move(hull);
        b.rotate_to_canonical();
        return b;
    }

    // Single-vertex polygon; identity element for minkowski_sum.
    static ConvexBody point(Point2 p) {
        if (!finite(p)) throw InputError("point not finite");
        ConvexBody b;
        b.kind_ = Kind::Polygon;
        b.verts_ = {p};
        return b;
    }

    static ConvexBody disk(double radius, Point2 center = {}) {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw InputError("disk radius must be strictly positive");
        if (!finite(center)) throw InputError("disk center not finite");
        ConvexBody b;
        b.kind_ = Kind::Disk;
        b.radius_ = radius;
        b.center_ = center;
        return b;
    }

    Kind kind() const { return kind_; }
    bool is_polygon() const { return kind_ == Kind::Polygon; }
    bool is_disk() const { return kind_ == Kind::Disk; }
    bool is_point() const { return kind_ == Kind::Polygon && verts_.size() == 1; }

    const std::vector<Point2>& verts() const { return verts_; }
    double radius() const { return radius_; }
    Point2 center() const { return center_; }

    // Point used as the gauge origin of the body: the vertex mean for a
    // polygon (equals the symmetry center when one exists), the center for a
    // disk.
    Point2 reference_center() const {
        if (is_disk()) return center_;
        Point2 c{0, 0};
        for (Point2 v : verts_) c = c + v;
        return (1.0 / static_cast<double>(verts_.size())) * c;
    }

    double area() const {
        if (is_disk()) return M_PI * radius_ * radius_;
        double a = 0;
        for (size_t i = 0; i < verts_.size(); ++i) {
            Point2 u = verts_[i];
            Point2 v = verts_[(i + 1) % verts_.size()];
            a += cross(u, v);
        }
        return 0.5 * a;
    }

    // Minkowski functional of p relative to the body translated by t,
    // measured from the reference center: <= 1 inside, 1 on the boundary.
    double functional(Point2 p, Point2 t = {}) const {
        if (is_disk()) return dist(p, center_ + t) / radius_;
        if (is_point()) {
            return dist(p, verts_[0] + t) <= kEpsDedup
                       ? 0.0
                       : std::numeric_limits<double>::infinity();
        }
        Point2 c = reference_center();
        Vec2 rel = p - t - c;
        double best = 0.0;
        size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) {
            Point2 a = verts_[i];
            Point2 b = verts_[(i + 1) % n];
            Vec2 nrm = normalized(Vec2{(b - a).y, -(b - a).x});  // outward for CCW
            double h = dot(nrm, a - c);
            best = std::max(best, dot(nrm, rel) / h);
        }
        return best;
    }

  private:
    void rotate_to_canonical() {
        auto it = std::min_element(verts_.begin(), verts_.end(), lex_less_xy);
        std::rotate(verts_.begin(), it, verts_.end());
    }

    Kind kind_ = Kind::Polygon;
    std::vector<Point2> verts_;
    double radius_ = 0.0;
    Point2 center_;
};

// -K: reflection through the origin.
inline ConvexBody reflect(const ConvexBody& a) {
    if (a.is_disk()) return ConvexBody::disk(a.radius(), -a.center());
    if (a.is_point()) return ConvexBody::point(-a.verts()[0]);
    std::vector<Point2> v;
    v.reserve(a.verts().size());
    for (Point2 p : a.verts()) v.push_back(-p);
    return ConvexBody::polygon(std::move(v));
}

namespace detail {

// Brute-force Minkowski sum: convex hull of all pairwise vertex sums.
inline std::vector<Point2> pairwise_sum_hull(const std::vector<Point2>& a,
                                             const std::vector<Point2>& b) {
    std::vector<Point2> sums;
    sums.reserve(a.size() * b.size());
    for (Point2 p : a)
        for (Point2 q : b) sums.push_back(p + q);
    return convex_hull(std::move(sums));
}

}  // namespace detail

// A + B for polygons, via the rotating edge merge. Single-point polygons act
// as translations.
inline ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    if (!a.is_polygon() || !b.is_polygon())
        throw InputError("minkowski_sum expects polygons");
    if (a.is_point() || b.is_point()) {
        const ConvexBody& poly = a.is_point() ? b : a;
        Point2 t = a.is_point() ? a.verts()[0] : b.verts()[0];
        if (poly.is_point()) return ConvexBody::point(poly.verts()[0] + t);
        std::vector<Point2> v;
        for (Point2 p : poly.verts()) v.push_back(p + t);
        return ConvexBody::polygon(std::move(v));
    }

    // Rotate each vertex list to start at the (y, x)-lexicographic minimum.
    auto rotated = [](std::vector<Point2> v) {
        auto it = std::min_element(v.begin(), v.end(), lex_less_yx);
        std::rotate(v.begin(), it, v.end());
        return v;
    };
    std::vector<Point2> va = rotated(a.verts());
    std::vector<Point2> vb = rotated(b.verts());
    size_t n = va.size(), m = vb.size();
    std::vector<Point2> out;
    out.reserve(n + m);
    size_t i = 0, j = 0;
    while (i < n || j < m) {
        out.push_back(va[i % n] + vb[j % m]);
        Vec2 ea = va[(i + 1) % n] - va[i % n];
        Vec2 eb = vb[(j + 1) % m] - vb[j % m];
        double c = cross(ea, eb);
        if (j >= m || (i < n && c > kEpsDedup))
            ++i;
        else if (i >= n || c < -kEpsDedup)
            ++j;
        else {
            ++i;
            ++j;
        }
    }
    return ConvexBody::polygon(std::move(out));
}

// Support point of the body in direction d; ties on polygons are broken by
// the lexicographically largest (x, then y) vertex.
inline Point2 support_point(const ConvexBody& body, Vec2 d) {
    if (norm2(d) == 0.0) throw InputError("support direction must be nonzero");
    if (body.is_disk()) return body.center() + body.radius() * normalized(d);
    Point2 best = body.verts()[0];
    double bestval = dot(d, best);
    double scale = std::max(1.0, std::sqrt(norm2(d)));
    for (Point2 v : body.verts()) {
        double val = dot(d, v);
        if (val > bestval + kEpsGeom * scale) {
            best = v;
            bestval = val;
        } else if (val > bestval - kEpsGeom * scale) {
            if (lex_less_xy(best, v)) {
                best = v;
                bestval = std::max(bestval, val);
            }
        }
    }
    return best;
}

inline double support_value(const ConvexBody& body, Vec2 d) {
    return dot(d, support_point(body, d));
}

inline double width(std::span<const Point2> points, Vec2 d) {
    if (points.empty()) throw InputError("width of empty point set");
    Vec2 u = normalized(d);
    double lo = dot(u, points[0]), hi = lo;
    for (Point2 p : points) {
        double v = dot(u, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

inline double width(const ConvexBody& body, Vec2 d) {
    if (body.is_disk()) return 2.0 * body.radius();
    return width(std::span<const Point2>(body.verts()), d);
}

// Is p inside body+t, accepting the boundary up to `slack` measured in the
// body's own gauge?
inline bool contains(const ConvexBody& body, Point2 t, Point2 p, double slack) {
    if (body.is_point()) return dist(p, body.verts()[0] + t) <= std::max(slack, kEpsDedup);
    return body.functional(p, t) <= 1.0 + slack;
}

// Hausdorff distance helpers (used by tests and verification).
inline double distance_to_body(const ConvexBody& body, Point2 p) {
    if (body.is_disk()) return std::max(0.0, dist(p, body.center()) - body.radius());
    if (body.is_point()) return dist(p, body.verts()[0]);
    if (body.functional(p) <= 1.0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    size_t n = body.verts().size();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, segment_point_distance(body.verts()[i],
                                                     body.verts()[(i + 1) % n], p));
    return best;
}

inline double polygon_hausdorff(const ConvexBody& a, const ConvexBody& b) {
    double h = 0;
    for (Point2 p : a.verts()) h = std::max(h, distance_to_body(b, p));
    for (Point2 p : b.verts()) h = std::max(h, distance_to_body(a, p));
    return h;
}

// body == -body within tau (reflection through the reference center).
inline bool is_centrally_symmetric(const ConvexBody& body, double tau = kTauSym) {
    if (body.is_disk()) return true;
    if (body.is_point()) return true;
    Point2 c = body.reference_center();
    for (Point2 v : body.verts()) {
        Point2 mirrored = c + (c - v);
        if (distance_to_body(body, mirrored) > tau) return false;
    }
    return true;
}

// Intersection points of two circles, if any. Near-tangency collapses to a
// single repeated point.
inline std::optional<std::array<Point2, 2>> circle_circle(Point2 c1, double r1,
                                                          Point2 c2, double r2,
                                                          double eps = kEpsGeom) {
    double d = dist(c1, c2);
    if (d < kEpsDedup) return std::nullopt;  // concentric: no crossing points
    if (d > r1 + r2 + eps) return std::nullopt;
    if (d < std::abs(r1 - r2) - eps) return std::nullopt;
    double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    double h2 = r1 * r1 - a * a;
    double h = h2 > 0 ? std::sqrt(h2) : 0.0;
    Vec2 u = (1.0 / d) * (c2 - c1);
    Point2 mid = c1 + a * u;
    Vec2 v = perp(u);
    return std::array<Point2, 2>{mid + h * v, mid - h * v};
}

// Clip a polygon by the halfplane <n, x> <= off (+eps tolerance). n need not
// be unit; eps is measured in units of |n|.
inline std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, Vec2 n,
                                          double off, double eps) {
    std::vector<Point2> out;
    size_t m = poly.size();
    if (m == 0) return out;
    double scale = norm(n);
    double tol = eps * std::max(scale, 1.0);
    for (size_t i = 0; i < m; ++i) {
        Point2 a = poly[i];
        Point2 b = poly[(i + 1) % m];
        double da = dot(n, a) - off;
        double db = dot(n, b) - off;
        bool ina = da <= tol, inb = db <= tol;
        if (ina) out.push_back(a);
        if (ina != inb) {
            double t = da / (da - db);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

// Exact intersection region of two placed bodies. For polygons the region is
// a convex polygon; for disks a lens described by its boundary crossings.
class Region {
  public:
    enum class Kind { Empty, Polygon, Lens };

    static Region empty() { return Region{}; }

    static Region polygon(std::vector<Point2> pts) {
        Region r;
        if (pts.empty()) return r;
        r.kind_ = Kind::Polygon;
        r.pts_ = std::move(pts);
        return r;
    }

    static Region lens(Point2 c1, double r1, Point2 c2, double r2,
                       std::vector<Point2> crossings) {
        Region r;
        r.kind_ = Kind::Lens;
        r.c1_ = c1;
        r.r1_ = r1;
        r.c2_ = c2;
        r.r2_ = r2;
        r.pts_ = std::move(crossings);
        return r;
    }

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }

    // Boundary crossing points (lens corners / clipped polygon vertices).
    const std::vector<Point2>& boundary_points() const { return pts_; }

    // Lexicographic (y, then x) minimum of the region, with a tolerance band
    // so flat bottom edges break their tie deterministically to the left.
    std::optional<Point2> lowest_point() const {
        if (kind_ == Kind::Empty) return std::nullopt;
        std::vector<Point2> cand = pts_;
        if (kind_ == Kind::Lens) {
            Point2 b1 = c1_ - Point2{0, r1_};
            Point2 b2 = c2_ - Point2{0, r2_};
            if (dist(b1, c2_) <= r2_ + kEpsGeom) cand.push_back(b1);
            if (dist(b2, c1_) <= r1_ + kEpsGeom) cand.push_back(b2);
        }
        if (cand.empty()) return std::nullopt;
        return lex_min_yx_tol(cand, kEpsGeom);
    }

    bool contains(Point2 p, double slack = kEpsGeom) const {
        switch (kind_) {
            case Kind::Empty:
                return false;
            case Kind::Lens:
                return dist(p, c1_) <= r1_ + slack && dist(p, c2_) <= r2_ + slack;
            case Kind::Polygon: {
                if (pts_.size() == 1) return dist(p, pts_[0]) <= slack;
                if (pts_.size() == 2)
                    return segment_point_distance(pts_[0], pts_[1], p) <= slack;
                size_t n = pts_.size();
                for (size_t i = 0; i < n; ++i) {
                    Vec2 e = pts_[(i + 1) % n] - pts_[i];
                    if (cross(e, p - pts_[i]) < -slack * std::max(1.0, norm(e)))
                        return false;
                }
                return true;
            }
        }
        return false;
    }

  private:
    Kind kind_ = Kind::Empty;
    std::vector<Point2> pts_;
    Point2 c1_, c2_;
    double r1_ = 0, r2_ = 0;
};

inline Region intersect_bodies(const ConvexBody& a, Point2 ta, const ConvexBody& b,
                               Point2 tb) {
    if (a.is_disk() && b.is_disk()) {
        Point2 c1 = a.center() + ta, c2 = b.center() + tb;
        double r1 = a.radius(), r2 = b.radius();
        double d = dist(c1, c2);
        if (d > r1 + r2 + kEpsGeom) return Region::empty();
        std::vector<Point2> crossings;
        if (auto cc = circle_circle(c1, r1, c2, r2)) {
            crossings.push_back((*cc)[0]);
            if (dist((*cc)[0], (*cc)[1]) > kEpsDedup) crossings.push_back((*cc)[1]);
        }
        return Region::lens(c1, r1, c2, r2, std::move(crossings));
    }
    if (a.is_polygon() && b.is_polygon()) {
        std::vector<Point2> poly;
        poly.reserve(a.verts().size());
        for (Point2 v : a.verts()) poly.push_back(v + ta);
        if (a.is_point()) {
            // Degenerate subject: keep the point iff it is inside b+tb.
            if (contains(b, tb, poly[0], kEpsGeom)) return Region::polygon(std::move(poly));
            return Region::empty();
        }
        const std::vector<Point2>& bv = b.verts();
        size_t m = bv.size();
        if (b.is_point()) {
            if (contains(a, ta, bv[0] + tb, kEpsGeom))
                return Region::polygon({bv[0] + tb});
            return Region::empty();
        }
        for (size_t i = 0; i < m && !poly.empty(); ++i) {
            Point2 p0 = bv[i] + tb;
            Point2 p1 = bv[(i + 1) % m] + tb;
            Vec2 n{(p1 - p0).y, -(p1 - p0).x};  // outward normal of CCW edge
            poly = clip_halfplane(poly, n, dot(n, p0), kEpsGeom);
        }
        if (poly.empty()) return Region::empty();
        return Region::polygon(std::move(poly));
    }
    throw Error("intersect_bodies: mixed polygon/disk intersection not supported");
}

// Does the open segment (a, b) pass through the interior of body+t?
inline bool segment_enters_interior(const ConvexBody& body, Point2 t, Point2 a,
                                    Point2 b, double eps = kEpsGeom) {
    // Clip the parameter interval [0,1] to the body; a crossing with positive
    // length whose midpoint is strictly interior counts.
    double lo = 0.0, hi = 1.0;
    if (body.is_disk()) {
        Point2 c = body.center() + t;
        Vec2 d = b - a;
        Vec2 f = a - c;
        double A = norm2(d), B = 2 * dot(f, d), C = norm2(f) - body.radius() * body.radius();
        if (A == 0) return false;
        double disc = B * B - 4 * A * C;
        if (disc <= 0) return false;
        double s = std::sqrt(disc);
        lo = std::max(lo, (-B - s) / (2 * A));
        hi = std::min(hi, (-B + s) / (2 * A));
    } else if (body.is_point()) {
        return false;
    } else {
        const std::vector<Point2>& v = body.verts();
        size_t n = v.size();
        for (size_t i = 0; i < n; ++i) {
            Point2 p0 = v[i] + t;
            Point2 p1 = v[(i + 1) % n] + t;
            Vec2 nrm{(p1 - p0).y, -(p1 - p0).x};
            double da = dot(nrm, a) - dot(nrm, p0);
            double db = dot(nrm, b) - dot(nrm, p0);
            // Inside means <n, x> <= <n, p0>.
            if (da > 0 && db > 0) return false;
            if (da > 0) lo = std::max(lo, da / (da - db));
            if (db > 0) hi = std::min(hi, da / (da - db));
        }
    }
    if (hi - lo <= eps) return false;
    Point2 mid = a + (0.5 * (lo + hi)) * (b - a);
    return body.functional(mid, t) < 1.0 - eps;
}

}  // namespace pierce
