#include <doctest.h>

#include <cmath>
#include <map>

#include "pierce/oracle.hpp"
#include "pierce/random.hpp"
#include "pierce/symmetric.hpp"

using namespace pierce;

namespace {

const double kS3 = std::sqrt(3.0);

ConvexBody symmetric_pool_body(Rng& rng, int which) {
    switch (which % 5) {
        case 0:
            return ConvexBody::disk(1.0);
        case 1:
            return make_generator_body(BodyKind::Square, rng);
        case 2:
            return make_generator_body(BodyKind::Hexagon, rng);
        case 3:
            return make_generator_body(BodyKind::Rectangle, rng);
        default:
            return make_generator_body(BodyKind::RandomSymmetric, rng);
    }
}

}  // namespace

TEST_CASE("best cross pair on the three-disk example") {
    // Only the first cross pair actually intersects; its touching point wins.
    ColoredInstance inst;
    inst.generator = ConvexBody::disk(1.0);
    inst.families = {Family{1, {{0, 0}}}, Family{2, {{2, 0}}}, Family{3, {{1, 2}}}};
    BestPair bp = best_cross_pair(to_covering(inst));
    CHECK(bp.family_i == 0);
    CHECK(bp.family_j == 1);
    CHECK(bp.p.x == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(std::abs(bp.p.y) < 1e-4);
}

TEST_CASE("best cross pair with a single pair returns it") {
    ColoredInstance inst;
    inst.generator = ConvexBody::disk(1.0);
    inst.families = {Family{1, {{0, 0}}}, Family{2, {{0.5, 0.5}}}};
    BestPair bp = best_cross_pair(to_covering(inst));
    CHECK(bp.family_i == 0);
    CHECK(bp.index_i == 0);
    CHECK(bp.family_j == 1);
}

TEST_CASE("coincident translates use the straight-down degenerate rule") {
    ColoredInstance inst;
    inst.generator = ConvexBody::disk(1.0);
    inst.families = {Family{1, {{0, 0}}}, Family{2, {{0, 0}}}, Family{3, {{0, 0}}}};
    SymmetricResult res = symmetric_pierce(inst);
    CHECK(res.cons.degenerate);
    CHECK(res.cons.q.x == doctest::Approx(0.0));
    CHECK(res.cons.q.y == doctest::Approx(-2.0));
    CHECK(res.cons.p.x == doctest::Approx(0.0));
    CHECK(res.cons.p.y == doctest::Approx(-1.0));
    CHECK(res.cons.r1.y == doctest::Approx(-1.0));
    CHECK(check_certificate(inst, res.cert));
}

TEST_CASE("worked disk instance reproduces the analytic construction") {
    ColoredInstance inst;
    inst.generator = ConvexBody::disk(1.0);
    inst.families = {Family{1, {{0, 0}}}, Family{2, {{2, 0}}}, Family{3, {{1, 1}}}};
    SymmetricResult res = symmetric_pierce(inst);
    CHECK(res.cons.m == 2);
    CHECK(res.cons.p.x == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(std::abs(res.cons.p.y) < 1e-4);
    CHECK(res.cons.q.x == doctest::Approx(1.0));
    CHECK(res.cons.q.y == doctest::Approx(-kS3));
    CHECK(res.cons.r1.x == doctest::Approx(0.5));
    CHECK(res.cons.r1.y == doctest::Approx(-kS3 / 2));
    CHECK(res.cons.r2.x == doctest::Approx(1.5));
    CHECK(res.cons.r2.y == doctest::Approx(-kS3 / 2));
    CHECK(check_certificate(inst, res.cert));
    CHECK(symmetric_claim_holds(inst, res));
}

TEST_CASE("q lies on both blown-up boundaries") {
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        ConvexBody body = symmetric_pool_body(rng, trial);
        GenSpec spec{body, {2, 2, 2}, rng.uniform(0.3, 1.5)};
        ColoredInstance inst = generate_instance(100 + trial, spec);
        SymmetricResult res = symmetric_pierce(inst);
        if (res.cons.degenerate) continue;
        Gauge g = difference_gauge(inst.generator);
        CHECK(std::abs(gauge_distance(g, res.cons.x1, res.cons.q) - 2.0) < 1e-7);
        CHECK(std::abs(gauge_distance(g, res.cons.x2, res.cons.q) - 2.0) < 1e-7);
        // r_i are the midpoints.
        CHECK(dist(res.cons.r1, 0.5 * (res.cons.x1 + res.cons.q)) < 1e-9);
        CHECK(dist(res.cons.r2, 0.5 * (res.cons.x2 + res.cons.q)) < 1e-9);
    }
}

TEST_CASE("fuzzed symmetric instances: certificate, claim and oracle agree") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        ConvexBody body = symmetric_pool_body(rng, trial);
        GenSpec spec{body,
                     {1 + static_cast<int>(rng.uniform_int(6)),
                      1 + static_cast<int>(rng.uniform_int(6)),
                      1 + static_cast<int>(rng.uniform_int(6))},
                     rng.uniform(0.1, 2.0)};
        ColoredInstance inst = generate_instance(9000 + trial, spec);
        SymmetricResult res = symmetric_pierce(inst);
        CHECK(res.cert.points.size() <= 3);
        CHECK(check_certificate(inst, res.cert));
        CHECK(symmetric_claim_holds(inst, res));
        TheoremReport rep = verify_theorem(inst, res.cert);
        CHECK(rep.ok);
    }
}

TEST_CASE("symmetric_pierce rejects asymmetric generators") {
    ColoredInstance inst;
    inst.generator = ConvexBody::polygon({{0, 0}, {1, 0}, {0.5, 1}});
    inst.families = {Family{1, {{0, 0}}}, Family{2, {{0, 0}}}, Family{3, {{0, 0}}}};
    CHECK_THROWS_AS(symmetric_pierce(inst), NotSymmetricError);
}

TEST_CASE("jung radius: euclidean and parallelogram values") {
    Gauge ge{ConvexBody::disk(1.0)};
    JungData je = jung_radius(ge);
    CHECK(std::abs(je.j - 2.0 / kS3) < 1e-4);
    // Witness stays within the diameter constraint.
    double diam = std::max({gauge_norm(ge, je.u), gauge_norm(ge, je.v),
                            gauge_norm(ge, je.u - je.v)});
    CHECK(diam <= 2.0 + 1e-9);

    Gauge gs = Gauge::from_unit_ball(
        ConvexBody::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    JungData js = jung_radius(gs);
    CHECK(std::abs(js.j - 1.0) < 1e-4);
    CHECK(js.j >= 1.0 - 1e-6);

    // Skewed parallelogram: still exactly 1.
    Gauge gp = Gauge::from_unit_ball(
        ConvexBody::polygon({{-1, -0.4}, {0.4, -0.4}, {1, 0.4}, {-0.4, 0.4}}));
    JungData jp = jung_radius(gp);
    CHECK(std::abs(jp.j - 1.0) < 1e-4);
}

TEST_CASE("jung radius against independent dense grid searches") {
    // Euclidean grid oracle with the closed-form circumradius.
    auto euclid_circum = [](Point2 u, Point2 v) {
        Circle c = miniball(std::vector<Point2>{{0, 0}, u, v});
        return c.radius;
    };
    double best = 0;
    const int kG = 180;
    for (int a = 0; a < kG; ++a) {
        for (int b = a + 1; b < kG; ++b) {
            Point2 u{2 * std::cos(2 * M_PI * a / kG), 2 * std::sin(2 * M_PI * a / kG)};
            Point2 v{2 * std::cos(2 * M_PI * b / kG), 2 * std::sin(2 * M_PI * b / kG)};
            if (norm(u - v) > 2.0) continue;
            best = std::max(best, euclid_circum(u, v));
        }
    }
    CHECK(std::abs(best - 2.0 / kS3) < 1e-3);
    Gauge ge{ConvexBody::disk(1.0)};
    CHECK(std::abs(jung_radius(ge).j - best) < 1e-3);

    // Chebyshev grid oracle: circumradius is half the larger coordinate range.
    auto cheb_circum = [](Point2 u, Point2 v) {
        double wx = std::max({0.0, u.x, v.x}) - std::min({0.0, u.x, v.x});
        double wy = std::max({0.0, u.y, v.y}) - std::min({0.0, u.y, v.y});
        return 0.5 * std::max(wx, wy);
    };
    auto cheb = [](Point2 p) { return std::max(std::abs(p.x), std::abs(p.y)); };
    double bests = 0;
    for (int a = 0; a < kG; ++a) {
        for (int b = a + 1; b < kG; ++b) {
            Vec2 da{std::cos(2 * M_PI * a / kG), std::sin(2 * M_PI * a / kG)};
            Vec2 db{std::cos(2 * M_PI * b / kG), std::sin(2 * M_PI * b / kG)};
            Point2 u = (2.0 / cheb(da)) * da;
            Point2 v = (2.0 / cheb(db)) * db;
            if (cheb(u - v) > 2.0) continue;
            bests = std::max(bests, cheb_circum(u, v));
        }
    }
    CHECK(std::abs(bests - 1.0) < 1e-6);
}

TEST_CASE("jung radius is scale free") {
    Rng rng(3);
    ConvexBody ball = make_generator_body(BodyKind::Hexagon, rng);
    Gauge g1 = Gauge::from_unit_ball(ball);
    std::vector<Point2> doubled;
    for (Point2 v : ball.verts()) doubled.push_back(2.0 * v);
    Gauge g2 = Gauge::from_unit_ball(ConvexBody::polygon(doubled));
    CHECK(std::abs(jung_radius(g1).j - jung_radius(g2).j) < 1e-4);
}

TEST_CASE("jung cover: trivial at j = 1, verified for euclidean optimum") {
    Gauge gs = Gauge::from_unit_ball(
        ConvexBody::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    auto centers = jung_cover_three(gs, 1.0);
    for (Point2 c : centers) CHECK(norm(c) < 1e-12);

    Gauge ge{ConvexBody::disk(1.0)};
    double j = 2.0 / kS3;
    auto cov = jung_cover_three(ge, j);
    REQUIRE(cov.size() == 3);
    // Verify densely, independently of the internal sampling.
    for (int k = 0; k < 2000; ++k) {
        double ang = 2 * M_PI * k / 2000;
        Point2 p{j * std::cos(ang), j * std::sin(ang)};
        bool ok = false;
        for (Point2 c : cov)
            if (dist(p, c) <= 1.0 + 1e-6) ok = true;
        CHECK(ok);
    }
}

TEST_CASE("colorful jung route yields verifying certificates") {
    Rng rng(88);
    std::map<int, JungData> cache;
    for (int trial = 0; trial < 60; ++trial) {
        int which = trial % 5;
        Rng body_rng(1234 + which);  // deterministic pool body per class
        ConvexBody body = symmetric_pool_body(body_rng, which);
        GenSpec spec{body,
                     {1 + static_cast<int>(rng.uniform_int(5)),
                      1 + static_cast<int>(rng.uniform_int(5)),
                      1 + static_cast<int>(rng.uniform_int(5))},
                     rng.uniform(0.1, 1.5)};
        ColoredInstance inst = generate_instance(40000 + trial, spec);
        if (!cache.count(which)) cache[which] = jung_radius(difference_gauge(body));
        JungPierceResult res = colorful_jung_pierce(inst, &cache[which]);
        CHECK(res.cert.points.size() <= 3);
        CHECK(check_certificate(inst, res.cert));
        CHECK(verify_theorem(inst, res.cert).ok);
    }
}

TEST_CASE("both symmetric routes verify on the same instance") {
    ColoredInstance inst;
    inst.generator = ConvexBody::disk(1.0);
    inst.families = {Family{1, {{0, 0}}}, Family{2, {{2, 0}}}, Family{3, {{1, 1}}}};
    SymmetricResult s = symmetric_pierce(inst);
    JungPierceResult jr = colorful_jung_pierce(inst);
    CHECK(check_certificate(inst, s.cert));
    CHECK(check_certificate(inst, jr.cert));
}
