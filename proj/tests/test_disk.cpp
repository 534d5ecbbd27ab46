#include <doctest.h>

#include <cmath>

#include "pierce/disk.hpp"
#include "pierce/oracle.hpp"
#include "pierce/random.hpp"

using namespace pierce;

namespace {

const double kS3 = std::sqrt(3.0);

// Cross-valid point sets: everything within distance 1/2 of a moving anchor.
std::vector<std::vector<Point2>> random_sets(Rng& rng, int k, double radius) {
    std::vector<std::vector<Point2>> sets;
    Point2 anchor = rng.in_disk(1.0);
    for (int s = 0; s < k; ++s) {
        int n = 1 + static_cast<int>(rng.uniform_int(5));
        std::vector<Point2> set;
        for (int i = 0; i < n; ++i) set.push_back(anchor + rng.in_disk(radius));
        sets.push_back(std::move(set));
    }
    return sets;
}

bool sets_cross_valid(const std::vector<std::vector<Point2>>& sets) {
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a + 1; b < sets.size(); ++b)
            for (Point2 p : sets[a])
                for (Point2 q : sets[b])
                    if (dist(p, q) > 1.0) return false;
    return true;
}

}  // namespace

TEST_CASE("25-degree lens construction reproduces the stated bounds") {
    LensCover lc = lens_cover_three(2.0 / kS3);
    CHECK(lc.be < 1.0);
    CHECK(lc.be > 0.9);  // the construction is tight, not slack
    CHECK(lc.circumradius < 0.5);
    CHECK(lc.circumradius > 0.45);
    for (const CoverDisk& d : lc.disks) CHECK(2 * d.radius <= 1.0 - 1e-6);
    // a and b are the lens corners at r0.
    CHECK(lc.a.y == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(lc.b.y == doctest::Approx(-std::sqrt(2.0 / 3.0)));
}

TEST_CASE("lens cover handles the whole 1a range") {
    // r = 2: A(2) is the single point (0, 0).
    LensCover lc = lens_cover_three(2.0);
    bool origin_covered = false;
    for (const CoverDisk& d : lc.disks)
        if (dist({0, 0}, d.center) <= d.radius) origin_covered = true;
    CHECK(origin_covered);

    // r = 1.8: the same disks cover a sampling of A(1.8).
    LensCover lc18 = lens_cover_three(1.8);
    for (Point2 p : detail::sample_lens(1.8, 500)) {
        bool ok = false;
        for (const CoverDisk& d : lc18.disks)
            if (detail::in_disk(d, p, 1e-7)) ok = true;
        CHECK(ok);
    }

    CHECK_THROWS_AS(lens_cover_three(1.0), InputError);
}

TEST_CASE("strip frame constants match the stated bounds") {
    StripFrame f = make_strip_frame();
    CHECK(f.o1a < 0.47);
    CHECK(f.o1a > 0.4);
    CHECK(f.qa < 0.72);
    CHECK(f.qa > 0.65);
    CHECK(f.alpha_deg < 39.3);
    CHECK(f.alpha_deg > 38.0);
    CHECK(dist(Point2{0, -1 / kS3}, f.qp) < 1.0);
    for (const CoverDisk& d : f.upper) CHECK(2 * d.radius <= 1.0 - 1e-6);
    // q' sits on the lens boundary.
    CHECK(dist(f.qp, {-0.5, 0}) == doctest::Approx(1.0));
    CHECK(dist(f.qp, {0.5, 0}) < 1.0);
}

TEST_CASE("strip cover: middle band, upper trigger, mirror, conflict") {
    StripFrame f = make_strip_frame();
    // Origin alone: middle band, upper cover used and verified.
    auto cover = strip_cover_three({{0, 0}}, f);
    bool ok = false;
    for (const CoverDisk& d : cover)
        if (detail::in_disk(d, {0, 0}, 1e-9)) ok = true;
    CHECK(ok);

    // Points clustered near the top corner a force the upper cover.
    std::vector<Point2> top{{0, 0.8}, {0.05, 0.75}, {0, 1 / kS3 + 0.05}};
    auto upper = strip_cover_three(top, f);
    for (Point2 p : top) {
        bool in = false;
        for (const CoverDisk& d : upper)
            if (detail::in_disk(d, p, 1e-9)) in = true;
        CHECK(in);
    }

    // A point below the lower chord flips to the mirrored cover.
    std::vector<Point2> low{{0, -0.8}, {0.1, -0.2}};
    auto mirrored = strip_cover_three(low, f);
    for (Point2 p : low) {
        bool in = false;
        for (const CoverDisk& d : mirrored)
            if (detail::in_disk(d, p, 1e-9)) in = true;
        CHECK(in);
    }

    // Conflict: strictly above zw and strictly below xy simultaneously.
    CHECK_THROWS_AS(strip_cover_three({{0, 0.7}, {0, -0.7}}, f),
                    RegionConflictError);
}

TEST_CASE("borsuk cover: singleton, diameter-1 disk, reuleaux triangle") {
    auto single = borsuk_three_cover({{3, 4}});
    for (const CoverDisk& d : single) {
        CHECK(d.center.x == doctest::Approx(3.0));
        CHECK(2 * d.radius <= 1.0 - 1e-6);
    }

    // 360 boundary points of a diameter-1 disk.
    std::vector<Point2> circle;
    for (int i = 0; i < 360; ++i) {
        double a = 2 * M_PI * i / 360;
        circle.push_back({0.5 * std::cos(a), 0.5 * std::sin(a)});
    }
    auto disks = borsuk_three_cover(circle);
    for (const CoverDisk& d : disks) CHECK(2 * d.radius <= kS3 / 2 + 1e-6);
    for (Point2 p : circle) {
        bool ok = false;
        for (const CoverDisk& d : disks)
            if (detail::in_disk(d, p, 1e-7)) ok = true;
        CHECK(ok);
    }

    // Reuleaux triangle of width 1, 720 boundary samples.
    std::vector<Point2> reuleaux;
    std::array<Point2, 3> corners{Point2{0, 0}, Point2{1, 0},
                                  Point2{0.5, kS3 / 2}};
    for (int arc = 0; arc < 3; ++arc) {
        Point2 center = corners[arc];
        // The opposite arc spans the two other corners at radius 1.
        Point2 from = corners[(arc + 1) % 3] - center;
        Point2 to = corners[(arc + 2) % 3] - center;
        double a0 = std::atan2(from.y, from.x);
        double a1 = std::atan2(to.y, to.x);
        double span = a1 - a0;
        while (span <= -M_PI) span += 2 * M_PI;
        while (span > M_PI) span -= 2 * M_PI;
        for (int i = 0; i <= 240; ++i) {
            double a = a0 + span * i / 240;
            reuleaux.push_back(center + Point2{std::cos(a), std::sin(a)});
        }
    }
    auto rdisks = borsuk_three_cover(reuleaux);
    for (Point2 p : reuleaux) {
        bool ok = false;
        for (const CoverDisk& d : rdisks)
            if (detail::in_disk(d, p, 1e-7)) ok = true;
        CHECK(ok);
    }
}

TEST_CASE("diagonal square: exclude the first diagonal, cover the other") {
    std::vector<std::vector<Point2>> sets{{{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}};
    DiskPierceResult res = disk_pierce_points(sets);
    CHECK(res.m == 0);  // equal diameters, smallest index wins
    CHECK(res.diameter == doctest::Approx(std::sqrt(2.0)));
    CHECK(res.dispatch == DiskCase::Lens1a);
    CHECK(check_cover_certificate(sets, res.cover_cert));
}

TEST_CASE("all-singleton sets collapse to the borsuk case") {
    std::vector<std::vector<Point2>> sets{{{2, 3}}, {{2, 3}}, {{2, 3}}};
    DiskPierceResult res = disk_pierce_points(sets);
    CHECK(res.dispatch == DiskCase::Borsuk2);
    CHECK(check_cover_certificate(sets, res.cover_cert));
}

TEST_CASE("compact sets use the borsuk case; small-diameter bound for k=3") {
    Rng rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        auto sets = random_sets(rng, 3, 0.4);
        if (!sets_cross_valid(sets)) continue;
        DiskPierceResult res = disk_pierce_points(sets);
        CHECK(res.dispatch == DiskCase::Borsuk2);
        CHECK(check_cover_certificate(sets, res.cover_cert));
        // With k >= 3 some set must fit within diameter 2/sqrt(3).
        double smallest = 1e30;
        for (const auto& s : sets) {
            double diam = 0;
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = i + 1; j < s.size(); ++j)
                    diam = std::max(diam, dist(s[i], s[j]));
            smallest = std::min(smallest, diam);
        }
        CHECK(smallest <= 2.0 / kS3 + 1e-9);
    }
}

TEST_CASE("invalid cross pairs are rejected with the pair") {
    std::vector<std::vector<Point2>> sets{{{0, 0}}, {{1.2, 0}}};
    CHECK_THROWS_AS(disk_pierce_points(sets), InvalidInstanceError);
}

TEST_CASE("fuzzed point sets across the three cases") {
    Rng rng(92);
    int seen_1a = 0, seen_1b = 0, seen_2 = 0;
    for (int trial = 0; trial < 250; ++trial) {
        int k = 2 + static_cast<int>(rng.uniform_int(3));
        double want = rng.uniform(0.0, 1.0);
        std::vector<std::vector<Point2>> sets;
        if (want < 0.4) {
            // Excluded diameter in the 1a range.
            double d = rng.uniform(2.0 / kS3, 1.99);
            double half = std::sqrt(std::max(0.01, 1 - d * d / 4));
            sets.push_back({{-d / 2, 0}, {d / 2, 0}});
            for (int s = 1; s < k; ++s) {
                std::vector<Point2> set;
                int n = 1 + static_cast<int>(rng.uniform_int(4));
                for (int i = 0; i < n; ++i)
                    set.push_back(
                        {rng.uniform(-0.2, 0.2), rng.uniform(-half, half)});
                sets.push_back(std::move(set));
            }
        } else if (want < 0.7) {
            // Excluded diameter in the 1b range.
            double d = rng.uniform(1.01, 2.0 / kS3 - 0.01);
            sets.push_back({{-d / 2, 0}, {d / 2, 0}});
            for (int s = 1; s < k; ++s) {
                std::vector<Point2> set;
                int n = 1 + static_cast<int>(rng.uniform_int(4));
                for (int i = 0; i < n; ++i)
                    set.push_back(
                        {rng.uniform(-0.15, 0.15), rng.uniform(-0.3, 0.3)});
                sets.push_back(std::move(set));
            }
        } else {
            sets = random_sets(rng, k, 0.45);
        }
        if (!sets_cross_valid(sets)) continue;
        DiskPierceResult res = disk_pierce_points(sets);
        CHECK(check_cover_certificate(sets, res.cover_cert));
        for (const CoverDisk& d : res.disks) CHECK(2 * d.radius <= 1.0 - 1e-6);
        if (res.dispatch == DiskCase::Lens1a) ++seen_1a;
        if (res.dispatch == DiskCase::Strip1b) ++seen_1b;
        if (res.dispatch == DiskCase::Borsuk2) ++seen_2;
    }
    CHECK(seen_1a > 10);
    CHECK(seen_1b > 10);
    CHECK(seen_2 > 10);
}

TEST_CASE("disk instance bridge: cover centers pierce the kept families") {
    Rng rng(93);
    for (int trial = 0; trial < 60; ++trial) {
        double radius = trial % 3 == 0 ? 0.5 : rng.uniform(0.3, 1.2);
        GenSpec spec{ConvexBody::disk(radius),
                     {1 + static_cast<int>(rng.uniform_int(4)),
                      1 + static_cast<int>(rng.uniform_int(4)),
                      1 + static_cast<int>(rng.uniform_int(4))},
                     rng.uniform(0.1, 1.2)};
        ColoredInstance inst = generate_instance(77000 + trial, spec);
        DiskPierceResult res = disk_pierce(inst);
        CHECK(check_certificate(inst, res.pierce_cert));
        // Each piercing point sits strictly inside the disks whose centers
        // it covers, with room from the diameter margin.
        std::vector<Point2> targets = detail::union_translates_except(inst, res.m);
        for (auto& [ti, pi] : res.pierce_cert.witnesses) {
            Point2 t = targets[ti];
            Point2 p = res.pierce_cert.points[pi];
            CHECK(dist(p, inst.generator.center() + t) <=
                  inst.generator.radius() - 1e-7);
        }
        TheoremReport rep = verify_theorem(inst, res.pierce_cert);
        CHECK(rep.ok);
    }
}
