#pragma once

// Colored families of translates, the piercing <-> covering restatement,
// certificates, and the seeded instance generator.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/gauge.hpp"
#include "pierce/geometry.hpp"
#include "pierce/random.hpp"

namespace pierce {

// Permitted overshoot when validating the cross-intersection hypothesis.
inline constexpr double kCrossTol = 1e-9;

struct Family {
    int color = 1;
    std::vector<Point2> translates;
};

// A generator body with k color classes of translation vectors. Every pair
// of translates from different classes is supposed to intersect; same-class
// pairs are unconstrained.
struct ColoredInstance {
    ConvexBody generator;
    std::vector<Family> families;

    void validate_shape() const {
        if (families.size() < 2) throw InputError("instance needs at least 2 families");
        std::vector<int> colors;
        for (const Family& f : families) {
            if (f.translates.empty()) throw InputError("family must be non-empty");
            for (Point2 t : f.translates)
                if (!finite(t)) throw InputError("translate not finite");
            colors.push_back(f.color);
        }
        std::sort(colors.begin(), colors.end());
        if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
            throw InputError("family colors must be distinct");
        if (generator.is_point()) throw InputError("generator must have interior");
    }

    size_t total_translates() const {
        size_t n = 0;
        for (const Family& f : families) n += f.translates.size();
        return n;
    }
};

// Covering form of the same data: points X_i = translate vectors, cover body
// -K, and the difference gauge that tests intersection of translates.
struct CoveringInstance {
    ConvexBody cover_body;
    std::vector<Family> point_sets;
    Gauge gauge;
};

inline CoveringInstance to_covering(const ColoredInstance& inst) {
    return CoveringInstance{reflect(inst.generator), inst.families,
                            difference_gauge(inst.generator)};
}

inline ColoredInstance from_covering(const CoveringInstance& cov) {
    return ColoredInstance{reflect(cov.cover_body), cov.point_sets};
}

struct PairRef {
    size_t family_a = 0, index_a = 0;
    size_t family_b = 0, index_b = 0;
};

struct CrossReport {
    bool ok = true;
    std::optional<PairRef> violating;
    double worst_distance = 0.0;
};

// Check the hypothesis: every cross-color pair of translates at gauge
// distance <= 2 (+tolerance). On a bounded sample of pairs the gauge test is
// cross-checked against direct region intersection; disagreement outside the
// tolerance band means a geometry bug, not bad input.
inline CrossReport validate_cross_intersecting(const ColoredInstance& inst,
                                               size_t crosscheck_budget = 1000) {
    inst.validate_shape();
    Gauge g = difference_gauge(inst.generator);
    CrossReport rep;
    size_t checked = 0;
    for (size_t fa = 0; fa < inst.families.size(); ++fa) {
        for (size_t fb = fa + 1; fb < inst.families.size(); ++fb) {
            const auto& ta = inst.families[fa].translates;
            const auto& tb = inst.families[fb].translates;
            for (size_t i = 0; i < ta.size(); ++i) {
                for (size_t j = 0; j < tb.size(); ++j) {
                    double d = gauge_distance(g, ta[i], tb[j]);
                    rep.worst_distance = std::max(rep.worst_distance, d);
                    if (d > 2.0 + kCrossTol && rep.ok) {
                        rep.ok = false;
                        rep.violating = PairRef{fa, i, fb, j};
                    }
                    if (checked < crosscheck_budget) {
                        ++checked;
                        Region r = intersect_bodies(inst.generator, ta[i],
                                                    inst.generator, tb[j]);
                        bool meet = !r.is_empty();
                        bool close = d <= 2.0 + kCrossTol;
                        if (std::abs(d - 2.0) > 1e-6 && meet != close)
                            throw DisagreementError(
                                "gauge test and direct intersection disagree at "
                                "distance " +
                                std::to_string(d));
                    }
                }
            }
        }
    }
    return rep;
}

// Machine-checkable piercing witness: at most 3 points, and for each
// translate of family m the index of a point it contains. When method ==
// "disk" the certificate pierces the union of all families except m.
struct PiercingCertificate {
    std::string method;
    int family_index = 0;
    std::vector<Point2> points;
    std::map<int, int> witnesses;  // translate ordinal -> point index
};

struct PlacedBody {
    ConvexBody body;
    Point2 at;
};

// Covering witness: at most 3 placed bodies, and for every point of every
// non-excluded set the index of the body containing it. Point keys are
// (set, point) pairs.
struct CoverCertificate {
    std::string method;
    int excluded_index = 0;
    std::vector<PlacedBody> covers;
    std::map<std::pair<int, int>, int> witnesses;
};

namespace detail {

// Translates covered by a "disk"-method certificate: everything outside
// family m, flattened in family order.
inline std::vector<Point2> union_translates_except(const ColoredInstance& inst,
                                                   size_t m) {
    std::vector<Point2> out;
    for (size_t f = 0; f < inst.families.size(); ++f) {
        if (f == m) continue;
        for (Point2 t : inst.families[f].translates) out.push_back(t);
    }
    return out;
}

}  // namespace detail

inline bool check_certificate(const ColoredInstance& inst,
                              const PiercingCertificate& cert,
                              double slack = kCertSlack) {
    if (cert.points.size() > 3 || cert.points.empty()) return false;
    if (cert.family_index < 0 ||
        static_cast<size_t>(cert.family_index) >= inst.families.size())
        return false;
    std::vector<Point2> targets =
        cert.method == "disk"
            ? detail::union_translates_except(inst,
                                              static_cast<size_t>(cert.family_index))
            : inst.families[cert.family_index].translates;
    for (size_t i = 0; i < targets.size(); ++i) {
        auto it = cert.witnesses.find(static_cast<int>(i));
        if (it == cert.witnesses.end()) return false;
        if (it->second < 0 || static_cast<size_t>(it->second) >= cert.points.size())
            return false;
        if (!contains(inst.generator, targets[i], cert.points[it->second], slack))
            return false;
    }
    return true;
}

// Assign each target translate the first certificate point it contains.
inline std::optional<std::map<int, int>> assign_witnesses(
    const ConvexBody& generator, const std::vector<Point2>& targets,
    const std::vector<Point2>& points, double slack = kCertSlack) {
    std::map<int, int> w;
    for (size_t i = 0; i < targets.size(); ++i) {
        int found = -1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (contains(generator, targets[i], points[j], slack)) {
                found = static_cast<int>(j);
                break;
            }
        }
        if (found < 0) return std::nullopt;
        w[static_cast<int>(i)] = found;
    }
    return w;
}

inline bool check_cover_certificate(const std::vector<std::vector<Point2>>& sets,
                                    const CoverCertificate& cert,
                                    double slack = kCertSlack) {
    if (cert.covers.size() > 3 || cert.covers.empty()) return false;
    if (cert.excluded_index < 0 ||
        static_cast<size_t>(cert.excluded_index) >= sets.size())
        return false;
    for (size_t s = 0; s < sets.size(); ++s) {
        if (s == static_cast<size_t>(cert.excluded_index)) continue;
        for (size_t i = 0; i < sets[s].size(); ++i) {
            auto it = cert.witnesses.find({static_cast<int>(s), static_cast<int>(i)});
            if (it == cert.witnesses.end()) return false;
            if (it->second < 0 ||
                static_cast<size_t>(it->second) >= cert.covers.size())
                return false;
            const PlacedBody& pb = cert.covers[it->second];
            if (!contains(pb.body, pb.at, sets[s][i], slack)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Instance generation

enum class BodyKind {
    Disk,
    Square,
    Rectangle,
    Hexagon,
    RandomSymmetric,
    Triangle,
    RandomTriangle,
};

inline ConvexBody make_generator_body(BodyKind kind, Rng& rng) {
    switch (kind) {
        case BodyKind::Disk:
            return ConvexBody::disk(1.0);
        case BodyKind::Square:
            return ConvexBody::polygon({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
        case BodyKind::Rectangle:
            return ConvexBody::polygon({{-1, -0.4}, {1, -0.4}, {1, 0.4}, {-1, 0.4}});
        case BodyKind::Hexagon: {
            std::vector<Point2> v;
            for (int i = 0; i < 6; ++i) {
                double a = M_PI * (2 * i + 1) / 6.0;
                v.push_back({std::cos(a), std::sin(a)});
            }
            return ConvexBody::polygon(v);
        }
        case BodyKind::RandomSymmetric: {
            // Half the vertices sampled, the other half exact negations:
            // symmetry holds to the last bit.
            for (int attempt = 0; attempt < 64; ++attempt) {
                int m = 2 + static_cast<int>(rng.uniform_int(4));
                std::vector<Point2> v;
                for (int i = 0; i < m; ++i) {
                    double a = rng.uniform(0, M_PI);
                    double r = rng.uniform(0.4, 1.2);
                    Point2 p{r * std::cos(a), r * std::sin(a)};
                    v.push_back(p);
                    v.push_back(-p);
                }
                std::vector<Point2> hull = convex_hull(v);
                if (hull.size() >= 4) return ConvexBody::polygon(hull);
            }
            throw GenerationExhaustedError("random symmetric body generation failed");
        }
        case BodyKind::Triangle:
            return ConvexBody::polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
        case BodyKind::RandomTriangle: {
            for (int attempt = 0; attempt < 64; ++attempt) {
                Point2 a = rng.in_disk(1.0), b = rng.in_disk(1.0), c = rng.in_disk(1.0);
                if (std::abs(orient(a, b, c)) > 0.35)
                    return ConvexBody::polygon({a, b, c});
            }
            throw GenerationExhaustedError("random triangle generation failed");
        }
    }
    throw InputError("unknown body kind");
}

struct GenSpec {
    ConvexBody body;
    std::vector<int> sizes;  // one per family, all >= 1
    double spread = 1.0;     // radius of the sampling disk for translates
};

// Deterministic per seed. The first translate anchors the instance; every
// later candidate is sampled in a disk of the given spread around the anchor
// and rejected while any cross pair exceeds gauge distance 2. Repeated
// rejection shrinks the sampling disk toward the anchor, which is feasible
// for every family by construction.
inline ColoredInstance generate_instance(uint64_t seed, const GenSpec& spec) {
    if (spec.sizes.size() < 2) throw InputError("need at least two families");
    for (int s : spec.sizes)
        if (s < 1) throw InputError("family sizes must be >= 1");
    Rng rng(seed);
    Gauge g = difference_gauge(spec.body);
    ColoredInstance inst;
    inst.generator = spec.body;
    for (size_t f = 0; f < spec.sizes.size(); ++f)
        inst.families.push_back(Family{static_cast<int>(f) + 1, {}});

    Point2 anchor = spec.spread == 0.0 ? Point2{0, 0} : rng.in_disk(spec.spread);
    inst.families[0].translates.push_back(anchor);

    constexpr int kAttemptsPerPoint = 200;
    constexpr int kShrinkRounds = 20;
    auto acceptable = [&](size_t f, Point2 cand, bool allow_dup) {
        // Staying within gauge distance 2 of the anchor keeps the anchor a
        // feasible fallback for every family (same-color pairs may still be
        // up to distance 4 apart).
        if (gauge_distance(g, anchor, cand) > 2.0) return false;
        for (size_t f2 = 0; f2 < inst.families.size(); ++f2) {
            for (Point2 t : inst.families[f2].translates) {
                if (f2 == f) {
                    if (!allow_dup && dist(t, cand) < 1e-9) return false;
                } else if (gauge_distance(g, t, cand) > 2.0) {
                    return false;
                }
            }
        }
        return true;
    };
    for (size_t f = 0; f < spec.sizes.size(); ++f) {
        int start = f == 0 ? 1 : 0;
        for (int i = start; i < spec.sizes[f]; ++i) {
            bool placed = false;
            double local_spread = spec.spread;
            for (int round = 0; round < kShrinkRounds && !placed; ++round) {
                for (int a = 0; a < kAttemptsPerPoint && !placed; ++a) {
                    Point2 cand = local_spread == 0.0
                                      ? anchor
                                      : anchor + rng.in_disk(local_spread);
                    if (acceptable(f, cand, local_spread == 0.0)) {
                        inst.families[f].translates.push_back(cand);
                        placed = true;
                    }
                }
                local_spread *= 0.5;
            }
            if (!placed && f != 0 && acceptable(f, anchor, false)) {
                inst.families[f].translates.push_back(anchor);
                placed = true;
            }
            if (!placed)
                throw GenerationExhaustedError("could not place translate " +
                                               std::to_string(i) + " of family " +
                                               std::to_string(f));
        }
    }
    return inst;
}

}  // namespace pierce
