#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pmetric/fixtures.hpp"
#include "pmetric/hyperconvexity.hpp"
#include "pmetric/search.hpp"

using namespace pmetric;
using R = Rational;

namespace {

// A certificate must itself be a counterexample: admissible, positive radii,
// and no witness under the notion.
void check_certificate(const PMetricSpace& s, Notion notion, const BallFamily& fam) {
    CHECK(!admissibility_violation(s, fam).has_value());
    for (const auto& [u, r] : fam.entries) CHECK(r > 0);
    auto w = notion == Notion::AP ? ap_witnesses(s, fam) : nodal_witnesses(s, fam);
    CHECK(w.empty());
}

}  // namespace

TEST_CASE("two-point space is hyperconvex in both senses with distinct witnesses") {
    auto s = fixtures::two_point_asym();
    CHECK(decide_ap(s).holds);
    CHECK(decide_nodal(s).holds);

    BallFamily fam;
    fam.entries[0] = R(1);
    fam.entries[1] = R(1);
    CHECK(ap_witnesses(s, fam) == std::vector<std::size_t>{1});
    CHECK(nodal_witnesses(s, fam) == std::vector<std::size_t>{0});
}

TEST_CASE("three-point space that is nodal but not AP") {
    auto s = fixtures::nodal_not_ap_space();
    auto ap = decide_ap(s);
    CHECK(!ap.holds);
    REQUIRE(ap.certificate.has_value());
    check_certificate(s, Notion::AP, *ap.certificate);
    CHECK(decide_nodal(s).holds);

    BallFamily fam;
    fam.entries[1] = R(1);
    fam.entries[2] = R(1);
    CHECK(ap_witnesses(s, fam).empty());
    CHECK(nodal_witnesses(s, fam) == std::vector<std::size_t>{0});
}

TEST_CASE("three-point space that is AP but not nodal") {
    auto s = fixtures::ap_not_nodal_space();
    CHECK(decide_ap(s).holds);
    auto nodal = decide_nodal(s);
    CHECK(!nodal.holds);
    REQUIRE(nodal.certificate.has_value());
    check_certificate(s, Notion::Nodal, *nodal.certificate);

    BallFamily fam;
    fam.entries[0] = R(19);
    fam.entries[1] = R(10);
    fam.entries[2] = R(11);
    CHECK(ap_witnesses(s, fam) == std::vector<std::size_t>{1});
    CHECK(nodal_witnesses(s, fam).empty());
}

TEST_CASE("witness queries reject bad families") {
    auto s = fixtures::two_point_asym();
    CHECK_THROWS_AS(ap_witnesses(s, BallFamily{}), error);

    BallFamily tight;
    tight.entries[0] = R(1);
    tight.entries[1] = R(1) / 2;  // p(a,b)=2 > 3/2
    CHECK_THROWS_AS(ap_witnesses(s, tight), inadmissible_family);
    try {
        nodal_witnesses(s, tight);
        CHECK(false);
    } catch (const inadmissible_family& e) {
        CHECK(e.u == 0);
        CHECK(e.v == 1);
    }
}

TEST_CASE("one center per point suffices: multi-ball lists reduce to the minimum") {
    // Brute force over small grids: a list of balls with repeated centers has
    // a common witness iff the per-center minimum family has one.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 2 + trial % 2;
        cfg.seed = 9000 + trial;
        cfg.max_value = 3;
        auto s = generate(cfg);
        std::vector<std::pair<std::size_t, R>> balls;
        std::size_t count = 2 + rng() % 4;
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t c = rng() % s.size();
            R r = R(int(rng() % 13)) / 2;
            balls.emplace_back(c, r);
        }
        for (auto notion : {Notion::AP, Notion::Nodal}) {
            std::vector<std::size_t> direct;
            for (std::size_t x = 0; x < s.size(); ++x) {
                bool ok = true;
                for (const auto& [u, r] : balls)
                    if (detail::witness_threshold(s, notion, x, u) > r) {
                        ok = false;
                        break;
                    }
                if (ok) direct.push_back(x);
            }
            BallFamily fam;
            for (const auto& [u, r] : balls) {
                auto it = fam.entries.find(u);
                if (it == fam.entries.end() || r < it->second) fam.entries[u] = r;
            }
            std::vector<std::size_t> reduced;
            for (std::size_t x = 0; x < s.size(); ++x) {
                bool ok = true;
                for (const auto& [u, r] : fam.entries)
                    if (detail::witness_threshold(s, notion, x, u) > r) {
                        ok = false;
                        break;
                    }
                if (ok) reduced.push_back(x);
            }
            CHECK(direct == reduced);
        }
    }
}

TEST_CASE("deciders agree with the sampling oracle on random spaces") {
    for (int trial = 0; trial < 60; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 1 + trial % 3;
        cfg.seed = 4000 + trial;
        cfg.max_value = 3;
        cfg.denom_bound = 1 + trial % 2;
        cfg.family = (trial % 2) ? GeneratorFamily::WeightedMetric
                                 : GeneratorFamily::Rejection;
        auto s = generate(cfg);
        for (auto notion : {Notion::AP, Notion::Nodal}) {
            auto v = decide_hyperconvex(s, notion);
            CHECK(v.holds == oracle::decide_hyperconvex(s, notion));
            if (!v.holds) {
                REQUIRE(v.certificate.has_value());
                check_certificate(s, notion, *v.certificate);
            }
        }
    }
}

TEST_CASE("size guard") {
    auto s = chain(4);
    CHECK_THROWS_AS(decide_ap(s, 3), size_guard_exceeded);
    CHECK_THROWS_AS(classify(s, 3), size_guard_exceeded);
    CHECK(decide_ap(s, 4).holds);
}

TEST_CASE("midpoint property") {
    PMetricSpace single({"a"}, {{R(0)}});
    CHECK(midpoint_property(single).holds);

    // finite spaces only realize finitely many splits: the covering pieces
    // are single points by the triangle inequality, so any positive distance
    // leaves a gap
    PMetricSpace line({"a", "b", "c"},
                      {{R(0), R(1), R(2)}, {R(1), R(0), R(1)}, {R(2), R(1), R(0)}});
    auto lv = midpoint_property(line);
    CHECK(!lv.holds);
    REQUIRE(lv.violation.has_value());
    {
        auto [x, y, r] = *lv.violation;
        // the reported split really is uncovered
        bool covered = false;
        for (std::size_t z = 0; z < line.size(); ++z)
            if (line.p(x, z) <= r && line.p(z, y) <= line.p(x, y) - r) covered = true;
        CHECK(!covered);
    }

    PMetricSpace sparse({"a", "b"}, {{R(0), R(2)}, {R(2), R(0)}});
    auto v = midpoint_property(sparse);
    CHECK(!v.holds);
    REQUIRE(v.violation.has_value());
    CHECK(std::get<2>(*v.violation) == R(1));

    // any non-metric multi-point space fails: p(x,x) > 0 blocks the r = 0 split
    for (int trial = 0; trial < 60; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 2 + trial % 3;
        cfg.seed = 600 + trial;
        auto s = generate(cfg);
        if (!s.is_metric()) CHECK(!midpoint_property(s).holds);
    }
}

TEST_CASE("find_between") {
    PMetricSpace line({"a", "b", "c"},
                      {{R(0), R(1), R(2)}, {R(1), R(0), R(1)}, {R(2), R(1), R(0)}});
    auto z = find_between(line, 0, 2, R(1), R(1), BetweenMode::P);
    REQUIRE(z.has_value());
    CHECK(*z == 1);
    CHECK(!find_between(line, 0, 2, R(1) / 2, R(3) / 2, BetweenMode::P).has_value());
    CHECK_THROWS_AS(find_between(line, 0, 2, R(1), R(2), BetweenMode::P), error);
    CHECK_THROWS_AS(find_between(line, 0, 1, R(-1), R(2), BetweenMode::P), error);

    auto s = fixtures::two_point_asym();
    // d_m(a,b) = 2; the only candidates sit at the endpoints
    CHECK(find_between(s, 0, 1, R(0), R(2), BetweenMode::DM).has_value());
    CHECK(!find_between(s, 0, 1, R(1), R(1), BetweenMode::DM).has_value());
}

TEST_CASE("total convexity") {
    PMetricSpace single({"a"}, {{R(0)}});
    CHECK(totally_convex(single, BetweenMode::P).holds);
    CHECK(totally_convex(single, BetweenMode::DM).holds);

    auto s = fixtures::nodal_not_ap_space();
    auto v = totally_convex(s, BetweenMode::P);
    CHECK(!v.holds);

    PMetricSpace two({"a", "b"}, {{R(0), R(2)}, {R(2), R(0)}});
    auto w = totally_convex(two, BetweenMode::DM);
    CHECK(!w.holds);
    REQUIRE(w.violation.has_value());
    CHECK(std::get<2>(*w.violation) == R(1));
}

TEST_CASE("classification records stay consistent on random spaces") {
    for (int trial = 0; trial < 120; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 1 + trial % 4;
        cfg.seed = 12000 + trial;
        cfg.max_value = 3;
        cfg.denom_bound = 1 + trial % 2;
        cfg.family = (trial % 2) ? GeneratorFamily::WeightedMetric
                                 : GeneratorFamily::Rejection;
        auto s = generate(cfg);
        CHECK_NOTHROW(classify(s));
    }

    auto rec = classify(fixtures::two_point_asym());
    CHECK(rec.ap.holds);
    CHECK(rec.nodal.holds);
    CHECK(!rec.pm.holds);
    CHECK(!rec.dm.holds);
    CHECK(!rec.dmetric.holds);
    CHECK(!rec.midpoint.holds);
}
