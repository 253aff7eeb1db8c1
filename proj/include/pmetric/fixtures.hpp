#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pmetric/constructions.hpp"
#include "pmetric/hyperconvexity.hpp"
#include "pmetric/lipschitz.hpp"
#include "pmetric/space.hpp"

namespace pmetric::fixtures {

/// Two points with sizes 2 and 0 at distance 2. AP- and nodally hyperconvex,
/// with different witnesses for the family {a: 1, b: 1}.
inline PMetricSpace two_point_asym() {
    using R = Rational;
    return PMetricSpace({"a", "b"}, {{R(2), R(2)}, {R(2), R(0)}});
}

/// Three points, sizes (3, 0, 0): nodally hyperconvex (a absorbs every
/// family) but not AP-hyperconvex (balls of radius 1 around b and c).
inline PMetricSpace nodal_not_ap_space() {
    using R = Rational;
    return PMetricSpace({"a", "b", "c"},
                        {{R(3), R(3), R(3)}, {R(3), R(0), R(2)}, {R(3), R(2), R(0)}});
}

/// Three points, sizes (10, 0, 10): AP-hyperconvex (b reaches every center)
/// but not nodally hyperconvex (radii 19, 10, 11).
inline PMetricSpace ap_not_nodal_space() {
    using R = Rational;
    return PMetricSpace({"a", "b", "c"}, {{R(10), R(15), R(30)},
                                          {R(15), R(0), R(15)},
                                          {R(30), R(15), R(10)}});
}

/// Two points of size 2 at distance 3; the swap map is a fixed-point-free
/// isometry.
inline PMetricSpace swap_isometry_space() {
    using R = Rational;
    return PMetricSpace({"a", "b"}, {{R(2), R(3)}, {R(3), R(2)}});
}

/// {1, 2} under p(x,y) = 1 + |x - y|.
inline PMetricSpace shifted_line_sample() {
    using R = Rational;
    return PMetricSpace({"1", "2"}, {{R(1), R(2)}, {R(2), R(1)}});
}

struct FixtureResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

namespace detail {

inline std::string onoff(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Built-in regression cases over the canonical example spaces; exercised by
/// the CLI `report` subcommand and the test suite.
inline std::vector<FixtureResult> run_fixtures(std::size_t guard = kDefaultSizeGuard) {
    using R = Rational;
    std::vector<FixtureResult> out;
    auto add = [&](const std::string& name, const std::string& expected,
                   const std::string& actual) {
        out.push_back({name, expected, actual, expected == actual});
    };

    {
        auto s = two_point_asym();
        auto rec = classify(s, guard);
        add("two-point ap/nodal/pm/dm", "true/true/false/false",
            detail::onoff(rec.ap.holds) + "/" + detail::onoff(rec.nodal.holds) + "/" +
                detail::onoff(rec.pm.holds) + "/" + detail::onoff(rec.dm.holds));

        BallFamily fam;
        fam.entries[0] = R(1);
        fam.entries[1] = R(1);
        auto aw = ap_witnesses(s, fam);
        auto nw = nodal_witnesses(s, fam);
        std::string got;
        for (auto w : aw) got += s.label(w);
        got += "|";
        for (auto w : nw) got += s.label(w);
        add("two-point family {a:1,b:1} witnesses ap|nodal", "b|a", got);
    }
    {
        auto s = nodal_not_ap_space();
        auto rec = classify(s, guard);
        add("nodal-not-ap ap/nodal", "false/true",
            detail::onoff(rec.ap.holds) + "/" + detail::onoff(rec.nodal.holds));
        BallFamily fam;
        fam.entries[1] = R(1);
        fam.entries[2] = R(1);
        add("nodal-not-ap family {b:1,c:1} ap witness count", "0",
            std::to_string(ap_witnesses(s, fam).size()));
    }
    {
        auto s = ap_not_nodal_space();
        auto rec = classify(s, guard);
        add("ap-not-nodal ap/nodal", "true/false",
            detail::onoff(rec.ap.holds) + "/" + detail::onoff(rec.nodal.holds));
        BallFamily fam;
        fam.entries[0] = R(19);
        fam.entries[1] = R(10);
        fam.entries[2] = R(11);
        add("ap-not-nodal family {a:19,b:10,c:11} nodal witness count", "0",
            std::to_string(nodal_witnesses(s, fam).size()));
        auto cb = constant_map_report(s, 1);
        auto ca = constant_map_report(s, 0);
        add("constant maps vs bottom set (b then a)", "in+holds|out+fails",
            std::string(cb.in_bottom_set && cb.ipr_at_zero ? "in+holds" : "?") + "|" +
                std::string(!ca.in_bottom_set && !ca.ipr_at_zero ? "out+fails" : "?"));
    }
    {
        auto s = shifted_line_sample();
        auto ball = closed_ball(derive_metric(s, DerivedKind::D), 0, R(1));
        add("shifted line: D-ball around 1 of radius 1", "1",
            ball.size() == 1 ? s.label(ball[0]) : "bigger");
        auto v = decide_derived(s, DerivedKind::D, guard);
        add("shifted line: D-hyperconvex", "false", detail::onoff(v.holds));
    }
    {
        std::string got;
        got += tripod_dm_gap(R(1) / 2) ? "witness" : "empty";
        got += "|";
        got += tripod_dm_gap(R(1)) ? "witness" : "empty";
        add("tripod radii 1/2 | 1", "empty|witness", got);
    }
    {
        auto s = swap_isometry_space();
        SelfMap f;
        f.image = {1, 0};
        std::string got;
        for (auto notion :
             {LipschitzNotion::Matthews, LipschitzNotion::IPR, LipschitzNotion::L1}) {
            auto rep = minimal_L(s, f, notion);
            got += rep.minimal_L ? to_string(*rep.minimal_L) : "none";
            got += "/";
        }
        got += std::to_string(fixed_points(s, f).size());
        add("swap isometry minimal L (matthews/ipr/l1) and fixed points", "1/1/1/0", got);
    }
    {
        // Matthews pmetric over {0, 1} in the line: the constant map to 1 has
        // no Matthews constant but satisfies the size-aware inequality.
        auto s = norm_pmetric({{R(0)}, {R(1)}}, NormKind::L1);
        SelfMap f = SelfMap::constant(2, 1);
        auto matthews = minimal_L(s, f, LipschitzNotion::Matthews);
        auto l1 = minimal_L(s, f, LipschitzNotion::L1);
        bool l1_probes = check_lipschitz(s, f, LipschitzNotion::L1, R(1) / 10).holds &&
                         check_lipschitz(s, f, LipschitzNotion::L1, R(1)).holds &&
                         check_lipschitz(s, f, LipschitzNotion::L1, R(10)).holds;
        add("constant map on {0,1} sample: matthews none, size-aware holds",
            "none|holds",
            std::string(matthews.minimal_L ? "some" : "none") + "|" +
                std::string(l1.minimal_L && l1_probes ? "holds" : "fails"));
    }
    return out;
}

}  // namespace pmetric::fixtures
