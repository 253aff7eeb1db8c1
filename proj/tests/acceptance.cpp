// End-to-end acceptance suite: one PASS/FAIL line per criterion, exit status
// reflects the overall outcome. Everything is decided in exact rational
// arithmetic; the timed criteria also enforce their wall-clock budgets.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "pmetric/constructions.hpp"
#include "pmetric/fixtures.hpp"
#include "pmetric/hyperconvexity.hpp"
#include "pmetric/lipschitz.hpp"
#include "pmetric/search.hpp"
#include "pmetric/space.hpp"

using namespace pmetric;
using R = Rational;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool genuine_certificate(const PMetricSpace& s, Notion notion, const BallFamily& fam) {
    if (admissibility_violation(s, fam)) return false;
    for (const auto& [u, r] : fam.entries)
        if (r <= 0) return false;
    auto w = notion == Notion::AP ? ap_witnesses(s, fam) : nodal_witnesses(s, fam);
    return w.empty();
}

// Shared corpus for the property-based criteria: n cycles through 1..4,
// both generator families, small grids with denominators 1 and 2.
std::vector<ClassifiedSpace> build_corpus(std::size_t count) {
    std::vector<ClassifiedSpace> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        GeneratorConfig cfg;
        cfg.n = 1 + i % 4;
        cfg.seed = 100000 + i;
        cfg.max_value = 3;
        cfg.denom_bound = 1 + i % 2;
        cfg.family =
            (i % 2) ? GeneratorFamily::WeightedMetric : GeneratorFamily::Rejection;
        auto s = generate(cfg);
        out.push_back({s, classify(s)});
    }
    return out;
}

void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;

    {
        auto s = fixtures::two_point_asym();
        auto rec = classify(s);
        ok = ok && rec.ap.holds && rec.nodal.holds && !rec.pm.holds && !rec.dm.holds;
    }
    {
        auto s = fixtures::nodal_not_ap_space();
        auto rec = classify(s);
        ok = ok && !rec.ap.holds && rec.nodal.holds;
        ok = ok && rec.ap.certificate &&
             genuine_certificate(s, Notion::AP, *rec.ap.certificate);
        // the textbook counterexample: unit balls around b and c
        BallFamily unit;
        unit.entries[1] = R(1);
        unit.entries[2] = R(1);
        ok = ok && genuine_certificate(s, Notion::AP, unit);
    }
    {
        auto s = fixtures::ap_not_nodal_space();
        auto rec = classify(s);
        ok = ok && rec.ap.holds && !rec.nodal.holds;
        ok = ok && rec.nodal.certificate &&
             genuine_certificate(s, Notion::Nodal, *rec.nodal.certificate);
        BallFamily trio;
        trio.entries[0] = R(19);
        trio.entries[1] = R(10);
        trio.entries[2] = R(11);
        ok = ok && genuine_certificate(s, Notion::Nodal, trio);
    }
    ok = ok && seconds_since(t0) < 3.0;  // three classifications, < 1 s each
    report(1, "canonical three-space classification with genuine certificates", ok);
}

void criterion_2() {
    bool ok = true;
    {
        auto s = fixtures::two_point_asym();
        BallFamily fam;
        fam.entries[0] = R(1);
        fam.entries[1] = R(1);
        ok = ok && ap_witnesses(s, fam) == std::vector<std::size_t>{1};
        ok = ok && nodal_witnesses(s, fam) == std::vector<std::size_t>{0};
    }
    {
        auto s = fixtures::nodal_not_ap_space();
        BallFamily fam;
        fam.entries[1] = R(1);
        fam.entries[2] = R(1);
        ok = ok && ap_witnesses(s, fam).empty();
    }
    {
        auto s = fixtures::ap_not_nodal_space();
        BallFamily fam;
        fam.entries[0] = R(19);
        fam.entries[1] = R(10);
        fam.entries[2] = R(11);
        ok = ok && nodal_witnesses(s, fam).empty();
    }
    report(2, "witness sets on the canonical ball families", ok);
}

void criterion_3_and_4(const std::vector<ClassifiedSpace>& corpus, double build_secs) {
    bool ok3 = build_secs < 300.0;
    for (const auto& cs : corpus) {
        if (cs.space.size() < 2) continue;
        if (!cs.record.profile.is_metric && cs.record.midpoint.holds) ok3 = false;
        if (cs.record.dmetric.holds && !cs.record.profile.is_metric) ok3 = false;
    }
    report(3, "10,000-space corpus: midpoint property and D-hyperconvexity force a metric",
           ok3);

    auto rep = audit(corpus);
    report(4, "implication audit over the corpus reports zero violations",
           rep.total == corpus.size() && rep.violations.empty());
}

void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;
    for (std::size_t i = 0; i < 1000; ++i) {
        GeneratorConfig cfg;
        cfg.n = 1 + i % 3;
        cfg.seed = 400000 + i;
        cfg.max_value = 3;
        cfg.denom_bound = 1 + i % 2;
        cfg.family =
            (i % 2) ? GeneratorFamily::WeightedMetric : GeneratorFamily::Rejection;
        auto s = generate(cfg);
        bool ap_before = decide_ap(s).holds;
        auto ext = extend(s);
        auto rec = classify(ext);
        if (!rec.nodal.holds) ok = false;
        if (ap_before && !rec.ap.holds) ok = false;
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        auto rec = classify(chain(n));
        if (!rec.ap.holds || !rec.nodal.holds) ok = false;
    }
    ok = ok && seconds_since(t0) < 300.0;
    report(5, "1,000 extensions stay nodal (and AP when the input was); chains are both",
           ok);
}

void criterion_6() {
    std::mt19937_64 rng(606);
    auto coord = [&] { return R(int(rng() % 9)) / 2 - 2; };
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t dim = 1 + rng() % 3;
        std::vector<Vec> pts = {Vec(dim, R(0))};
        std::size_t extra = 1 + rng() % 4;
        for (std::size_t i = 0; i < extra; ++i) {
            Vec v(dim);
            for (auto& c : v) c = coord();
            bool dup = false;
            for (const auto& q : pts)
                if (q == v) dup = true;
            if (!dup) pts.push_back(std::move(v));
        }
        auto s = norm_pmetric(pts, (trial % 2) ? NormKind::L1 : NormKind::LINF);
        BallFamily fam;
        std::size_t centers = 1 + rng() % s.size();
        for (std::size_t c = 0; c < centers; ++c) {
            std::size_t u = rng() % s.size();
            R rad = 0;
            for (std::size_t v = 0; v < s.size(); ++v)
                if (s.p(u, v) > rad) rad = s.p(u, v);
            fam.entries[u] = rad / 2 + R(int(rng() % 3)) / 2;
        }
        auto w = ap_witnesses(s, fam);
        if (std::find(w.begin(), w.end(), 0) == w.end()) ok = false;
    }
    report(6, "origin witnesses 1,000 admissible families on normed-space samples", ok);
}

void criterion_7() {
    bool ok = true;
    // pairwise tip distance is exactly 1 in d_m
    std::vector<Vec> tips = {{R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}};
    auto s = norm_pmetric(tips, NormKind::L1);
    auto dm = derive_metric(s, DerivedKind::DM);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j && dm.p(i, j) != R(1)) ok = false;

    ok = ok && !tripod_dm_gap(R(1) / 2).has_value();
    auto hit = tripod_dm_gap(R(1));
    ok = ok && hit.has_value();
    if (hit)
        for (int target = 1; target <= 3; ++target)
            if (tripod_arm_dm(hit->arm, target)[0].at(hit->parameter) > R(1)) ok = false;

    // arm identity: the first-arm point against the second tip is the
    // constant 1 on the whole parameter range, checked piece by piece
    for (const auto& piece : tripod_arm_dm(1, 2)) {
        if (piece.slope != 0 || piece.intercept != 1) ok = false;
        if (piece.at(piece.lo) != R(1) || piece.at(piece.hi) != R(1)) ok = false;
        if (piece.at((piece.lo + piece.hi) / 2) != R(1)) ok = false;
    }
    // and the symbolic pieces agree with a sampled model at quarter steps
    for (int num = 0; num <= 4; ++num) {
        R t = R(num) / 4;
        std::vector<Vec> sample = {{t, R(0), R(0)}, {R(0), R(1), R(0)}};
        auto m = derive_metric(norm_pmetric(sample, NormKind::L1), DerivedKind::DM);
        if (m.p(0, 1) != tripod_arm_dm(1, 2)[0].at(t)) ok = false;
    }
    report(7, "tripod: unit tip distances, gap threshold at radius 1, arm identity", ok);
}

void criterion_8() {
    bool ok = true;
    {
        auto s = fixtures::swap_isometry_space();
        SelfMap f;
        f.image = {1, 0};
        for (auto notion :
             {LipschitzNotion::Matthews, LipschitzNotion::IPR, LipschitzNotion::L1}) {
            auto rep = minimal_L(s, f, notion);
            if (!rep.minimal_L || *rep.minimal_L != R(1)) ok = false;
        }
        if (!fixed_points(s, f).empty()) ok = false;
    }
    {
        auto s = norm_pmetric({{R(0)}, {R(1)}}, NormKind::L1);
        SelfMap f = SelfMap::constant(2, 1);
        if (minimal_L(s, f, LipschitzNotion::Matthews).minimal_L) ok = false;
        for (const R& L : {R(1) / 10, R(1), R(10)})
            if (!check_lipschitz(s, f, LipschitzNotion::L1, L).holds) ok = false;
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; pairs < 10000; ++i) {
        GeneratorConfig cfg;
        cfg.n = 1 + i % 4;
        cfg.seed = 800000 + i;
        cfg.max_value = 3;
        cfg.denom_bound = 1 + i % 2;
        cfg.family =
            (i % 2) ? GeneratorFamily::WeightedMetric : GeneratorFamily::Rejection;
        auto s = generate(cfg);
        for (std::size_t c = 0; c < s.size() && pairs < 10000; ++c, ++pairs)
            if (!constant_map_report(s, c).equivalence_holds) ok = false;
    }
    report(8, "Lipschitz suite: swap isometry, constant maps, 10,000 bottom-set pairs",
           ok);
}

void criterion_9() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 3;
        cfg.seed = 900000 + trial;
        cfg.max_value = 3;
        cfg.denom_bound = 1 + trial % 2;
        cfg.family =
            (trial % 2) ? GeneratorFamily::WeightedMetric : GeneratorFamily::Rejection;
        auto s = generate(cfg);
        for (auto notion : {Notion::AP, Notion::Nodal}) {
            auto v = decide_hyperconvex(s, notion);
            if (v.holds != oracle::decide_hyperconvex(s, notion)) ok = false;
            if (!v.holds &&
                !(v.certificate && genuine_certificate(s, notion, *v.certificate)))
                ok = false;
        }
    }
    ok = ok && seconds_since(t0) < 600.0;
    report(9, "deciders agree with the brute-force oracle on 500 three-point spaces", ok);
}

void criterion_10() {
    bool ok = true;
    // documented reproduction seed: 20250824
    {
        GeneratorConfig cfg;
        cfg.n = 3;
        cfg.seed = 20250824;
        cfg.max_value = 3;
        cfg.denom_bound = 1;
        cfg.family = GeneratorFamily::Rejection;
        auto res = mine(cfg, MinePredicate::NodalNotAp, 1000000);
        if (!res.found || !res.found->record.nodal.holds || res.found->record.ap.holds)
            ok = false;
    }
    {
        GeneratorConfig cfg;
        cfg.n = 3;
        cfg.seed = 20250824;
        cfg.max_value = 6;
        cfg.denom_bound = 1;
        cfg.family = GeneratorFamily::Rejection;
        auto res = mine(cfg, MinePredicate::ApNotNodal, 1000000);
        if (!res.found || !res.found->record.ap.holds || res.found->record.nodal.holds)
            ok = false;
    }
    report(10, "mining with seed 20250824 separates the notions in both directions", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    auto t0 = Clock::now();
    auto corpus = build_corpus(10000);
    criterion_3_and_4(corpus, seconds_since(t0));
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
