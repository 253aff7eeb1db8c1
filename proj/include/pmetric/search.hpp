#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pmetric/hyperconvexity.hpp"
#include "pmetric/space.hpp"

namespace pmetric {

enum class GeneratorFamily { WeightedMetric, Rejection };

struct GeneratorConfig {
    std::size_t n = 3;
    std::uint64_t seed = 0;
    std::uint64_t denom_bound = 1;     // denominators drawn from 1..denom_bound
    std::uint64_t max_value = 3;       // values lie in [0, max_value]
    GeneratorFamily family = GeneratorFamily::Rejection;
    std::size_t attempt_budget = 100000;  // draws before GenerationExhausted
};

struct generation_exhausted : error {
    using error::error;
};

namespace detail {

// mt19937_64 output is pinned by the standard; the modulo step keeps the
// whole pipeline bit-reproducible across platforms (std distributions are
// not).
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

inline Rational grid_value(std::mt19937_64& rng, const GeneratorConfig& cfg) {
    std::uint64_t q = 1 + bounded(rng, cfg.denom_bound);
    std::uint64_t num = bounded(rng, cfg.max_value * q + 1);
    return Rational(Integer(num), Integer(q));
}

inline std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

// Random pseudometric: symmetric nonnegative grid matrix closed under
// all-pairs shortest paths, zero diagonal.
inline Matrix random_pseudometric(std::mt19937_64& rng, const GeneratorConfig& cfg) {
    const std::size_t n = cfg.n;
    Matrix d(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = grid_value(rng, cfg);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

}  // namespace detail

/// One deterministic draw from the configured family, consuming the given
/// engine. Throws generation_exhausted when the rejection budget is spent.
inline PMetricSpace generate(std::mt19937_64& rng, const GeneratorConfig& cfg) {
    if (cfg.n == 0) throw error("generate: n must be at least 1");
    for (std::size_t attempt = 0; attempt < cfg.attempt_budget; ++attempt) {
        Matrix m(cfg.n, std::vector<Rational>(cfg.n, 0));
        if (cfg.family == GeneratorFamily::WeightedMetric) {
            // p = d + max(w_x, w_y) over a random pseudometric and weights.
            Matrix d = detail::random_pseudometric(rng, cfg);
            std::vector<Rational> w(cfg.n);
            for (auto& wi : w) wi = detail::grid_value(rng, cfg);
            for (std::size_t i = 0; i < cfg.n; ++i)
                for (std::size_t j = 0; j < cfg.n; ++j)
                    m[i][j] = d[i][j] + (w[i] > w[j] ? w[i] : w[j]);
        } else {
            for (std::size_t i = 0; i < cfg.n; ++i) {
                m[i][i] = detail::grid_value(rng, cfg);
                for (std::size_t j = i + 1; j < cfg.n; ++j)
                    m[i][j] = m[j][i] = detail::grid_value(rng, cfg);
            }
        }
        if (auto space = validate_pmetric(detail::default_labels(cfg.n), m)) return *space;
    }
    throw generation_exhausted("generate: rejection budget spent");
}

inline PMetricSpace generate(const GeneratorConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return generate(rng, cfg);
}

struct ClassifiedSpace {
    PMetricSpace space;
    ClassificationRecord record;
};

enum class MinePredicate {
    NodalNotAp,
    ApNotNodal,
    NonmetricWithMidpoint,
    PmHyperconvexMultipoint,
};

inline bool predicate_holds(MinePredicate pred, const ClassifiedSpace& cs) {
    switch (pred) {
        case MinePredicate::NodalNotAp:
            return cs.record.nodal.holds && !cs.record.ap.holds;
        case MinePredicate::ApNotNodal:
            return cs.record.ap.holds && !cs.record.nodal.holds;
        case MinePredicate::NonmetricWithMidpoint:
            return !cs.record.profile.is_metric && cs.record.midpoint.holds;
        case MinePredicate::PmHyperconvexMultipoint:
            return cs.record.pm.holds && cs.space.size() >= 2;
    }
    return false;
}

struct MineResult {
    std::optional<ClassifiedSpace> found;
    std::size_t instances_tried = 0;
};

/// Sequential seeded mining: classify generated spaces until the predicate
/// fires or the budget runs out.
inline MineResult mine(const GeneratorConfig& cfg, MinePredicate pred, std::size_t budget,
                       std::size_t guard = kDefaultSizeGuard) {
    if (budget == 0) throw error("mine: budget must be positive");
    std::mt19937_64 rng(cfg.seed);
    MineResult out;
    for (std::size_t i = 0; i < budget; ++i) {
        PMetricSpace space = generate(rng, cfg);
        ++out.instances_tried;
        ClassifiedSpace cs{space, classify(space, guard)};
        if (predicate_holds(pred, cs)) {
            out.found = std::move(cs);
            return out;
        }
    }
    return out;
}

struct AuditReport {
    std::size_t total = 0;
    std::size_t ap_only = 0;
    std::size_t nodal_only = 0;
    std::size_t both = 0;
    std::size_t neither = 0;
    std::vector<std::string> violations;  // nonempty only on a decider bug
};

/// Re-checks every cross-notion implication on each record and tallies the
/// classification patterns.
inline AuditReport audit(const std::vector<ClassifiedSpace>& dataset) {
    AuditReport rep;
    for (const auto& cs : dataset) {
        const auto& r = cs.record;
        ++rep.total;
        if (r.ap.holds && r.nodal.holds)
            ++rep.both;
        else if (r.ap.holds)
            ++rep.ap_only;
        else if (r.nodal.holds)
            ++rep.nodal_only;
        else
            ++rep.neither;

        auto flag = [&](const std::string& what) {
            rep.violations.push_back(what + " on a space of size " +
                                     std::to_string(cs.space.size()));
        };
        const bool multi = cs.space.size() >= 2;
        if (r.dm.holds && !(r.ap.holds && r.nodal.holds))
            flag("dm-hyperconvex without AP+nodal");
        if (r.pm.holds && !r.nodal.holds) flag("pm-hyperconvex without nodal");
        if (r.dmetric.holds && multi && !r.profile.is_metric)
            flag("D-hyperconvex non-metric multi-point space");
        if (r.midpoint.holds && multi && !r.profile.is_metric)
            flag("midpoint property on a non-metric space");
        if (r.profile.is_metric &&
            !(r.ap.holds == r.nodal.holds && r.nodal.holds == r.dm.holds &&
              r.dm.holds == r.dmetric.holds))
            flag("metric verdicts disagree");
    }
    return rep;
}

}  // namespace pmetric
