#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pmetric/rational.hpp"

namespace pmetric {

enum class Relation { LE, LT };

/// sum_i coeffs[i] * x_i  (<= | <)  rhs, over a dense variable block.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LE;
    Rational rhs;
};

struct Feasibility {
    bool feasible = false;
    std::vector<Rational> witness;  // one value per variable when feasible
};

namespace detail {

inline bool is_constant(const LinearConstraint& c) {
    for (const auto& a : c.coeffs)
        if (a != 0) return false;
    return true;
}

inline bool constant_ok(const LinearConstraint& c) {
    return c.rel == Relation::LE ? c.rhs >= 0 : c.rhs > 0;
}

// Canonical scale: first nonzero coefficient becomes +/-1. Keeps only the
// strongest constraint per coefficient vector (smaller rhs, LT beats LE).
inline void prune(std::vector<LinearConstraint>& cs) {
    std::map<std::vector<Rational>, std::pair<Rational, Relation>> best;
    for (auto& c : cs) {
        Rational scale = 0;
        for (const auto& a : c.coeffs)
            if (a != 0) { scale = abs(a); break; }
        std::vector<Rational> key = c.coeffs;
        for (auto& a : key) a /= scale;
        Rational rhs = c.rhs / scale;
        auto it = best.find(key);
        if (it == best.end() || rhs < it->second.first ||
            (rhs == it->second.first && c.rel == Relation::LT))
            best[std::move(key)] = {rhs, c.rel};
    }
    std::vector<LinearConstraint> out;
    out.reserve(best.size());
    for (auto& [key, val] : best)
        out.push_back({key, val.second, val.first});
    cs = std::move(out);
}

struct ElimStep {
    bool infeasible = false;
    std::vector<LinearConstraint> stage;  // constraints that mentioned x_v
    std::vector<LinearConstraint> rest;   // the eliminated system
};

// One Fourier-Motzkin round: removes x_v, pairing each upper bound with each
// lower bound. A combined constraint is strict iff either parent is strict.
inline ElimStep eliminate_var(std::vector<LinearConstraint> cs, std::size_t v,
                              std::size_t nvars) {
    ElimStep out;
    std::vector<LinearConstraint> with_v;
    for (auto& c : cs) {
        if (is_constant(c)) {
            if (!constant_ok(c)) { out.infeasible = true; return out; }
            continue;
        }
        (c.coeffs[v] != 0 ? with_v : out.rest).push_back(std::move(c));
    }
    for (const auto& up : with_v) {
        if (up.coeffs[v] <= 0) continue;
        for (const auto& lo : with_v) {
            if (lo.coeffs[v] >= 0) continue;
            LinearConstraint c;
            c.coeffs.resize(nvars, Rational(0));
            Rational su = -lo.coeffs[v];  // > 0
            Rational sl = up.coeffs[v];   // > 0
            for (std::size_t i = 0; i < nvars; ++i)
                c.coeffs[i] = su * up.coeffs[i] + sl * lo.coeffs[i];
            c.rhs = su * up.rhs + sl * lo.rhs;
            c.rel = (up.rel == Relation::LT || lo.rel == Relation::LT) ? Relation::LT
                                                                       : Relation::LE;
            if (is_constant(c)) {
                if (!constant_ok(c)) { out.infeasible = true; return out; }
                continue;
            }
            out.rest.push_back(std::move(c));
        }
    }
    out.stage = std::move(with_v);
    prune(out.rest);
    return out;
}

}  // namespace detail

/// Exact feasibility of a mixed strict/non-strict rational system by
/// Fourier-Motzkin elimination. The witness comes from back-substitution:
/// midpoints of two-sided residual intervals, bound +/- 1 for one-sided ones.
inline Feasibility feasible(std::vector<LinearConstraint> constraints, std::size_t nvars) {
    for (auto& c : constraints) c.coeffs.resize(nvars, Rational(0));

    std::vector<std::vector<LinearConstraint>> stages(nvars);
    std::vector<LinearConstraint> current = std::move(constraints);
    for (std::size_t v = nvars; v-- > 0;) {
        auto step = detail::eliminate_var(std::move(current), v, nvars);
        if (step.infeasible) return {};
        stages[v] = std::move(step.stage);
        current = std::move(step.rest);
    }
    for (const auto& c : current)
        if (!detail::constant_ok(c)) return {};

    // Back-substitute from x_0 upward; stages[v] only mentions x_0..x_v.
    Feasibility out;
    out.feasible = true;
    out.witness.assign(nvars, Rational(0));
    for (std::size_t v = 0; v < nvars; ++v) {
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : stages[v]) {
            Rational rest = c.rhs;
            for (std::size_t u = 0; u < v; ++u) rest -= c.coeffs[u] * out.witness[u];
            Rational bound = rest / c.coeffs[v];
            if (c.coeffs[v] > 0) {
                if (!hi || bound < *hi || (bound == *hi && c.rel == Relation::LT)) {
                    hi = bound;
                    hi_strict = c.rel == Relation::LT;
                }
            } else {
                if (!lo || bound > *lo || (bound == *lo && c.rel == Relation::LT)) {
                    lo = bound;
                    lo_strict = c.rel == Relation::LT;
                }
            }
        }
        if (lo && hi) {
            if (*lo < *hi)
                out.witness[v] = (*lo + *hi) / 2;
            else if (*lo == *hi && !lo_strict && !hi_strict)
                out.witness[v] = *lo;
            else
                throw error("feasible: empty residual interval after elimination");
        } else if (lo) {
            out.witness[v] = *lo + 1;
        } else if (hi) {
            out.witness[v] = *hi - 1;
        }
    }
    return out;
}

/// Largest lower bound on x_v over the solution set, obtained by projecting
/// the system onto x_v. nullopt when x_v is unbounded below (or the system
/// is infeasible, which callers are expected to rule out).
inline std::optional<Rational> coordinate_minimum(std::vector<LinearConstraint> constraints,
                                                  std::size_t nvars, std::size_t v) {
    for (auto& c : constraints) c.coeffs.resize(nvars, Rational(0));
    for (std::size_t u = nvars; u-- > 0;) {
        if (u == v) continue;
        auto step = detail::eliminate_var(std::move(constraints), u, nvars);
        if (step.infeasible) return std::nullopt;
        constraints = std::move(step.rest);
    }
    std::optional<Rational> lo;
    for (const auto& c : constraints) {
        if (detail::is_constant(c)) continue;
        if (c.coeffs[v] < 0) {
            Rational bound = c.rhs / c.coeffs[v];
            if (!lo || bound > *lo) lo = bound;
        }
    }
    return lo;
}

/// Closed rational interval; empty when lo > hi.
struct Interval {
    Rational lo, hi;
    bool empty() const { return lo > hi; }
};

struct CoverResult {
    bool covered = false;
    std::optional<Rational> gap;  // a point of the target missed by the pieces
};

/// Does the union of the (closed) pieces contain [lo, hi]?
inline CoverResult interval_cover(const Rational& lo, const Rational& hi,
                                  std::vector<Interval> pieces) {
    if (lo > hi) throw error("interval_cover: degenerate target");
    std::erase_if(pieces, [](const Interval& iv) { return iv.empty(); });
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    bool start_covered = false;
    for (const auto& iv : pieces)
        if (iv.lo <= lo && lo <= iv.hi) { start_covered = true; break; }
    if (!start_covered) return {false, lo};

    Rational reach = lo;
    std::size_t i = 0;
    while (true) {
        while (i < pieces.size() && pieces[i].lo <= reach) {
            if (pieces[i].hi > reach) reach = pieces[i].hi;
            ++i;
        }
        if (reach >= hi) return {true, std::nullopt};
        // No piece starts at or before reach any more: a gap opens just after it.
        Rational next = hi;
        if (i < pieces.size() && pieces[i].lo < hi) next = pieces[i].lo;
        return {false, (reach + next) / 2};
    }
}

}  // namespace pmetric
