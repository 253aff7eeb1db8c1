#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pmetric/feasibility.hpp"
#include "pmetric/space.hpp"

namespace pmetric {

inline constexpr std::size_t kDefaultSizeGuard = 6;

struct size_guard_exceeded : error {
    using error::error;
};

struct internal_inconsistency : error {
    using error::error;
};

/// One closed ball per center; admissible when p(u,v) <= r_u + r_v for all
/// centers u, v (u = v included, i.e. p(u,u) <= 2 r_u).
struct BallFamily {
    std::map<std::size_t, Rational> entries;  // center index -> radius
};

struct inadmissible_family : error {
    std::size_t u, v;
    inadmissible_family(std::size_t u_, std::size_t v_)
        : error("inadmissible ball family"), u(u_), v(v_) {}
};

inline std::optional<std::pair<std::size_t, std::size_t>> admissibility_violation(
    const PMetricSpace& s, const BallFamily& fam) {
    for (const auto& [u, ru] : fam.entries) {
        if (ru < 0) return std::make_pair(u, u);
        for (const auto& [v, rv] : fam.entries)
            if (s.p(u, v) > ru + rv) return std::make_pair(u, v);
    }
    return std::nullopt;
}

enum class Notion { AP, Nodal };

namespace detail {

// Witness slack: x witnesses radius vector r iff r_u >= threshold(x, u) for
// every center u. AP measures from the center's size, nodal from the
// candidate's own size.
inline Rational witness_threshold(const PMetricSpace& s, Notion notion, std::size_t x,
                                  std::size_t u) {
    if (notion == Notion::AP) return s.p(x, u) - s.p(u, u);
    return s.p(x, u) - s.p(x, x);
}

}  // namespace detail

/// Points x with p(x,u) <= p(u,u) + r_u for every center u.
inline std::vector<std::size_t> ap_witnesses(const PMetricSpace& s, const BallFamily& fam) {
    if (fam.entries.empty()) throw error("empty ball family");
    if (auto bad = admissibility_violation(s, fam))
        throw inadmissible_family(bad->first, bad->second);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < s.size(); ++x) {
        bool ok = true;
        for (const auto& [u, ru] : fam.entries)
            if (s.p(x, u) > s.p(u, u) + ru) { ok = false; break; }
        if (ok) out.push_back(x);
    }
    return out;
}

/// Points x with p(x,u) <= p(x,x) + r_u for every center u.
inline std::vector<std::size_t> nodal_witnesses(const PMetricSpace& s,
                                                const BallFamily& fam) {
    if (fam.entries.empty()) throw error("empty ball family");
    if (auto bad = admissibility_violation(s, fam))
        throw inadmissible_family(bad->first, bad->second);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < s.size(); ++x) {
        bool ok = true;
        for (const auto& [u, ru] : fam.entries)
            if (s.p(x, u) > s.p(x, x) + ru) { ok = false; break; }
        if (ok) out.push_back(x);
    }
    return out;
}

struct HyperconvexityVerdict {
    bool holds = false;
    std::optional<BallFamily> certificate;  // admissible family with no witness
};

namespace detail {

// Admissibility polytope over the centers S, with strictly positive radii
// (a violating family never needs a zero radius: the center itself would
// witness that ball).
inline std::vector<LinearConstraint> admissibility_polytope(const PMetricSpace& s,
                                                            const std::vector<std::size_t>& centers) {
    const std::size_t k = centers.size();
    std::vector<LinearConstraint> cs;
    for (std::size_t a = 0; a < k; ++a) {
        LinearConstraint pos;
        pos.coeffs.assign(k, Rational(0));
        pos.coeffs[a] = -1;
        pos.rel = Relation::LT;
        pos.rhs = 0;
        cs.push_back(std::move(pos));

        LinearConstraint self;
        self.coeffs.assign(k, Rational(0));
        self.coeffs[a] = -2;
        self.rhs = -s.p(centers[a], centers[a]);
        cs.push_back(std::move(self));

        for (std::size_t b = a + 1; b < k; ++b) {
            LinearConstraint pair;
            pair.coeffs.assign(k, Rational(0));
            pair.coeffs[a] = -1;
            pair.coeffs[b] = -1;
            pair.rhs = -s.p(centers[a], centers[b]);
            cs.push_back(std::move(pair));
        }
    }
    return cs;
}

struct ViolationSearch {
    const PMetricSpace& space;
    Notion notion;
    std::vector<std::size_t> centers;
    std::vector<std::vector<Rational>> thresh;  // thresh[x][a] for center slot a
    std::vector<Rational> coord_min;            // per-slot minimum over the polytope
    std::vector<std::optional<Rational>> cap;   // current strict upper bound per slot
    std::optional<BallFamily> found;

    // Cheap pruning: the all-but-sup point maximizes every coordinate, so the
    // capped polytope is nonempty iff every cap clears its coordinate minimum
    // and every capped pair clears its distance. The final FM run re-decides
    // exactly and supplies the witness radii.
    bool caps_viable() const {
        const std::size_t k = centers.size();
        for (std::size_t a = 0; a < k; ++a) {
            if (!cap[a]) continue;
            if (*cap[a] <= coord_min[a]) return false;
            for (std::size_t b = a + 1; b < k; ++b)
                if (cap[b] && *cap[a] + *cap[b] <= space.p(centers[a], centers[b]))
                    return false;
        }
        return true;
    }

    bool assign(std::size_t x) {
        if (x == space.size()) return finish();
        for (std::size_t a = 0; a < centers.size(); ++a) {
            const Rational& c = thresh[x][a];
            if (c <= 0) continue;  // r_a < c would force a non-positive radius
            std::optional<Rational> saved = cap[a];
            if (!cap[a] || c < *cap[a]) cap[a] = c;
            if (caps_viable() && assign(x + 1)) return true;
            cap[a] = saved;
        }
        return false;
    }

    bool finish() {
        const std::size_t k = centers.size();
        auto cs = admissibility_polytope(space, centers);
        for (std::size_t a = 0; a < k; ++a) {
            if (!cap[a]) continue;
            LinearConstraint up;
            up.coeffs.assign(k, Rational(0));
            up.coeffs[a] = 1;
            up.rel = Relation::LT;
            up.rhs = *cap[a];
            cs.push_back(std::move(up));
        }
        auto fz = feasible(std::move(cs), k);
        if (!fz.feasible) return false;
        BallFamily fam;
        for (std::size_t a = 0; a < k; ++a) fam.entries[centers[a]] = fz.witness[a];
        found = std::move(fam);
        return true;
    }
};

// Nonempty subsets ordered by size, then lexicographically by elements.
inline std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace detail

/// Universal quantification over admissible families is decided through its
/// complement: for each center set S and each assignment of a violated ball
/// to every point of U, test the strict system with Fourier-Motzkin. The
/// first feasible system (subsets by size then lexicographic, assignments
/// lexicographic) yields the certificate.
inline HyperconvexityVerdict decide_hyperconvex(const PMetricSpace& s, Notion notion,
                                                std::size_t guard = kDefaultSizeGuard) {
    const std::size_t n = s.size();
    if (n > guard) throw size_guard_exceeded("space exceeds the size guard");

    for (const auto& centers : detail::subsets_by_size(n)) {
        const std::size_t k = centers.size();
        auto polytope = detail::admissibility_polytope(s, centers);

        std::vector<Rational> coord_min(k);
        for (std::size_t a = 0; a < k; ++a) {
            auto m = coordinate_minimum(polytope, k, a);
            coord_min[a] = m ? *m : Rational(0);
        }

        std::vector<std::vector<Rational>> thresh(n, std::vector<Rational>(k));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t a = 0; a < k; ++a)
                thresh[x][a] = detail::witness_threshold(s, notion, x, centers[a]);

        // Fast path: a point whose thresholds sit at or below the per-slot
        // minima witnesses every admissible family over these centers.
        bool dominated = false;
        for (std::size_t x = 0; x < n && !dominated; ++x) {
            bool all = true;
            for (std::size_t a = 0; a < k; ++a)
                if (thresh[x][a] > coord_min[a]) { all = false; break; }
            dominated = all;
        }
        if (dominated) continue;

        detail::ViolationSearch search{s, notion, centers, std::move(thresh),
                                       std::move(coord_min),
                                       std::vector<std::optional<Rational>>(k),
                                       std::nullopt};
        if (search.assign(0)) return {false, std::move(search.found)};
    }
    return {true, std::nullopt};
}

inline HyperconvexityVerdict decide_ap(const PMetricSpace& s,
                                       std::size_t guard = kDefaultSizeGuard) {
    return decide_hyperconvex(s, Notion::AP, guard);
}

inline HyperconvexityVerdict decide_nodal(const PMetricSpace& s,
                                          std::size_t guard = kDefaultSizeGuard) {
    return decide_hyperconvex(s, Notion::Nodal, guard);
}

/// Classical hyperconvexity of the associated metric space. On a metric the
/// AP and nodal conditions coincide, so the AP decider settles it.
inline HyperconvexityVerdict decide_derived(const PMetricSpace& s, DerivedKind kind,
                                            std::size_t guard = kDefaultSizeGuard) {
    if (s.size() > guard) throw size_guard_exceeded("space exceeds the size guard");
    return decide_ap(derive_metric(s, kind), guard);
}

struct MidpointVerdict {
    bool holds = false;
    // An uncovered split: balls of radii r and p(x,y) - r around x and y
    // share no point in the plain-p sense.
    std::optional<std::tuple<std::size_t, std::size_t, Rational>> violation;
};

/// For every ordered pair, every split r + R = p(x,y) must be realized by
/// some z with p(x,z) <= r and p(z,y) <= R; equivalently [0, p(x,y)] is
/// covered by the intervals [p(x,z), p(x,y) - p(z,y)].
inline MidpointVerdict midpoint_property(const PMetricSpace& s) {
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y) {
            std::vector<Interval> pieces;
            for (std::size_t z = 0; z < s.size(); ++z)
                pieces.push_back({s.p(x, z), s.p(x, y) - s.p(z, y)});
            auto cover = interval_cover(Rational(0), s.p(x, y), std::move(pieces));
            if (!cover.covered) return {false, std::make_tuple(x, y, *cover.gap)};
        }
    return {true, std::nullopt};
}

enum class BetweenMode { P, PM, DM };

namespace detail {

inline Rational mode_distance(const PMetricSpace& s, BetweenMode mode, std::size_t x,
                              std::size_t y) {
    switch (mode) {
        case BetweenMode::P:
            return s.p(x, y);
        case BetweenMode::PM:
            return x == y ? Rational(0) : 2 * s.p(x, y) - s.p(x, x) - s.p(y, y);
        case BetweenMode::DM: {
            if (x == y) return Rational(0);
            Rational a = s.p(x, y) - s.p(x, x);
            Rational b = s.p(x, y) - s.p(y, y);
            return a > b ? a : b;
        }
    }
    return Rational(0);
}

}  // namespace detail

/// A point z with dist(x,z) = lambda and dist(z,y) = mu, if one exists.
/// Requires lambda + mu = dist(x,y).
inline std::optional<std::size_t> find_between(const PMetricSpace& s, std::size_t x,
                                               std::size_t y, const Rational& lambda,
                                               const Rational& mu, BetweenMode mode) {
    if (lambda < 0 || mu < 0) throw error("find_between: negative part");
    if (lambda + mu != detail::mode_distance(s, mode, x, y))
        throw error("find_between: parts do not sum to the distance");
    for (std::size_t z = 0; z < s.size(); ++z)
        if (detail::mode_distance(s, mode, x, z) == lambda &&
            detail::mode_distance(s, mode, z, y) == mu)
            return z;
    return std::nullopt;
}

struct TotalConvexityVerdict {
    bool holds = false;
    std::optional<std::tuple<std::size_t, std::size_t, Rational>> violation;  // (x, y, lambda)
};

/// Menger convexity: every split of every distance must be realized exactly.
/// The achievable splits form a finite set, so a pair at positive distance
/// always leaves a gap; the reported lambda lies strictly between two
/// consecutive achievable values.
inline TotalConvexityVerdict totally_convex(const PMetricSpace& s, BetweenMode mode) {
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y) {
            Rational d = detail::mode_distance(s, mode, x, y);
            std::vector<Rational> achievable;
            for (std::size_t z = 0; z < s.size(); ++z) {
                Rational lam = detail::mode_distance(s, mode, x, z);
                if (lam + detail::mode_distance(s, mode, z, y) == d && lam <= d)
                    achievable.push_back(lam);
            }
            std::vector<Rational> marks = achievable;
            marks.push_back(0);
            marks.push_back(d);
            std::sort(marks.begin(), marks.end());
            marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
            std::vector<Rational> candidates = marks;
            for (std::size_t i = 0; i + 1 < marks.size(); ++i)
                candidates.push_back((marks[i] + marks[i + 1]) / 2);
            std::sort(candidates.begin(), candidates.end());
            for (const auto& lam : candidates) {
                if (std::find(achievable.begin(), achievable.end(), lam) !=
                    achievable.end())
                    continue;
                return {false, std::make_tuple(x, y, lam)};
            }
        }
    return {true, std::nullopt};
}

struct ClassificationRecord {
    HyperconvexityVerdict ap, nodal, pm, dm, dmetric;
    MidpointVerdict midpoint;
    TotalConvexityVerdict totally_convex_p, totally_convex_pm, totally_convex_dm;
    SpaceProfile profile;
};

/// Runs every decider and re-checks the implications between them; a failed
/// implication indicates a decider bug and aborts.
inline ClassificationRecord classify(const PMetricSpace& s,
                                     std::size_t guard = kDefaultSizeGuard) {
    if (s.size() > guard) throw size_guard_exceeded("space exceeds the size guard");
    ClassificationRecord rec;
    rec.ap = decide_ap(s, guard);
    rec.nodal = decide_nodal(s, guard);
    rec.pm = decide_derived(s, DerivedKind::PM, guard);
    rec.dm = decide_derived(s, DerivedKind::DM, guard);
    rec.dmetric = decide_derived(s, DerivedKind::D, guard);
    rec.midpoint = midpoint_property(s);
    rec.totally_convex_p = totally_convex(s, BetweenMode::P);
    rec.totally_convex_pm = totally_convex(s, BetweenMode::PM);
    rec.totally_convex_dm = totally_convex(s, BetweenMode::DM);
    rec.profile = profile(s);

    const bool multi = s.size() >= 2;
    if (rec.dm.holds && !(rec.ap.holds && rec.nodal.holds))
        throw internal_inconsistency("dm-hyperconvex space lost AP or nodal");
    if (rec.pm.holds && !rec.nodal.holds)
        throw internal_inconsistency("pm-hyperconvex space lost nodal");
    if (rec.dmetric.holds && multi && !rec.profile.is_metric)
        throw internal_inconsistency("D-hyperconvex multi-point space is not a metric");
    if (rec.midpoint.holds && multi && !rec.profile.is_metric)
        throw internal_inconsistency("midpoint property on a non-metric space");
    if (rec.profile.is_metric) {
        bool v = rec.ap.holds;
        if (rec.nodal.holds != v || rec.dm.holds != v || rec.dmetric.holds != v)
            throw internal_inconsistency("metric space verdicts disagree");
    }
    return rec;
}

}  // namespace pmetric
