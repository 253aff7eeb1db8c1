#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pmetric/space.hpp"

namespace pmetric {

/// Total self-map of a space, by point index.
struct SelfMap {
    std::vector<std::size_t> image;  // image[i] = f(point i)

    static SelfMap identity(std::size_t n) {
        SelfMap f;
        for (std::size_t i = 0; i < n; ++i) f.image.push_back(i);
        return f;
    }
    static SelfMap constant(std::size_t n, std::size_t c) {
        SelfMap f;
        f.image.assign(n, c);
        return f;
    }
};

inline void check_map(const PMetricSpace& s, const SelfMap& f) {
    if (f.image.size() != s.size()) throw error("self-map does not cover every point");
    for (auto i : f.image)
        if (i >= s.size()) throw error("self-map image outside the space");
}

enum class LipschitzNotion { Matthews, IPR, L1, L2 };

namespace detail {

// Largest term other than L*p(x,y) on the right-hand side of the notion's
// inequality; nullopt when the notion has none (Matthews).
inline std::optional<Rational> slack_term(const PMetricSpace& s, const SelfMap& f,
                                          LipschitzNotion notion, std::size_t x,
                                          std::size_t y) {
    if (notion == LipschitzNotion::Matthews) return std::nullopt;
    Rational t = s.p(x, x);
    if (s.p(y, y) > t) t = s.p(y, y);
    if (notion == LipschitzNotion::L1) {
        if (s.p(f.image[x], f.image[x]) > t) t = s.p(f.image[x], f.image[x]);
        if (s.p(f.image[y], f.image[y]) > t) t = s.p(f.image[y], f.image[y]);
    } else if (notion == LipschitzNotion::L2) {
        if (s.p(x, f.image[x]) > t) t = s.p(x, f.image[x]);
        if (s.p(y, f.image[y]) > t) t = s.p(y, f.image[y]);
    }
    return t;
}

}  // namespace detail

struct LipschitzCheck {
    bool holds = false;
    std::optional<std::pair<std::size_t, std::size_t>> violation;  // first bad pair
};

/// Exact evaluation of the notion's inequality over all ordered pairs.
/// L = 0 is allowed (used by the bottom-set probe).
inline LipschitzCheck check_lipschitz(const PMetricSpace& s, const SelfMap& f,
                                      LipschitzNotion notion, const Rational& L) {
    check_map(s, f);
    if (L < 0) throw error("check_lipschitz: negative constant");
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y) {
            Rational lhs = s.p(f.image[x], f.image[y]);
            Rational rhs = L * s.p(x, y);
            if (auto t = detail::slack_term(s, f, notion, x, y))
                if (*t > rhs) rhs = *t;
            if (lhs > rhs) return {false, std::make_pair(x, y)};
        }
    return {true, std::nullopt};
}

struct LipschitzReport {
    LipschitzNotion notion;
    std::optional<Rational> minimal_L;  // nullopt: no L > 0 works
    bool infimum_not_attained = false;  // minimal_L = 0 reported as an infimum
    std::optional<std::pair<std::size_t, std::size_t>> tight_pair;
    bool is_nonexpansive = false;
};

/// Per ordered pair the constraint on L is vacuous (covered by the non-L
/// terms), a ratio lower bound, or unsatisfiable when p(x,y) = 0; the
/// minimum is the largest ratio, attained there.
inline LipschitzReport minimal_L(const PMetricSpace& s, const SelfMap& f,
                                 LipschitzNotion notion) {
    check_map(s, f);
    LipschitzReport rep;
    rep.notion = notion;
    std::optional<Rational> best;
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y) {
            Rational lhs = s.p(f.image[x], f.image[y]);
            auto t = detail::slack_term(s, f, notion, x, y);
            if (t && lhs <= *t) continue;  // holds regardless of L
            if (s.p(x, y) == 0) {
                if (lhs > 0) {  // no constant works; minimal_L stays none
                    rep.tight_pair = std::make_pair(x, y);
                    rep.minimal_L = std::nullopt;
                    return rep;
                }
                continue;  // 0 <= L*0 for any L
            }
            Rational bound = lhs / s.p(x, y);
            if (!best || bound > *best) {
                best = bound;
                rep.tight_pair = std::make_pair(x, y);
            }
        }
    if (best) {
        rep.minimal_L = *best;
        rep.is_nonexpansive = *best <= 1;
    } else {
        // Every pair is covered without the L term: any L > 0 works.
        rep.minimal_L = Rational(0);
        rep.infimum_not_attained = true;
        rep.is_nonexpansive = true;
    }
    return rep;
}

inline std::vector<std::size_t> fixed_points(const PMetricSpace& s, const SelfMap& f) {
    check_map(s, f);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < s.size(); ++x)
        if (f.image[x] == x) out.push_back(x);
    return out;
}

struct ConstantMapReport {
    std::size_t c;
    std::map<LipschitzNotion, LipschitzReport> per_notion;
    bool ipr_at_zero = false;       // IPR inequality with L = 0, the hardest case
    bool in_bottom_set = false;
    bool equivalence_holds = false; // ipr_at_zero == in_bottom_set
};

/// Constant maps are IPR-Lipschitz for all L in [0,1) exactly when the value
/// sits in the bottom set; monotonicity of the max in L makes L = 0 decisive.
inline ConstantMapReport constant_map_report(const PMetricSpace& s, std::size_t c) {
    if (c >= s.size()) throw error("constant_map_report: unknown point");
    ConstantMapReport rep;
    rep.c = c;
    SelfMap f = SelfMap::constant(s.size(), c);
    for (auto notion : {LipschitzNotion::Matthews, LipschitzNotion::IPR,
                        LipschitzNotion::L1, LipschitzNotion::L2})
        rep.per_notion[notion] = minimal_L(s, f, notion);
    rep.ipr_at_zero = check_lipschitz(s, f, LipschitzNotion::IPR, Rational(0)).holds;
    auto prof = profile(s);
    rep.in_bottom_set = s.p(c, c) == prof.min_size;
    rep.equivalence_holds = rep.ipr_at_zero == rep.in_bottom_set;
    return rep;
}

}  // namespace pmetric
