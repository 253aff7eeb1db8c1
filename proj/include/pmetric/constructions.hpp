#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmetric/space.hpp"

namespace pmetric {

/// Adjoins one point at uniform distance M = 1 + diameter from everything,
/// including itself. The result stays AP-hyperconvex when the input was, and
/// is always nodally hyperconvex: every ball around the new point is the
/// whole space.
inline PMetricSpace extend(const PMetricSpace& s) {
    const std::size_t n = s.size();
    Rational m = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (s.p(i, j) > m) m = s.p(i, j);
    m += 1;

    std::vector<std::string> labels = s.labels();
    std::string fresh;
    for (int k = 1;; ++k) {
        fresh = "w" + std::to_string(k);
        bool clash = false;
        for (const auto& l : labels)
            if (l == fresh) { clash = true; break; }
        if (!clash) break;
    }
    labels.push_back(fresh);

    Matrix q(n + 1, std::vector<Rational>(n + 1, m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = s.p(i, j);
    return PMetricSpace(std::move(labels), std::move(q));
}

/// Size-0 singleton extended n-1 times; sizes come out 0, 1, ..., n-1, and
/// the space is both AP- and nodally hyperconvex for every n.
inline PMetricSpace chain(std::size_t n) {
    if (n == 0) throw error("chain: n must be at least 1");
    PMetricSpace s({"x0"}, {{Rational(0)}});
    for (std::size_t i = 1; i < n; ++i) s = extend(s);
    return s;
}

enum class NormKind { L1, LINF };

using Vec = std::vector<Rational>;

inline Rational norm_of(const Vec& v, NormKind norm) {
    Rational out = 0;
    for (const auto& c : v) {
        Rational a = abs(c);
        if (norm == NormKind::L1)
            out += a;
        else if (a > out)
            out = a;
    }
    return out;
}

inline Rational norm_dist(const Vec& a, const Vec& b, NormKind norm) {
    Vec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return norm_of(diff, norm);
}

/// The Matthews partial metric of a normed space, sampled at finitely many
/// points: p(x,y) = (|x-y| + |x| + |y|) / 2. Labels are "v0", "v1", ...
inline PMetricSpace norm_pmetric(const std::vector<Vec>& points, NormKind norm) {
    if (points.empty()) throw error("norm_pmetric: empty point list");
    const std::size_t dim = points[0].size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim) throw error("norm_pmetric: dimension mismatch");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw error("norm_pmetric: duplicate point");
    }
    const std::size_t n = points.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = (norm_dist(points[i], points[j], norm) + norm_of(points[i], norm) +
                       norm_of(points[j], norm)) /
                      2;
    return PMetricSpace(std::move(labels), std::move(m));
}

/// A linear function alpha*s + beta of the arm parameter, valid on [lo, hi].
struct LinearPiece {
    Rational slope, intercept;
    Rational lo, hi;
    Rational at(const Rational& s) const { return slope * s + intercept; }
};

/// d_m(s*e_arm, e_target) on the l1 tripod, as exact linear pieces of
/// s in [0, 1]. With p from the l1 Matthews pmetric and |s*e_arm| = s:
/// own arm gives 1 - s, the other arms give the constant 1.
inline std::vector<LinearPiece> tripod_arm_dm(int arm, int target) {
    if (arm < 1 || arm > 3 || target < 1 || target > 3)
        throw error("tripod_arm_dm: arm index out of range");
    if (arm == target) return {{Rational(-1), Rational(1), Rational(0), Rational(1)}};
    return {{Rational(0), Rational(1), Rational(0), Rational(1)}};
}

struct ArmPoint {
    int arm = 1;                // 1..3
    Rational parameter;         // in [0, 1]
};

/// Is some point of the full continuum tripod within d_m-distance `radius`
/// of all three unit tips? Decided exactly, arm by arm, on the linear
/// pieces of s -> d_m(s*e_arm, e_i).
inline std::optional<ArmPoint> tripod_dm_gap(const Rational& radius) {
    if (radius < 0) throw error("tripod_dm_gap: negative radius");
    for (int arm = 1; arm <= 3; ++arm) {
        // Intersect {s : piece(s) <= radius} over the three targets.
        Rational lo = 0, hi = 1;
        bool feasible_arm = true;
        for (int target = 1; target <= 3 && feasible_arm; ++target) {
            Rational piece_lo = 2, piece_hi = -1;  // empty until a piece admits s
            for (const auto& piece : tripod_arm_dm(arm, target)) {
                Rational a = piece.lo, b = piece.hi;
                if (piece.slope == 0) {
                    if (piece.intercept > radius) continue;
                } else {
                    Rational bound = (radius - piece.intercept) / piece.slope;
                    if (piece.slope > 0) {
                        if (bound < b) b = bound;
                    } else {
                        if (bound > a) a = bound;
                    }
                }
                if (a > b) continue;
                if (a < piece_lo) piece_lo = a;
                if (b > piece_hi) piece_hi = b;
            }
            if (piece_lo > piece_hi) {
                feasible_arm = false;
                break;
            }
            if (piece_lo > lo) lo = piece_lo;
            if (piece_hi < hi) hi = piece_hi;
        }
        if (feasible_arm && lo <= hi) return ArmPoint{arm, lo};
    }
    return std::nullopt;
}

}  // namespace pmetric
