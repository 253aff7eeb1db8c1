#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pmetric/rational.hpp"

namespace pmetric {

enum class DerivedKind { PM, DM, D };

enum class Axiom { P1, P2, P3, P4 };

struct ValidationError {
    enum class Kind { NonSquare, DuplicateLabel, NegativeValue, AxiomViolation };
    Kind kind;
    std::optional<Axiom> axiom;        // set for AxiomViolation
    std::vector<std::size_t> points;   // offending indices
    std::string message;
};

using Matrix = std::vector<std::vector<Rational>>;

class PMetricSpace;

/// All violations, not just the first.
std::vector<ValidationError> check_pmetric(const std::vector<std::string>& labels,
                                           const Matrix& matrix);

/// Finite partial metric space over labeled points, immutable once built.
class PMetricSpace {
public:
    /// Throws error with the first diagnostic if the axioms fail; use
    /// check_pmetric to get the complete violation list.
    PMetricSpace(std::vector<std::string> labels, Matrix matrix)
        : labels_(std::move(labels)), p_(std::move(matrix)) {
        auto errs = check_pmetric(labels_, p_);
        if (!errs.empty()) throw error("invalid partial metric: " + errs.front().message);
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Rational& p(std::size_t i, std::size_t j) const { return p_[i][j]; }
    const Matrix& matrix() const { return p_; }

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    bool is_metric() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (p_[i][i] != 0) return false;
        return true;
    }

private:
    std::vector<std::string> labels_;
    Matrix p_;
};

inline std::vector<ValidationError> check_pmetric(const std::vector<std::string>& labels,
                                                  const Matrix& matrix) {
    std::vector<ValidationError> errs;
    const std::size_t n = labels.size();

    bool square = matrix.size() == n;
    for (const auto& row : matrix)
        if (row.size() != n) square = false;
    if (!square) {
        errs.push_back({ValidationError::Kind::NonSquare, std::nullopt, {},
                        "matrix shape does not match the label count"});
        return errs;
    }

    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen.insert(labels[i]).second)
            errs.push_back({ValidationError::Kind::DuplicateLabel, std::nullopt, {i},
                            "duplicate label \"" + labels[i] + "\""});
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix[i][j] < 0)
                errs.push_back({ValidationError::Kind::NegativeValue, std::nullopt, {i, j},
                                "negative value at (" + labels[i] + "," + labels[j] + ")"});

    // P3 before P2/P1/P4 so later checks may assume symmetry diagnostics exist.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i])
                errs.push_back({ValidationError::Kind::AxiomViolation, Axiom::P3, {i, j},
                                "P3: p(" + labels[i] + "," + labels[j] + ") != p(" +
                                    labels[j] + "," + labels[i] + ")"});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && matrix[i][i] > matrix[i][j])
                errs.push_back({ValidationError::Kind::AxiomViolation, Axiom::P2, {i, j},
                                "P2: p(" + labels[i] + "," + labels[i] + ") > p(" +
                                    labels[i] + "," + labels[j] + ")"});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i][i] == matrix[j][j] && matrix[j][j] == matrix[i][j])
                errs.push_back({ValidationError::Kind::AxiomViolation, Axiom::P1, {i, j},
                                "P1: distinct points " + labels[i] + "," + labels[j] +
                                    " with equal sizes and distance"});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (matrix[i][j] > matrix[i][k] + matrix[k][j] - matrix[k][k])
                    errs.push_back({ValidationError::Kind::AxiomViolation, Axiom::P4,
                                    {i, j, k},
                                    "P4: p(" + labels[i] + "," + labels[j] +
                                        ") > p(" + labels[i] + "," + labels[k] + ")+p(" +
                                        labels[k] + "," + labels[j] + ")-p(" + labels[k] +
                                        "," + labels[k] + ")"});
    return errs;
}

inline std::optional<PMetricSpace> validate_pmetric(const std::vector<std::string>& labels,
                                                    const Matrix& matrix,
                                                    std::vector<ValidationError>* errors = nullptr) {
    auto errs = check_pmetric(labels, matrix);
    if (!errs.empty()) {
        if (errors) *errors = std::move(errs);
        return std::nullopt;
    }
    return PMetricSpace(labels, matrix);
}

/// The metric associated to a partial metric: doubled-difference (PM),
/// max-difference (DM) or the zero-diagonal replacement (D).
inline PMetricSpace derive_metric(const PMetricSpace& s, DerivedKind kind) {
    const std::size_t n = s.size();
    Matrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            switch (kind) {
                case DerivedKind::PM:
                    m[i][j] = 2 * s.p(i, j) - s.p(i, i) - s.p(j, j);
                    break;
                case DerivedKind::DM: {
                    Rational a = s.p(i, j) - s.p(i, i);
                    Rational b = s.p(i, j) - s.p(j, j);
                    m[i][j] = a > b ? a : b;
                    break;
                }
                case DerivedKind::D:
                    m[i][j] = s.p(i, j);
                    break;
            }
        }
    return PMetricSpace(s.labels(), m);
}

/// Closed ball {y : p(x,y) <= p(x,x) + r}; the size-shifted ball.
inline std::vector<std::size_t> closed_ball(const PMetricSpace& s, std::size_t center,
                                            const Rational& radius) {
    if (center >= s.size()) throw error("closed_ball: unknown point index");
    if (radius < 0) throw error("closed_ball: negative radius");
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < s.size(); ++y)
        if (s.p(center, y) <= s.p(center, center) + radius) out.push_back(y);
    return out;
}

struct SpaceProfile {
    bool is_metric = false;
    std::vector<std::size_t> bottom_set;  // points of globally minimal size
    Rational min_size;
    Rational max_size;
    Rational diameter;
    bool bounded = true;  // finite spaces always are
};

inline SpaceProfile profile(const PMetricSpace& s) {
    SpaceProfile out;
    out.is_metric = s.is_metric();
    out.min_size = s.p(0, 0);
    out.max_size = s.p(0, 0);
    out.diameter = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.p(i, i) < out.min_size) out.min_size = s.p(i, i);
        if (s.p(i, i) > out.max_size) out.max_size = s.p(i, i);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s.p(i, j) > out.diameter) out.diameter = s.p(i, j);
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.p(i, i) == out.min_size) out.bottom_set.push_back(i);
    return out;
}

}  // namespace pmetric
