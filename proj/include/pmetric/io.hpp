#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pmetric/hyperconvexity.hpp"
#include "pmetric/lipschitz.hpp"
#include "pmetric/space.hpp"

namespace pmetric {

struct format_error : error {
    using error::error;
};

using json = nlohmann::json;

/// Integers stay JSON numbers; everything else becomes "a/b" in lowest terms.
inline json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
        numerator(r) <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(numerator(r));
    return to_string(r);
}

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        if (auto r = parse_rational(j.get<std::string>())) return *r;
        throw format_error(where + ": malformed rational \"" + j.get<std::string>() + "\"");
    }
    throw format_error(where + ": expected an integer or an \"a/b\" string");
}

inline json space_to_json(const PMetricSpace& s) {
    json out;
    out["points"] = s.labels();
    json rows = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.size(); ++j) row.push_back(rational_to_json(s.p(i, j)));
        rows.push_back(std::move(row));
    }
    out["p"] = std::move(rows);
    return out;
}

/// Parses without validating the axioms; pass the result to validate_pmetric
/// (or the PMetricSpace constructor) for the axiom check.
inline std::pair<std::vector<std::string>, Matrix> space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("p"))
        throw format_error("space: expected an object with \"points\" and \"p\"");
    if (!j["points"].is_array()) throw format_error("space: \"points\" must be an array");
    std::vector<std::string> labels;
    for (const auto& l : j["points"]) {
        if (!l.is_string()) throw format_error("space: point labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    if (!j["p"].is_array()) throw format_error("space: \"p\" must be a matrix");
    Matrix m;
    for (std::size_t i = 0; i < j["p"].size(); ++i) {
        const auto& row = j["p"][i];
        if (!row.is_array()) throw format_error("space: \"p\" rows must be arrays");
        std::vector<Rational> r;
        for (std::size_t k = 0; k < row.size(); ++k)
            r.push_back(rational_from_json(row[k], "p[" + std::to_string(i) + "][" +
                                                       std::to_string(k) + "]"));
        m.push_back(std::move(r));
    }
    return {std::move(labels), std::move(m)};
}

inline json ball_family_to_json(const PMetricSpace& s, const BallFamily& fam) {
    json out = json::object();
    for (const auto& [u, r] : fam.entries) out[s.label(u)] = rational_to_json(r);
    return out;
}

inline BallFamily ball_family_from_json(const PMetricSpace& s, const json& j) {
    if (!j.is_object()) throw format_error("family: expected {\"center\": radius, ...}");
    BallFamily fam;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto idx = s.index_of(it.key());
        if (!idx) throw format_error("family: unknown center \"" + it.key() + "\"");
        fam.entries[*idx] = rational_from_json(it.value(), "family[" + it.key() + "]");
    }
    return fam;
}

inline json verdict_to_json(const PMetricSpace& s, const HyperconvexityVerdict& v) {
    json out;
    out["holds"] = v.holds;
    if (v.certificate) out["certificate"]["family"] = ball_family_to_json(s, *v.certificate);
    return out;
}

inline json classification_to_json(const PMetricSpace& s, const ClassificationRecord& rec) {
    json out;
    out["ap"] = verdict_to_json(s, rec.ap);
    out["nodal"] = verdict_to_json(s, rec.nodal);
    out["pm"] = verdict_to_json(s, rec.pm);
    out["dm"] = verdict_to_json(s, rec.dm);
    out["d"] = verdict_to_json(s, rec.dmetric);
    out["midpoint"]["holds"] = rec.midpoint.holds;
    if (rec.midpoint.violation) {
        auto [x, y, r] = *rec.midpoint.violation;
        out["midpoint"]["violation"] = {{"x", s.label(x)},
                                        {"y", s.label(y)},
                                        {"r", rational_to_json(r)}};
    }
    auto tc = [&](const TotalConvexityVerdict& v) {
        json t;
        t["holds"] = v.holds;
        if (v.violation) {
            auto [x, y, lam] = *v.violation;
            t["violation"] = {{"x", s.label(x)},
                              {"y", s.label(y)},
                              {"lambda", rational_to_json(lam)}};
        }
        return t;
    };
    out["totally_convex"] = {{"p", tc(rec.totally_convex_p)},
                             {"pm", tc(rec.totally_convex_pm)},
                             {"dm", tc(rec.totally_convex_dm)}};
    json bottom = json::array();
    for (auto i : rec.profile.bottom_set) bottom.push_back(s.label(i));
    out["profile"] = {{"is_metric", rec.profile.is_metric},
                      {"bottom_set", std::move(bottom)},
                      {"min_size", rational_to_json(rec.profile.min_size)},
                      {"max_size", rational_to_json(rec.profile.max_size)},
                      {"diameter", rational_to_json(rec.profile.diameter)},
                      {"bounded", rec.profile.bounded}};
    return out;
}

inline SelfMap map_from_json(const PMetricSpace& s, const json& j) {
    if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
        throw format_error("map: expected {\"map\": {\"a\": \"b\", ...}}");
    SelfMap f;
    f.image.assign(s.size(), 0);
    std::vector<bool> seen(s.size(), false);
    for (auto it = j["map"].begin(); it != j["map"].end(); ++it) {
        auto from = s.index_of(it.key());
        if (!from) throw format_error("map: unknown point \"" + it.key() + "\"");
        if (!it.value().is_string())
            throw format_error("map: image of \"" + it.key() + "\" must be a label");
        auto to = s.index_of(it.value().get<std::string>());
        if (!to)
            throw format_error("map: unknown image \"" + it.value().get<std::string>() + "\"");
        f.image[*from] = *to;
        seen[*from] = true;
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!seen[i]) throw format_error("map: point \"" + s.label(i) + "\" has no image");
    return f;
}

inline json map_to_json(const PMetricSpace& s, const SelfMap& f) {
    json m = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) m[s.label(i)] = s.label(f.image[i]);
    return json{{"map", std::move(m)}};
}

}  // namespace pmetric
