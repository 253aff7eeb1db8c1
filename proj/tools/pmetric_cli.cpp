// Command-line front end: every subcommand prints JSON on stdout, a short
// human summary on stderr. Exit codes: 0 success, 1 failed --expect or
// fixture check, 2 usage/format/validation errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pmetric/constructions.hpp"
#include "pmetric/fixtures.hpp"
#include "pmetric/hyperconvexity.hpp"
#include "pmetric/io.hpp"
#include "pmetric/lipschitz.hpp"
#include "pmetric/search.hpp"

namespace {

using namespace pmetric;

constexpr int kOk = 0;
constexpr int kExpectFailed = 1;
constexpr int kBadInput = 2;
constexpr std::size_t kHardGuardCeiling = 8;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw format_error(path + ": " + e.what());
    }
    return j;
}

PMetricSpace load_space(const std::string& path) {
    auto [labels, matrix] = space_from_json(load_json(path));
    std::vector<ValidationError> errs;
    auto space = validate_pmetric(labels, matrix, &errs);
    if (!space) throw format_error(path + ": " + errs.front().message);
    return *space;
}

void emit(const json& j, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
}

std::optional<bool> parse_expect(const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    return std::nullopt;
}

struct ExpectFlags {
    std::string ap, nodal, pm, dm, d;

    void attach(CLI::App* cmd) {
        cmd->add_option("--expect-ap", ap, "Fail (exit 1) unless ap matches true|false");
        cmd->add_option("--expect-nodal", nodal, "Fail unless nodal matches");
        cmd->add_option("--expect-pm", pm, "Fail unless pm matches");
        cmd->add_option("--expect-dm", dm, "Fail unless dm matches");
        cmd->add_option("--expect-d", d, "Fail unless d matches");
    }

    // Returns false when an expectation is violated. Throws on a malformed value.
    bool check(const ClassificationRecord& rec) const {
        auto one = [](const std::string& v, bool actual, const char* what) {
            if (v.empty()) return true;
            auto want = parse_expect(v);
            if (!want) throw format_error(std::string("--expect-") + what +
                                          ": expected true or false, got \"" + v + "\"");
            return *want == actual;
        };
        return one(ap, rec.ap.holds, "ap") && one(nodal, rec.nodal.holds, "nodal") &&
               one(pm, rec.pm.holds, "pm") && one(dm, rec.dm.holds, "dm") &&
               one(d, rec.dmetric.holds, "d");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Exact hyperconvexity toolkit for finite partial metric spaces"};
    app.require_subcommand(1);

    std::size_t guard = kDefaultSizeGuard;
    app.add_option("--max-points", guard,
                   "Size guard for the hyperconvexity deciders (hard ceiling 8)");

    std::string in_file, out_file, family_json, kind_str, notion_str, map_file, norm_str;
    std::string find_str;

    auto* validate = app.add_subcommand("validate", "Check the partial metric axioms");
    validate->add_option("file", in_file)->required();
    std::string expect_valid;
    validate->add_option("--expect", expect_valid, "valid|invalid");

    auto* derive = app.add_subcommand("derive", "Emit an associated metric space");
    derive->add_option("file", in_file)->required();
    derive->add_option("--kind", kind_str, "pm|dm|d")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Run every decider");
    classify_cmd->add_option("file", in_file)->required();
    ExpectFlags expect;
    expect.attach(classify_cmd);

    auto* witness = app.add_subcommand("witness", "Witness set of a ball family");
    witness->add_option("file", in_file)->required();
    witness->add_option("--family", family_json, "{\"center\": radius, ...}")->required();
    witness->add_option("--notion", notion_str, "ap|nodal")->required();

    auto* extend_cmd = app.add_subcommand("extend", "Adjoin a dominating point");
    extend_cmd->add_option("file", in_file)->required();
    extend_cmd->add_option("-o,--out", out_file);

    std::size_t chain_n = 1;
    auto* chain_cmd = app.add_subcommand("chain", "Iterated extension of a singleton");
    chain_cmd->add_option("n", chain_n)->required();
    chain_cmd->add_option("-o,--out", out_file);

    std::vector<std::string> point_args;
    auto* norm_cmd = app.add_subcommand("norm", "Matthews pmetric of sampled vectors");
    norm_cmd->add_option("--norm", norm_str, "l1|linf")->required();
    norm_cmd->add_option("--point", point_args, "comma-separated rational coordinates")
        ->required();

    std::string radius_str;
    auto* tripod_cmd = app.add_subcommand("tripod", "Common d_m-ball point on the l1 tripod");
    tripod_cmd->add_option("radius", radius_str)->required();
    std::string expect_tripod;
    tripod_cmd->add_option("--expect", expect_tripod, "empty|witness");

    auto* lipschitz_cmd = app.add_subcommand("lipschitz", "Minimal Lipschitz constant");
    lipschitz_cmd->add_option("--space", in_file)->required();
    lipschitz_cmd->add_option("--map", map_file)->required();
    lipschitz_cmd->add_option("--notion", notion_str, "matthews|ipr|l1|l2")->required();

    GeneratorConfig cfg;
    std::size_t budget = 100000;
    std::string family_str = "rejection";
    auto* search_cmd = app.add_subcommand("search", "Mine for a classification pattern");
    search_cmd->add_option("--n", cfg.n);
    search_cmd->add_option("--seed", cfg.seed);
    search_cmd->add_option("--grid-max", cfg.max_value);
    search_cmd->add_option("--grid-denom", cfg.denom_bound);
    search_cmd->add_option("--family", family_str, "rejection|weighted");
    search_cmd
        ->add_option("--find", find_str,
                     "nodal-not-ap|ap-not-nodal|nonmetric-with-midpoint|"
                     "pm-hyperconvex-multipoint")
        ->required();
    search_cmd->add_option("--budget", budget);
    search_cmd->add_option("-o,--out", out_file);

    auto* report_cmd = app.add_subcommand("report", "Run the built-in fixture table");
    (void)report_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kBadInput;
    }
    if (guard > kHardGuardCeiling) {
        std::cerr << "--max-points above the hard ceiling of " << kHardGuardCeiling << "\n";
        return kBadInput;
    }

    if (validate->parsed()) {
        auto [labels, matrix] = space_from_json(load_json(in_file));
        auto errs = check_pmetric(labels, matrix);
        json out;
        out["valid"] = errs.empty();
        out["errors"] = json::array();
        for (const auto& e : errs) {
            json je;
            je["message"] = e.message;
            if (e.axiom) {
                const char* names[] = {"P1", "P2", "P3", "P4"};
                je["axiom"] = names[static_cast<int>(*e.axiom)];
            }
            json pts = json::array();
            for (auto i : e.points)
                pts.push_back(i < labels.size() ? labels[i] : std::to_string(i));
            je["points"] = std::move(pts);
            out["errors"].push_back(std::move(je));
        }
        emit(out, errs.empty() ? "valid partial metric"
                               : "invalid: " + errs.front().message);
        if (!expect_valid.empty())
            return (expect_valid == "valid") == errs.empty() ? kOk : kExpectFailed;
        return errs.empty() ? kOk : kBadInput;
    }

    if (derive->parsed()) {
        auto s = load_space(in_file);
        DerivedKind kind;
        if (kind_str == "pm")
            kind = DerivedKind::PM;
        else if (kind_str == "dm")
            kind = DerivedKind::DM;
        else if (kind_str == "d")
            kind = DerivedKind::D;
        else
            throw format_error("--kind: expected pm|dm|d");
        emit(space_to_json(derive_metric(s, kind)), "derived metric space");
        return kOk;
    }

    if (classify_cmd->parsed()) {
        auto s = load_space(in_file);
        auto rec = pmetric::classify(s, guard);
        emit(classification_to_json(s, rec),
             std::string("ap=") + (rec.ap.holds ? "true" : "false") +
                 " nodal=" + (rec.nodal.holds ? "true" : "false") +
                 " pm=" + (rec.pm.holds ? "true" : "false") +
                 " dm=" + (rec.dm.holds ? "true" : "false") +
                 " d=" + (rec.dmetric.holds ? "true" : "false"));
        return expect.check(rec) ? kOk : kExpectFailed;
    }

    if (witness->parsed()) {
        auto s = load_space(in_file);
        json fam_json;
        try {
            fam_json = json::parse(family_json);
        } catch (const json::parse_error& e) {
            throw format_error(std::string("--family: ") + e.what());
        }
        auto fam = ball_family_from_json(s, fam_json);
        std::vector<std::size_t> ws;
        if (notion_str == "ap")
            ws = ap_witnesses(s, fam);
        else if (notion_str == "nodal")
            ws = nodal_witnesses(s, fam);
        else
            throw format_error("--notion: expected ap|nodal");
        json out;
        out["family"] = ball_family_to_json(s, fam);
        out["witnesses"] = json::array();
        for (auto w : ws) out["witnesses"].push_back(s.label(w));
        emit(out, std::to_string(ws.size()) + " witness(es)");
        return kOk;
    }

    auto write_space = [&](const PMetricSpace& s, const std::string& summary) {
        json j = space_to_json(s);
        if (!out_file.empty()) {
            std::ofstream out(out_file);
            out << j.dump(2) << "\n";
        }
        emit(j, summary);
    };

    if (extend_cmd->parsed()) {
        write_space(extend(load_space(in_file)), "extended by one dominating point");
        return kOk;
    }
    if (chain_cmd->parsed()) {
        if (chain_n == 0) throw format_error("chain: n must be at least 1");
        write_space(chain(chain_n), "chain of " + std::to_string(chain_n) + " point(s)");
        return kOk;
    }

    if (norm_cmd->parsed()) {
        NormKind norm;
        if (norm_str == "l1")
            norm = NormKind::L1;
        else if (norm_str == "linf")
            norm = NormKind::LINF;
        else
            throw format_error("--norm: expected l1|linf");
        std::vector<Vec> points;
        for (const auto& arg : point_args) {
            Vec v;
            std::stringstream ss(arg);
            std::string coord;
            while (std::getline(ss, coord, ',')) {
                auto r = parse_rational(coord);
                if (!r) throw format_error("--point: malformed coordinate \"" + coord + "\"");
                v.push_back(*r);
            }
            points.push_back(std::move(v));
        }
        write_space(norm_pmetric(points, norm), "Matthews pmetric over sampled vectors");
        return kOk;
    }

    if (tripod_cmd->parsed()) {
        auto r = parse_rational(radius_str);
        if (!r || *r < 0) throw format_error("tripod: radius must be a nonnegative rational");
        auto hit = tripod_dm_gap(*r);
        json out;
        out["radius"] = rational_to_json(*r);
        out["empty"] = !hit.has_value();
        if (hit) {
            out["witness"]["arm"] = hit->arm;
            out["witness"]["parameter"] = rational_to_json(hit->parameter);
        }
        emit(out, hit ? "witness on arm " + std::to_string(hit->arm) + " at parameter " +
                            to_string(hit->parameter)
                      : "no common point");
        if (!expect_tripod.empty())
            return (expect_tripod == "empty") == !hit ? kOk : kExpectFailed;
        return kOk;
    }

    if (lipschitz_cmd->parsed()) {
        auto s = load_space(in_file);
        auto f = map_from_json(s, load_json(map_file));
        LipschitzNotion notion;
        if (notion_str == "matthews")
            notion = LipschitzNotion::Matthews;
        else if (notion_str == "ipr")
            notion = LipschitzNotion::IPR;
        else if (notion_str == "l1")
            notion = LipschitzNotion::L1;
        else if (notion_str == "l2")
            notion = LipschitzNotion::L2;
        else
            throw format_error("--notion: expected matthews|ipr|l1|l2");
        auto rep = minimal_L(s, f, notion);
        json out;
        out["notion"] = notion_str;
        if (rep.minimal_L)
            out["minimal_L"] = rational_to_json(*rep.minimal_L);
        else
            out["minimal_L"] = nullptr;
        out["infimum_not_attained"] = rep.infimum_not_attained;
        out["is_nonexpansive"] = rep.is_nonexpansive;
        if (rep.tight_pair)
            out["tight_pair"] = {s.label(rep.tight_pair->first),
                                 s.label(rep.tight_pair->second)};
        json fx = json::array();
        for (auto x : fixed_points(s, f)) fx.push_back(s.label(x));
        out["fixed_points"] = std::move(fx);
        emit(out, rep.minimal_L ? "minimal L = " + to_string(*rep.minimal_L)
                                : "no Lipschitz constant exists");
        return kOk;
    }

    if (search_cmd->parsed()) {
        if (family_str == "rejection")
            cfg.family = GeneratorFamily::Rejection;
        else if (family_str == "weighted")
            cfg.family = GeneratorFamily::WeightedMetric;
        else
            throw format_error("--family: expected rejection|weighted");
        MinePredicate pred;
        if (find_str == "nodal-not-ap")
            pred = MinePredicate::NodalNotAp;
        else if (find_str == "ap-not-nodal")
            pred = MinePredicate::ApNotNodal;
        else if (find_str == "nonmetric-with-midpoint")
            pred = MinePredicate::NonmetricWithMidpoint;
        else if (find_str == "pm-hyperconvex-multipoint")
            pred = MinePredicate::PmHyperconvexMultipoint;
        else
            throw format_error("--find: unknown pattern \"" + find_str + "\"");
        auto result = mine(cfg, pred, budget, guard);
        json out;
        out["found"] = result.found.has_value();
        out["instances_tried"] = result.instances_tried;
        if (result.found) {
            out["space"] = space_to_json(result.found->space);
            out["classification"] =
                classification_to_json(result.found->space, result.found->record);
            if (!out_file.empty()) {
                std::ofstream f(out_file);
                f << space_to_json(result.found->space).dump(2) << "\n";
            }
        }
        emit(out, result.found
                      ? "found after " + std::to_string(result.instances_tried) + " instance(s)"
                      : "budget exhausted");
        return result.found ? kOk : kExpectFailed;
    }

    if (report_cmd->parsed()) {
        auto results = fixtures::run_fixtures(guard);
        json out;
        out["format"] = 1;
        out["cases"] = json::array();
        bool all_pass = true;
        for (const auto& r : results) {
            out["cases"].push_back({{"name", r.name},
                                    {"expected", r.expected},
                                    {"actual", r.actual},
                                    {"pass", r.pass}});
            std::cerr << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  expected=["
                      << r.expected << "] actual=[" << r.actual << "]\n";
            all_pass = all_pass && r.pass;
        }
        out["all_pass"] = all_pass;
        std::cout << out.dump(2) << "\n";
        return all_pass ? kOk : kExpectFailed;
    }

    return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pmetric::format_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const pmetric::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
