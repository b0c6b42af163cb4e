#include "k3audit/casebook.hpp"
#include "k3audit/coverbook.hpp"
#include "k3audit/delpezzo.hpp"
#include "k3audit/invariants.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

struct Output {
    std::string path;
    std::string format = "text";   // text | structured

    void emit(const std::string& text_doc, const std::string& json_doc) const {
        const std::string& doc = format == "structured" ? json_doc : text_doc;
        if (path.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(path);
            if (!out) throw k3::error("cannot open output path: " + path);
            out << doc;
        }
    }
};

int run_reports(const std::vector<k3::AuditReport>& reports, const Output& out) {
    std::ostringstream text;
    std::string json = "[\n";
    bool all = true;
    for (size_t i = 0; i < reports.size(); ++i) {
        text << reports[i].text();
        json += reports[i].json();
        if (i + 1 < reports.size()) json += ",";
        json += "\n";
        if (!reports[i].verdict()) all = false;
    }
    json += "]\n";
    out.emit(text.str(), json);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for the maximal-symmetry "
                 "K3-surface classification"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write the report to this path");
    app.add_option("--format", out.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));

    k3::AuditConfig cfg;
    app.add_option("--primes", cfg.scan_primes,
                   "primes for the finite-field smoothness scans");
    int nbound = 10;
    app.add_option("--nbound", nbound,
                   "bound for the number of rational branch curves (10 or 19)")
        ->check(CLI::IsMember({10, 19}));

    std::string case_id, group_name;
    auto* verify = app.add_subcommand("verify", "run one classification case audit");
    verify->add_option("--case", case_id, "case id")->required();

    auto* audit = app.add_subcommand("audit", "run one non-existence audit");
    audit->add_option("--group", group_name, "group name")->required();

    std::string molien_group;
    int molien_degree = 0, molien_character = -1;
    auto* molien = app.add_subcommand("molien", "semi-invariant dimensions");
    molien->add_option("--group", molien_group, "catalogue group")->required();
    molien->add_option("--degree", molien_degree, "polynomial degree")->required();
    molien->add_option("--character", molien_character,
                       "character index (default: all)");

    int dp_degree = 0;
    bool emit_graph = false;
    auto* delpezzo = app.add_subcommand("delpezzo", "exceptional-curve data");
    delpezzo->add_option("--degree", dp_degree, "Del Pezzo degree")->required();
    delpezzo->add_flag("--emit-graph", emit_graph, "emit DOT adjacency");

    std::string pipeline;
    auto* derive = app.add_subcommand("derive", "run a derivation pipeline");
    derive->add_option("--pipeline", pipeline, "cs5 | m9")->required();

    auto* selftest = app.add_subcommand("selftest", "run every audit");

    for (auto* sub : {verify, audit, molien, delpezzo, derive, selftest})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        k3::set_rational_branch_bound(nbound);

        if (*verify) {
            auto ids = k3::case_ids();
            if (std::find(ids.begin(), ids.end(), case_id) == ids.end()) {
                std::string valid;
                for (const auto& n : ids) valid += (valid.empty() ? "" : ", ") + n;
                std::cerr << "unknown case '" << case_id << "'; valid cases: "
                          << valid << "\n";
                return 2;
            }
            return run_reports({k3::verify_case(case_id, cfg)}, out);
        }
        if (*audit) {
            auto ids = k3::nonexistence_ids();
            if (std::find(ids.begin(), ids.end(), group_name) == ids.end()) {
                std::string valid;
                for (const auto& n : ids) valid += (valid.empty() ? "" : ", ") + n;
                std::cerr << "unknown group '" << group_name
                          << "'; valid groups: " << valid << "\n";
                return 2;
            }
            return run_reports({k3::audit_nonexistence(group_name, cfg)}, out);
        }
        if (*molien) {
            const auto& cat = k3::catalogue_cached(molien_group);
            auto chars = cat.group.linear_characters();
            std::ostringstream text;
            text << "group " << molien_group << " order " << cat.group.order()
                 << " characters " << chars.size() << "\n";
            std::string json = "{\"group\":\"" + molien_group + "\",\"dims\":[";
            bool first = true;
            for (size_t i = 0; i < chars.size(); ++i) {
                if (molien_character >= 0 && (int)i != molien_character) continue;
                int d = k3::invariant_dimension(cat.group, molien_degree, chars[i]);
                text << "character " << i << (chars[i].is_trivial() ? " (trivial)" : "")
                     << " degree " << molien_degree << " dimension " << d << "\n";
                if (!first) json += ",";
                json += std::to_string(d);
                first = false;
            }
            json += "]}\n";
            out.emit(text.str(), json);
            return 0;
        }
        if (*delpezzo) {
            auto l = k3::PicardLattice::blowup(dp_degree);
            auto classes = k3::minus_one_classes(l);
            auto graph = k3::intersection_graph(classes, l);
            std::ostringstream text;
            text << "degree " << dp_degree << " classes " << classes.size()
                 << " edges " << graph.edge_count() << "\n";
            for (const auto& c : classes) {
                for (size_t i = 0; i < c.c.size(); ++i)
                    text << (i ? " " : "") << c.c[i];
                text << "\n";
            }
            for (int i = 0; i < graph.vertices; ++i)
                for (int j = i + 1; j < graph.vertices; ++j)
                    if (graph.weight[i][j] >= 1)
                        text << "edge " << i << " " << j << " "
                             << graph.weight[i][j] << "\n";
            if (emit_graph) text << graph.dot();
            out.emit(text.str(), "{\"degree\":" + std::to_string(dp_degree) +
                                     ",\"classes\":" +
                                     std::to_string(classes.size()) + "}\n");
            return 0;
        }
        if (*derive) {
            std::ostringstream text;
            if (pipeline == "cs5") {
                auto res = k3::derive_quintic_dp_sextic();
                for (const auto& line : res.constraint_log)
                    text << "constraint: " << line << "\n";
                text << "a3..a7 =";
                for (const auto& q : res.a) text << " " << k3::to_string(q);
                text << "\nsextic: " << res.sextic.str() << "\n";
            } else if (pipeline == "m9") {
                auto res = k3::derive_m9_sextics();
                text << "characters " << res.by_character.size()
                     << " irreducible curves " << res.irreducible_curve_count
                     << "\n";
                for (size_t i = 0; i < res.by_character.size(); ++i)
                    text << "character " << i
                         << (res.character_trivial[i] ? " (trivial)" : "")
                         << ": " << res.by_character[i].str() << "\n";
            } else {
                std::cerr << "unknown pipeline '" << pipeline
                          << "'; valid: cs5, m9\n";
                return 2;
            }
            out.emit(text.str(), "{}\n");
            return 0;
        }
        if (*selftest) {
            // audits are independent; dispatch them to a pool and assemble
            // the report in a fixed order
            std::vector<std::future<k3::AuditReport>> futures;
            for (const auto& id : k3::case_ids())
                futures.push_back(std::async(std::launch::async, [id, cfg] {
                    return k3::verify_case(id, cfg);
                }));
            for (const auto& id : k3::nonexistence_ids())
                futures.push_back(std::async(std::launch::async, [id, cfg] {
                    return k3::audit_nonexistence(id, cfg);
                }));
            std::vector<k3::AuditReport> reports;
            for (auto& f : futures) reports.push_back(f.get());
            return run_reports(reports, out);
        }
    } catch (const k3::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
