#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mqa/errors.hpp"
#include "mqa/harness.hpp"
#include "mqa/monoid.hpp"
#include "mqa/structure.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kReportVersion = 1;

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

ordered_json base_report(const std::string& command) {
    ordered_json j;
    j["report_version"] = kReportVersion;
    j["command"] = command;
    return j;
}

mqa::SpecialEdgeChoice choice_for(const mqa::MixedDataPtr& data, const std::string& mode,
                                  const std::string& choice_file) {
    if (mode == "least") return mqa::SpecialEdgeChoice::least(data);
    if (mode == "explicit-file") {
        std::ifstream in(choice_file);
        if (!in) throw mqa::ParseError("cannot open choice file: " + choice_file);
        nlohmann::json j;
        in >> j;
        std::map<std::string, std::string> by_vertex;
        for (const auto& [k, v] : j.items()) by_vertex[k] = v.get<std::string>();
        return mqa::SpecialEdgeChoice::explicit_map(data, by_vertex);
    }
    throw mqa::ValidationError("unknown --choice mode: " + mode);
}

ordered_json check_to_json(const mqa::CheckResult& r) {
    ordered_json j;
    j["name"] = r.name;
    j["status"] = r.status;
    if (!r.details.is_null()) j["details"] = r.details;
    return j;
}

int run_corpus(const std::string& path, mqa::CheckOptions opt) {
    std::ifstream in(path);
    if (!in) throw mqa::ParseError("cannot open corpus file: " + path);
    nlohmann::json manifest;
    try {
        in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw mqa::ParseError(std::string("invalid corpus JSON: ") + e.what());
    }
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    ordered_json report = base_report("corpus");
    report["corpus"] = path;
    ordered_json entries = ordered_json::array();
    bool all_ok = true;
    for (const auto& entry : manifest.at("entries")) {
        std::string name = entry.value("name", "");
        std::string qpath = (dir / entry.at("quiver").get<std::string>()).string();
        mqa::QuiverFile qf = mqa::load_quiver_file(qpath);
        ordered_json jentry;
        jentry["name"] = name;
        ordered_json checks = ordered_json::array();
        bool entry_ok = true;
        for (const auto& cname : entry.at("checks")) {
            std::string check = cname.get<std::string>();
            std::string expected = "pass";
            if (entry.contains("expected") && entry.at("expected").contains(check))
                expected = entry.at("expected").at(check).get<std::string>();
            mqa::CheckResult result = mqa::run_check(check, qf, opt);
            ordered_json jc = check_to_json(result);
            jc["expected"] = expected;
            bool met = result.status == expected;
            jc["met"] = met;
            if (!met) entry_ok = false;
            checks.push_back(jc);
        }
        jentry["checks"] = checks;
        jentry["ok"] = entry_ok;
        if (!entry_ok) all_ok = false;
        entries.push_back(jentry);
    }
    report["entries"] = entries;
    report["ok"] = all_ok;
    emit(report);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in mixed quiver algebras"};
    app.require_subcommand(1);

    std::string quiver_path, elem_text, elem_file, rep_path, corpus_path, choice_file;
    std::string choice_mode = "least";
    std::string set_ids, x_text, y_text;
    int order = 6;
    unsigned seed = 1;
    long long bound = -1;
    unsigned at_index = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "series truncation order")->capture_default_str();
        cmd->add_option("--seed", seed, "seed for randomized trials")->capture_default_str();
        cmd->add_option("--bound", bound, "monoid search bound (-1: 12 |E^0|)")
            ->capture_default_str();
        cmd->add_option("--choice", choice_mode, "special edge choice: least|explicit-file")
            ->capture_default_str();
        cmd->add_option("--choice-file", choice_file, "vertex->edge JSON for explicit-file");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a quiver document");
    validate->add_option("quiver", quiver_path)->required();

    CLI::App* lattice = app.add_subcommand("lattice", "hereditary saturated subsets");
    lattice->add_option("quiver", quiver_path)->required();

    CLI::App* quotient = app.add_subcommand("quotient", "quotient graph E/H");
    quotient->add_option("quiver", quiver_path)->required();
    quotient->add_option("--set", set_ids, "comma separated vertex ids for H");
    quotient->add_option("--at", at_index, "chain index: H = H_{i-1}");

    CLI::App* restrict_cmd = app.add_subcommand("restrict", "restriction graph E_H");
    restrict_cmd->add_option("quiver", quiver_path)->required();
    restrict_cmd->add_option("--set", set_ids, "comma separated vertex ids for H")->required();

    CLI::App* monoid = app.add_subcommand("monoid", "graph monoid M(E)");
    monoid->require_subcommand(1);
    CLI::App* monoid_nf = monoid->add_subcommand("nf", "normal form on acyclic quivers");
    monoid_nf->add_option("quiver", quiver_path)->required();
    monoid_nf->add_option("--elem", elem_text, "element as v:count,...")->required();
    CLI::App* monoid_eq = monoid->add_subcommand("eq", "bounded congruence test");
    monoid_eq->add_option("quiver", quiver_path)->required();
    monoid_eq->add_option("--x", x_text)->required();
    monoid_eq->add_option("--y", y_text)->required();
    monoid_eq->add_option("--bound", bound)->capture_default_str();
    CLI::App* monoid_ideals = monoid->add_subcommand("ideals", "order-ideal lattice");
    monoid_ideals->add_option("quiver", quiver_path)->required();
    monoid_ideals->add_option("--bound", bound)->capture_default_str();

    CLI::App* lpa_reduce = app.add_subcommand("lpa-reduce", "Leavitt normal form");
    lpa_reduce->add_option("quiver", quiver_path)->required();
    lpa_reduce->add_option("--elem", elem_text, "element text");
    lpa_reduce->add_option("--elem-file", elem_file, "file holding the element text");
    add_common(lpa_reduce);

    CLI::App* series_expand =
        app.add_subcommand("series-expand", "expand a linear representation");
    series_expand->add_option("quiver", quiver_path)->required();
    series_expand->add_option("--rep", rep_path, "representation JSON file")->required();
    add_common(series_expand);

    CLI::App* check_identities =
        app.add_subcommand("check-identities", "run every identity check on one quiver");
    check_identities->add_option("quiver", quiver_path)->required();
    add_common(check_identities);

    CLI::App* cut_cmd = app.add_subcommand("cut", "quotient re-indexing at a chain index");
    cut_cmd->add_option("quiver", quiver_path)->required();
    cut_cmd->add_option("--at", at_index, "index i with 1 <= i <= r")->required();
    cut_cmd->add_option("--elem", elem_text, "element text");
    cut_cmd->add_option("--elem-file", elem_file, "file holding the element text");

    CLI::App* corner_cmd = app.add_subcommand("corner", "corner re-indexing at a chain index");
    corner_cmd->add_option("quiver", quiver_path)->required();
    corner_cmd->add_option("--at", at_index, "index i with 0 <= i <= r")->required();
    corner_cmd->add_option("--elem", elem_text, "element text");
    corner_cmd->add_option("--elem-file", elem_file, "file holding the element text");

    CLI::App* corpus = app.add_subcommand("corpus", "run a corpus manifest");
    corpus->add_option("manifest", corpus_path)->required();
    add_common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            qf.mixed_data();  // also validates chain/tower compatibility
            ordered_json report = base_report("validate");
            report["quiver"] = quiver_path;
            report["vertices"] = qf.quiver->num_vertices();
            report["edges"] = qf.quiver->num_edges();
            report["has_chain"] = qf.chain.has_value();
            report["has_tower"] = qf.tower_spec.has_value();
            report["ok"] = true;
            emit(report);
            return 0;
        }
        if (*lattice) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::HsLattice lat = mqa::enumerate_lattice(qf.quiver);
            ordered_json report = base_report("lattice");
            report["quiver"] = quiver_path;
            ordered_json subsets = ordered_json::array();
            for (const auto& s : lat.sets) subsets.push_back(s.ids());
            report["count"] = lat.sets.size();
            report["subsets"] = subsets;
            report["ok"] = true;
            emit(report);
            return 0;
        }
        auto element_text = [&]() -> std::string {
            if (!elem_file.empty()) {
                std::ifstream in(elem_file);
                if (!in) throw mqa::ParseError("cannot open element file: " + elem_file);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                return text;
            }
            if (elem_text.empty())
                throw mqa::ValidationError("an element is required (--elem or --elem-file)");
            return elem_text;
        };
        auto parse_set = [&](const mqa::QuiverFile& qf) {
            std::vector<std::string> ids;
            std::string cur;
            for (char c : set_ids) {
                if (c == ',') {
                    if (!cur.empty()) ids.push_back(cur);
                    cur.clear();
                } else if (!std::isspace(static_cast<unsigned char>(c))) {
                    cur += c;
                }
            }
            if (!cur.empty()) ids.push_back(cur);
            return mqa::VertexSet::of_ids(qf.quiver, ids);
        };
        if (*quotient || *restrict_cmd) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::VertexSet h = mqa::VertexSet::empty(qf.quiver);
            if (*quotient && quotient->count("--at")) {
                if (!qf.chain) throw mqa::ValidationError("--at needs a chain in the file");
                if (at_index < 1 || at_index > qf.chain->r())
                    throw mqa::ValidationError("--at out of range");
                h = qf.chain->set(at_index - 1);
            } else {
                h = parse_set(qf);
            }
            mqa::QuiverPtr out = *quotient ? mqa::quotient_graph(h) : mqa::restriction_graph(h);
            ordered_json report = base_report(*quotient ? "quotient" : "restrict");
            report["quiver"] = quiver_path;
            report["H"] = h.ids();
            report["result"] = out->to_json();
            report["ok"] = true;
            emit(report);
            return 0;
        }
        if (*monoid_nf) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::MonoidElement x = mqa::MonoidElement::parse(qf.quiver, elem_text);
            ordered_json report = base_report("monoid nf");
            report["input"] = x.str();
            report["normal_form"] = mqa::normal_form_acyclic(x).str();
            report["ok"] = true;
            emit(report);
            return 0;
        }
        if (*monoid_eq) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::MonoidElement x = mqa::MonoidElement::parse(qf.quiver, x_text);
            mqa::MonoidElement y = mqa::MonoidElement::parse(qf.quiver, y_text);
            long long b = bound < 0 ? mqa::default_monoid_bound(qf.quiver) : bound;
            mqa::EqAnswer ans = mqa::equals_bounded(x, y, b);
            ordered_json report = base_report("monoid eq");
            report["x"] = x.str();
            report["y"] = y.str();
            report["bound"] = b;
            report["answer"] = ans == mqa::EqAnswer::yes  ? "yes"
                               : ans == mqa::EqAnswer::no ? "no"
                                                          : "unknown";
            report["ok"] = ans != mqa::EqAnswer::unknown;
            emit(report);
            return ans == mqa::EqAnswer::unknown ? 1 : 0;
        }
        if (*monoid_ideals) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::OrderIdealLattice lat = mqa::order_ideal_lattice(qf.quiver, bound);
            ordered_json report = base_report("monoid ideals");
            ordered_json sets = ordered_json::array();
            for (const auto& s : lat.ideal_vertex_sets) sets.push_back(s.ids());
            report["count"] = lat.ideal_vertex_sets.size();
            report["ideal_vertex_sets"] = sets;
            report["matches_hs_lattice"] = lat.matches_hs_lattice;
            report["inconclusive"] = lat.inconclusive;
            report["ok"] = lat.matches_hs_lattice && !lat.inconclusive;
            emit(report);
            return lat.inconclusive ? 1 : (lat.matches_hs_lattice ? 0 : 1);
        }
        if (*lpa_reduce) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::MixedDataPtr data = qf.mixed_data();
            mqa::LpaElement x = mqa::LpaElement::parse(data, element_text());
            mqa::SpecialEdgeChoice choice = choice_for(data, choice_mode, choice_file);
            ordered_json report = base_report("lpa-reduce");
            report["input"] = x.str();
            report["normal_form"] = mqa::reduce(x, choice).str();
            report["ok"] = true;
            emit(report);
            return 0;
        }
        if (*series_expand) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::MixedDataPtr data = qf.mixed_data();
            mqa::LinearRep rep = mqa::load_linear_rep_file(data, rep_path);
            mqa::TruncatedSeries s = mqa::expand(rep, order);
            ordered_json report = base_report("series-expand");
            report["rep"] = rep_path;
            report["order"] = order;
            report["series"] = s.str();
            report["mixed_valid"] = s.mixed_valid();
            report["ok"] = true;
            emit(report);
            return 0;
        }
        if (*check_identities) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::CheckOptions opt;
            opt.order = order;
            opt.seed = seed;
            opt.bound = bound;
            if (choice_mode == "explicit-file") {
                opt.choice = "explicit";
                std::ifstream in(choice_file);
                if (!in) throw mqa::ParseError("cannot open choice file: " + choice_file);
                nlohmann::json j;
                in >> j;
                for (const auto& [k, v] : j.items())
                    opt.explicit_choice[k] = v.get<std::string>();
            }
            ordered_json report = base_report("check-identities");
            report["quiver"] = quiver_path;
            ordered_json checks = ordered_json::array();
            bool ok = true;
            for (const auto& result : mqa::run_all_checks(qf, opt)) {
                checks.push_back(check_to_json(result));
                if (result.status == "fail") ok = false;
            }
            report["checks"] = checks;
            report["ok"] = ok;
            emit(report);
            return ok ? 0 : 1;
        }
        if (*cut_cmd || *corner_cmd) {
            mqa::QuiverFile qf = mqa::load_quiver_file(quiver_path);
            mqa::MixedDataPtr data = qf.mixed_data();
            mqa::LpaElement x = mqa::LpaElement::parse(data, element_text());
            mqa::LpaElement out = *cut_cmd ? mqa::cut(x, at_index) : mqa::corner(x, at_index);
            ordered_json report = base_report(*cut_cmd ? "cut" : "corner");
            report["at"] = at_index;
            report["input"] = x.str();
            report["result"] = out.str();
            report["target_vertices"] = out.data()->quiver->vertex_ids();
            report["ok"] = true;
            emit(report);
            return 0;
        }
        if (*corpus) {
            mqa::CheckOptions opt;
            opt.order = order;
            opt.seed = seed;
            opt.bound = bound;
            return run_corpus(corpus_path, opt);
        }
    } catch (const mqa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mqa::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mqa::LevelViolation& e) {
        // a level violation at the surface always comes from user input
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mqa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
