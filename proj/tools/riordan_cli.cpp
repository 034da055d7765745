#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riordan/commutator.hpp"
#include "riordan/derived.hpp"
#include "riordan/errors.hpp"
#include "riordan/rational.hpp"
#include "riordan/riordan.hpp"
#include "riordan/schroeder.hpp"
#include "riordan/serialize.hpp"
#include "riordan/series.hpp"
#include "riordan/subgroups.hpp"
#include "riordan/suites.hpp"

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw riordan::InvalidDocument("cannot open " + path);
    try {
        json doc;
        in >> doc;
        return doc;
    } catch (const json::exception& e) {
        throw riordan::InvalidDocument(path + " does not hold valid JSON: " + e.what());
    }
}

// inputs wider than the requested order are clipped; narrower ones keep
// their own window, and emitted documents echo the order actually guaranteed
riordan::Series load_series(const std::string& path, int order) {
    riordan::Series s = riordan::series_from_doc(load_json(path));
    return s.trunc_order() > order ? riordan::truncated(s, order) : s;
}

riordan::RiordanPair load_pair(const std::string& path, int order) {
    riordan::RiordanPair p = riordan::pair_from_doc(load_json(path));
    if (p.trunc_order() <= order) return p;
    return riordan::RiordanPair(riordan::truncated(p.d(), order),
                                riordan::truncated(p.h(), order));
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json certificate_node_doc(const riordan::DerivedCertificate::Node& node) {
    json doc;
    doc["pair"] = riordan::pair_doc(node.pair);
    doc["level"] = node.level;
    doc["verified_order"] = node.verified_order;
    doc["left"] = node.left ? certificate_node_doc(*node.left) : json();
    doc["right"] = node.right ? certificate_node_doc(*node.right) : json();
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Riordan group calculator"};
    // --d and --h are taken by the series options, so the help flag stays long-only
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    int order = 16;
    int exit_code = 0;

    std::string left_path, right_path, pair_path, series_path, d_path, h_path;
    std::string tag_text, r_text = "2", lambda_text = "1", suite_name;
    int row = 0, col = 0, size = 0, level_n = 1, length_k = 0, max_k = 12, seeds = 20;

    auto* mul = app.add_subcommand("mul", "product of two pairs");
    mul->add_option("--left", left_path, "pair document")->required();
    mul->add_option("--right", right_path, "pair document")->required();
    mul->add_option("--order", order, "truncation order")->capture_default_str();
    mul->callback([&] {
        emit(riordan::pair_doc(
            riordan::multiply(load_pair(left_path, order), load_pair(right_path, order))));
    });

    auto* inv = app.add_subcommand("inv", "group inverse of a pair");
    inv->add_option("--pair", pair_path, "pair document")->required();
    inv->add_option("--order", order, "truncation order")->capture_default_str();
    inv->callback([&] { emit(riordan::pair_doc(riordan::inverse(load_pair(pair_path, order)))); });

    auto* apply_cmd = app.add_subcommand("apply", "action of a pair on a series");
    apply_cmd->add_option("--pair", pair_path, "pair document")->required();
    apply_cmd->add_option("--series", series_path, "series document")->required();
    apply_cmd->add_option("--order", order, "truncation order")->capture_default_str();
    apply_cmd->callback([&] {
        emit(riordan::series_doc(
            riordan::apply(load_pair(pair_path, order), load_series(series_path, order))));
    });

    auto* aseq = app.add_subcommand("aseq", "A-sequence of a pair");
    aseq->add_option("--pair", pair_path, "pair document")->required();
    aseq->add_option("--order", order, "truncation order")->capture_default_str();
    aseq->callback(
        [&] { emit(riordan::series_doc(riordan::a_sequence(load_pair(pair_path, order)))); });

    auto* entry = app.add_subcommand("entry", "single matrix entry of a pair");
    entry->add_option("--pair", pair_path, "pair document")->required();
    entry->add_option("--row", row, "row index")->required();
    entry->add_option("--col", col, "column index")->required();
    entry->add_option("--order", order, "truncation order")->capture_default_str();
    entry->callback([&] {
        std::cout << riordan::rat_to_string(load_pair(pair_path, order).entry(row, col)) << "\n";
    });

    auto* project_cmd = app.add_subcommand("project", "leading block of a pair's matrix");
    project_cmd->add_option("--pair", pair_path, "pair document")->required();
    project_cmd->add_option("--size", size, "block size parameter n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    project_cmd->add_option("--order", order, "truncation order")->capture_default_str();
    project_cmd->callback([&] {
        riordan::FiniteRiordanMatrix block =
            riordan::project(load_pair(pair_path, order), size);
        json rows = json::array();
        for (const auto& r : block.rows()) {
            json row_doc = json::array();
            for (const riordan::Rat& v : r) row_doc.push_back(riordan::rat_to_string(v));
            rows.push_back(std::move(row_doc));
        }
        emit(json{{"size", block.size_parameter()}, {"rows", std::move(rows)}});
    });

    auto* member = app.add_subcommand("member", "subgroup membership of a pair");
    member->add_option("--tag", tag_text, "toeplitz | associated | gk:K | derivedR:n | derivedA:n")
        ->required();
    member->add_option("--d", d_path, "series document for d")->required();
    member->add_option("--h", h_path, "series document for h")->required();
    member->add_option("--order", order, "truncation order")->capture_default_str();
    member->callback([&] {
        riordan::SubgroupTag tag = riordan::SubgroupTag::parse(tag_text);
        riordan::RiordanPair p(load_series(d_path, order), load_series(h_path, order));
        std::cout << (riordan::is_member(p, tag).member ? "true" : "false") << "\n";
    });

    auto* schroeder = app.add_subcommand("schroeder", "solve d*u(h) = lambda*u");
    schroeder->add_option("--d", d_path, "series document for d")->required();
    schroeder->add_option("--h", h_path, "series document for h")->required();
    schroeder->add_option("--order", order, "truncation order")->capture_default_str();
    schroeder->callback([&] {
        riordan::Series d = load_series(d_path, order);
        riordan::Series h = load_series(h_path, order);
        riordan::SchroederProblem prob = riordan::normalize(d, h);
        json doc;
        doc["lambda"] = riordan::rat_to_string(d.coefficient(0));
        riordan::SchroederResult res = riordan::solve(prob);
        if (const auto* sol = std::get_if<riordan::SchroederSolution>(&res)) {
            doc["solvable"] = true;
            doc["case"] = sol->case_used == riordan::SchroederCase::UnitMultiplier
                              ? "unit-multiplier"
                              : "shifted";
            doc["k"] = sol->k;
            doc["u"] = riordan::series_doc(sol->u);
        } else {
            doc["solvable"] = false;
            doc["violating_index"] = std::get<riordan::NoSolution>(res).violating_index;
        }
        emit(doc);
    });

    auto* dd = app.add_subcommand("decompose-diag", "bracket factorization over a diagonal pair");
    dd->add_option("--pair", pair_path, "pair document for (1, g)")->required();
    dd->add_option("--r", r_text, "diagonal multiplier")->capture_default_str();
    dd->add_option("--order", order, "truncation order")->capture_default_str();
    dd->callback([&] {
        emit(riordan::witness_doc(
            riordan::decompose_diag(load_pair(pair_path, order), riordan::rat_from_string(r_text))));
    });

    auto* ds = app.add_subcommand("decompose-shift", "bracket factorization over x + lambda x^q");
    ds->add_option("--pair", pair_path, "pair document for (1, g)")->required();
    ds->add_option("--n", level_n, "level: g lies in G_{2^n}")->required();
    ds->add_option("--lambda", lambda_text, "shift coefficient")->capture_default_str();
    ds->add_option("--order", order, "truncation order")->capture_default_str();
    ds->callback([&] {
        emit(riordan::witness_doc(riordan::decompose_shift(
            load_pair(pair_path, order), level_n, riordan::rat_from_string(lambda_text))));
    });

    auto* dr = app.add_subcommand("decompose-riordan", "bracket factorization one derived level down");
    dr->add_option("--pair", pair_path, "pair document")->required();
    dr->add_option("--n", level_n, "derived level of the input")->required();
    dr->add_option("--order", order, "truncation order")->capture_default_str();
    dr->callback([&] {
        emit(riordan::witness_doc(riordan::decompose_riordan(load_pair(pair_path, order), level_n)));
    });

    auto* certify = app.add_subcommand("certify", "recursive bracket certificate down to leaves");
    certify->add_option("--pair", pair_path, "pair document for (1, g)")->required();
    certify->add_option("--n", level_n, "depth: g lies in G_{2^n}")->required();
    certify->add_option("--order", order, "truncation order")->capture_default_str();
    certify->callback([&] {
        riordan::DerivedCertificate cert =
            riordan::certify_associated(load_pair(pair_path, order), level_n);
        emit(json{{"depth", cert.depth}, {"root", certificate_node_doc(*cert.root)}});
    });

    auto* dl = app.add_subcommand("derived-length", "derived length of the size-k group");
    dl->add_option("--k", length_k, "size parameter")->required()->check(CLI::NonNegativeNumber);
    dl->add_option("--order", order, "truncation order")->capture_default_str();
    dl->callback([&] { std::cout << riordan::derived_length(length_k) << "\n"; });

    auto* dt = app.add_subcommand("derived-table", "derived lengths for k = 0..max-k");
    dt->add_option("--max-k", max_k, "largest size parameter")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    dt->add_option("--order", order, "truncation order")->capture_default_str();
    dt->callback([&] {
        riordan::DerivedLengthTable table = riordan::derived_table(max_k);
        for (std::size_t i = 0; i < table.values.size(); ++i) {
            std::cout << (i ? " " : "") << table.values[i];
        }
        std::cout << "\n";
    });

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite_name, "one of the named property suites")->required();
    verify->add_option("--seeds", seeds, "number of cases")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--order", order, "truncation order")->capture_default_str();
    verify->callback([&] {
        riordan::SuiteReport report = riordan::run_suite(suite_name, seeds, order);
        json failures = json::array();
        for (const riordan::CaseFailure& f : report.failures) {
            failures.push_back(json{{"seed", f.seed}, {"message", f.message}});
        }
        emit(json{{"suite", report.suite},
                  {"order", report.order},
                  {"cases", report.cases_run},
                  {"failures", std::move(failures)},
                  {"notes", report.notes},
                  {"wall_seconds", report.wall_seconds},
                  {"ok", report.ok()}});
        if (!report.ok()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const riordan::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
