// Command line front end: classify or validate a manifold description, or
// run over a corpus directory. Exit codes: 0 success, 1 parse/structural
// failure, 2 semantic failure (invalid JSJ decomposition, missing order,
// corpus mismatch).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdvc/classify.hpp"
#include "gdvc/errors.hpp"
#include "gdvc/io.hpp"
#include "gdvc/jsj.hpp"
#include "gdvc/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStructural = 1;
constexpr int kExitSemantic = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct RunOutcome {
    int exit_code{kExitOk};
    gdvc::Report report;
};

/// Shared pipeline: read, parse, structural validation, semantic JSJ
/// validation, and (optionally) classification.
RunOutcome run_file(const std::string& path, bool classify) {
    RunOutcome outcome;
    const auto text = read_file(path);
    if (!text) {
        outcome.report.input_digest = gdvc::content_digest("");
        outcome.report.diagnostics.push_back({path, "cannot read file"});
        outcome.exit_code = kExitStructural;
        return outcome;
    }
    outcome.report.input_digest = gdvc::content_digest(*text);

    gdvc::ParseResult parsed = gdvc::parse_description(*text);
    if (!parsed.ok()) {
        outcome.report.diagnostics = parsed.diagnostics;
        outcome.exit_code = kExitStructural;
        return outcome;
    }
    const gdvc::ManifoldDescription& description = *parsed.description;

    bool jsj_failed = false;
    for (const gdvc::PrimeSummand& summand : description.summands) {
        if (const auto* jsj = std::get_if<gdvc::JsjSummand>(&summand)) {
            gdvc::JsjVerdict verdict = gdvc::validate_jsj(jsj->graph);
            jsj_failed = jsj_failed || !verdict.valid;
            outcome.report.jsj_verdicts.push_back(std::move(verdict));
        }
    }
    if (jsj_failed) {
        for (const gdvc::JsjVerdict& verdict : outcome.report.jsj_verdicts)
            for (const gdvc::JsjDiagnostic& diagnostic : verdict.diagnostics)
                outcome.report.diagnostics.push_back(
                    {diagnostic.where, "[" + diagnostic.rule + "] " + diagnostic.message});
        outcome.exit_code = kExitSemantic;
        return outcome;
    }

    if (!classify) return outcome;

    try {
        gdvc::DimResult result = gdvc::gdvc_manifold(description);
        outcome.report.clause = gdvc::clause_of(result);
        outcome.report.result = std::move(result);
        outcome.report.geometric_value = gdvc::gdvc_manifold_geometric(description);
        outcome.report.cross_check =
            *outcome.report.geometric_value == outcome.report.result->value;
    } catch (const gdvc::Error& error) {
        outcome.report.diagnostics.push_back({"/", error.what()});
        outcome.exit_code = kExitSemantic;
    }
    return outcome;
}

void emit(const RunOutcome& outcome, bool as_json, bool with_trace) {
    if (as_json) {
        std::cout << gdvc::report_to_json(outcome.report, with_trace);
        return;
    }
    const std::string text = gdvc::report_to_text(outcome.report, with_trace);
    if (outcome.exit_code == kExitOk)
        std::cout << text;
    else
        std::cerr << text;
}

int run_classify(const std::string& path, bool as_json, bool with_trace) {
    const RunOutcome outcome = run_file(path, /*classify=*/true);
    emit(outcome, as_json, with_trace);
    return outcome.exit_code;
}

int run_validate(const std::string& path, bool as_json) {
    RunOutcome outcome = run_file(path, /*classify=*/false);
    if (as_json) {
        std::cout << gdvc::report_to_json(outcome.report, false);
        return outcome.exit_code;
    }
    if (outcome.exit_code == kExitOk) {
        std::cout << "valid\n";
        for (const gdvc::JsjVerdict& verdict : outcome.report.jsj_verdicts)
            std::cout << "jsj: acylindrical, k = " << verdict.acylindricity_constant
                      << "\n";
    } else {
        std::cerr << gdvc::report_to_text(outcome.report, false);
    }
    return outcome.exit_code;
}

int run_corpus(const std::string& directory, bool as_json) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    std::error_code listing_error;
    for (const auto& entry : fs::directory_iterator(directory, listing_error)) {
        if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
    }
    if (listing_error) {
        std::cerr << "error: cannot list " << directory << ": "
                  << listing_error.message() << "\n";
        return kExitStructural;
    }
    std::sort(paths.begin(), paths.end());

    int worst = kExitOk;
    std::size_t matched = 0;
    std::size_t with_expectation = 0;
    nlohmann::json json_rows = nlohmann::json::array();

    for (const std::string& path : paths) {
        const RunOutcome outcome = run_file(path, /*classify=*/true);
        worst = std::max(worst, outcome.exit_code);

        std::optional<int> expected_value;
        std::optional<std::string> expected_clause;
        if (const auto text = read_file(path)) {
            const auto root =
                nlohmann::json::parse(*text, nullptr, /*allow_exceptions=*/false);
            if (root.is_object() && root.contains("expected") &&
                root.at("expected").is_object()) {
                const auto& expected = root.at("expected");
                if (expected.contains("gdvc") && expected.at("gdvc").is_number_integer())
                    expected_value = expected.at("gdvc").get<int>();
                if (expected.contains("clause") && expected.at("clause").is_string())
                    expected_clause = expected.at("clause").get<std::string>();
            }
        }

        std::string status;
        bool match = true;
        if (!outcome.report.result) {
            status = "ERROR";
            match = false;
        } else {
            if (expected_value || expected_clause) {
                ++with_expectation;
                match = (!expected_value || *expected_value == outcome.report.result->value) &&
                        (!expected_clause || *expected_clause == *outcome.report.clause);
                if (match)
                    ++matched;
                else
                    worst = std::max(worst, kExitSemantic);
                status = match ? "ok" : "MISMATCH";
            } else {
                status = "ok (no expectation)";
            }
        }

        if (as_json) {
            nlohmann::json row{{"path", path}, {"status", status}};
            if (outcome.report.result) {
                row["gdvc"] = outcome.report.result->value;
                row["clause"] = *outcome.report.clause;
            }
            if (expected_value) row["expected_gdvc"] = *expected_value;
            if (expected_clause) row["expected_clause"] = *expected_clause;
            json_rows.push_back(row);
        } else {
            std::cout << path << ": ";
            if (outcome.report.result)
                std::cout << "gdvc = " << outcome.report.result->value << " ["
                          << *outcome.report.clause << "] " << status << "\n";
            else
                std::cout << "ERROR\n";
        }
    }

    if (as_json) {
        std::cout << nlohmann::json{{"results", json_rows},
                                    {"matched", matched},
                                    {"with_expectation", with_expectation}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << matched << "/" << with_expectation << " expectations matched, "
                  << paths.size() << " files\n";
    }
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtually cyclic geometric dimension of closed oriented "
                 "3-manifold groups, from prime and JSJ decomposition data"};
    app.require_subcommand(1);

    std::string classify_path, validate_path, corpus_dir;
    bool classify_json = false, classify_trace = false;
    bool validate_json = false, corpus_json = false;

    CLI::App* classify =
        app.add_subcommand("classify", "compute the dimension of a description file");
    classify->add_option("file", classify_path, "description file")->required();
    classify->add_flag("--json", classify_json, "machine-readable report");
    classify->add_flag("--trace", classify_trace, "include the justification chain");

    CLI::App* validate =
        app.add_subcommand("validate", "structural and semantic validation only");
    validate->add_option("file", validate_path, "description file")->required();
    validate->add_flag("--json", validate_json, "machine-readable report");

    CLI::App* corpus =
        app.add_subcommand("corpus", "classify every .json file in a directory");
    corpus->add_option("dir", corpus_dir, "corpus directory")->required();
    corpus->add_flag("--json", corpus_json, "machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return run_classify(classify_path, classify_json, classify_trace);
        if (validate->parsed()) return run_validate(validate_path, validate_json);
        return run_corpus(corpus_dir, corpus_json);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitSemantic;
    }
}
