#include "mixport/serialize.hpp"

#include <cmath>

namespace mixport {
namespace serialize {

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json outcome_to_json(const teleport::TeleportOutcome& outcome) {
    json j;
    j["outcome"] = teleport::outcome_name(outcome.outcome);
    j["probability"] = outcome.probability;
    j["degenerate"] = outcome.degenerate;
    j["bob_raw"] = outcome.bob_raw ? matrix_to_json(outcome.bob_raw->mat()) : json(nullptr);
    j["bob_corrected"] =
        outcome.bob_corrected ? matrix_to_json(outcome.bob_corrected->mat()) : json(nullptr);
    return j;
}

json run_to_json(const teleport::TeleportRun& run) {
    json j;
    j["input"] = {{"x", run.input.x}, {"y", {run.input.y.real(), run.input.y.imag()}}};
    j["channel"] = channels::to_text(run.channel);
    json outcomes = json::array();
    for (const auto& outcome : run.outcomes) {
        outcomes.push_back(outcome_to_json(outcome));
    }
    j["outcomes"] = std::move(outcomes);
    return j;
}

json property_report_to_json(const blockprops::PropertyReport& report) {
    json j;
    j["property_id"] = blockprops::property_name(report.property_id);
    j["asserted"] = blockprops::property_asserted(report.property_id);
    j["samples"] = report.samples;
    j["violations"] = report.violations;
    j["worst_margin"] = std::isfinite(report.worst_margin) ? json(report.worst_margin)
                                                           : json(nullptr);
    if (report.witness) {
        j["witness"] = matrix_to_json(*report.witness);
        j["witness_dims"] = {report.witness_dims.a, report.witness_dims.b};
    } else {
        j["witness"] = nullptr;
    }
    if (!report.links.empty()) {
        json links = json::array();
        for (const auto& link : report.links) {
            links.push_back({{"name", link.name},
                             {"violations", link.violations},
                             {"worst_margin", link.worst_margin}});
        }
        j["links"] = std::move(links);
    }
    return j;
}

json suite_result_to_json(const verify::SuiteResult& suite) {
    json j;
    j["name"] = suite.name;
    j["asserted"] = suite.asserted;
    j["checks"] = suite.checks;
    j["failures"] = suite.failures;
    j["max_abs_err"] = suite.max_abs_err;
    if (!suite.notes.empty()) {
        j["notes"] = suite.notes;
    }
    return j;
}

json verify_report_to_json(const verify::VerifyReport& report) {
    json j;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    json properties = json::array();
    for (const auto& property : report.properties) {
        properties.push_back(property_report_to_json(property));
    }
    j["properties"] = std::move(properties);
    json suites = json::array();
    for (const auto& suite : report.suites) {
        suites.push_back(suite_result_to_json(suite));
    }
    j["suites"] = std::move(suites);
    j["all_asserted_pass"] = verify::all_asserted_pass(report);
    return j;
}

} // namespace serialize
} // namespace mixport
