#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixport/figures.hpp"
#include "mixport/metrics.hpp"
#include "mixport/serialize.hpp"
#include "mixport/verify.hpp"

using namespace mixport;

TEST_CASE("figure CSVs are byte-stable and well formed") {
    const auto first = figures::generate_figures();
    const auto second = figures::generate_figures();
    REQUIRE(first.size() == 5);
    REQUIRE(second.size() == 5);
    for (std::size_t k = 0; k < first.size(); ++k) {
        CHECK(first[k].name == second[k].name);
        CHECK(first[k].csv == second[k].csv);
        CHECK(first[k].csv.rfind("param,abs_y,series,value\n", 0) == 0);
        // LF endings only.
        CHECK(first[k].csv.find('\r') == std::string::npos);
    }
}

TEST_CASE("figure landmarks") {
    const auto figs = figures::generate_figures();

    SUBCASE("fig1 intercept at |y| = 0 is 0.32") {
        const auto rows = figures::parse_figure_csv(figs[0].csv);
        REQUIRE(!rows.empty());
        CHECK(rows.front().series == "D12");
        CHECK(rows.front().abs_y == 0.0);
        CHECK(rows.front().param == 0.2);
        CHECK(rows.front().value == doctest::Approx(0.32).epsilon(1e-14));
        CHECK(rows.size() == 101);
    }

    SUBCASE("fig2 brackets the d12/d34 crossing") {
        const auto rows = figures::parse_figure_csv(figs[1].csv);
        std::vector<double> gap; // d12 - d34 per |y| point
        for (std::size_t k = 0; k + 1 < rows.size(); k += 2) {
            REQUIRE(rows[k].series == "D12");
            REQUIRE(rows[k + 1].series == "D34");
            gap.push_back(rows[k].value - rows[k + 1].value);
        }
        int sign_changes = 0;
        for (std::size_t k = 0; k + 1 < gap.size(); ++k) {
            if (gap[k] > 0.0 && gap[k + 1] < 0.0) {
                ++sign_changes;
            }
        }
        CHECK(sign_changes == 1);
        // The bracketing pair encloses the analytic crossing.
        const double y_star = std::sqrt(metrics::crossing_y2(0.4));
        bool bracketed = false;
        for (std::size_t k = 0; k + 1 < gap.size(); ++k) {
            if (gap[k] > 0.0 && gap[k + 1] < 0.0) {
                const double y_lo = rows[2 * k].abs_y;
                const double y_hi = rows[2 * (k + 1)].abs_y;
                bracketed = y_lo <= y_star && y_star <= y_hi;
            }
        }
        CHECK(bracketed);
    }

    SUBCASE("fig3/fig4 exhibit the d56 < d12 < d34 ordering") {
        for (const std::size_t idx : {std::size_t{2}, std::size_t{3}}) {
            const auto rows = figures::parse_figure_csv(figs[idx].csv);
            for (std::size_t k = 0; k + 2 < rows.size(); k += 3) {
                REQUIRE(rows[k].series == "D12");
                REQUIRE(rows[k + 1].series == "D34");
                REQUIRE(rows[k + 2].series == "D56");
                if (rows[k].abs_y > 0.0) {
                    CHECK(rows[k + 2].value < rows[k].value);
                    CHECK(rows[k].value < rows[k + 1].value);
                }
            }
        }
    }

    SUBCASE("fig5 contains the entropy intersection at (0.5, 2/3)") {
        const auto rows = figures::parse_figure_csv(figs[4].csv);
        bool r2_hit = false, r3_hit = false;
        for (const auto& row : rows) {
            if (row.series == "SL_r2" && std::abs(row.param - 0.5) < 1e-9) {
                r2_hit = true;
                CHECK(std::abs(row.value - 2.0 / 3.0) < 1e-12);
            }
            if (row.series == "SL_r3" && std::abs(row.param - 0.5) < 1e-9) {
                r3_hit = true;
                CHECK(std::abs(row.value - 2.0 / 3.0) < 1e-12);
            }
        }
        CHECK(r2_hit);
        CHECK(r3_hit);
    }
}

TEST_CASE("float formatting uses 17 significant digits") {
    CHECK(figures::format_float(0.1) == "0.10000000000000001");
    CHECK(figures::format_float(0.5) == "0.5");
    CHECK(figures::format_float(2.0 / 3.0) == "0.66666666666666663");
}

TEST_CASE("verify suites pass on the untampered build") {
    const verify::VerifyReport report = verify::run_all(12345, 200);
    CHECK(verify::all_asserted_pass(report));

    long converse_findings = 0;
    for (const auto& property : report.properties) {
        if (property.property_id == blockprops::PropertyId::P1Converse) {
            converse_findings = property.violations;
            CHECK(property.witness.has_value());
        }
    }
    CHECK(converse_findings > 0);

    for (const auto& suite : report.suites) {
        INFO(suite.name);
        if (suite.asserted) {
            CHECK(suite.failures == 0);
        }
    }
}

TEST_CASE("a tampered channel is caught by the exactness suite") {
    // Corner sign flipped: this is the other Bell state, a valid density
    // matrix, so only the oracle comparison can notice.
    ComplexMatrix flipped(4);
    flipped(0, 0) = 0.5;
    flipped(3, 3) = 0.5;
    flipped(0, 3) = 0.5;
    flipped(3, 0) = 0.5;
    const channels::Channel tampered{channels::Meps{}, DensityMatrix(flipped, Dims{2, 2}), true,
                                     std::nullopt};
    const verify::SuiteResult suite = verify::meps_exactness_suite(tampered, 7, 8);
    CHECK(suite.name == "meps_exactness");
    CHECK(suite.failures > 0);
}

TEST_CASE("verify report serializes with schema fields") {
    const verify::VerifyReport report = verify::run_all(7, 50);
    const serialize::json j = serialize::verify_report_to_json(report);
    CHECK(j["seed"] == 7);
    CHECK(j["samples"] == 50);
    CHECK(j.contains("properties"));
    CHECK(j.contains("suites"));
    CHECK(j["all_asserted_pass"].is_boolean());
    bool saw_witness = false;
    for (const auto& property : j["properties"]) {
        CHECK(property.contains("property_id"));
        CHECK(property.contains("samples"));
        CHECK(property.contains("violations"));
        CHECK(property.contains("worst_margin"));
        if (property["property_id"] == "P1_converse" && !property["witness"].is_null()) {
            saw_witness = true;
        }
    }
    CHECK(saw_witness);
}

TEST_CASE("teleport run serializes matrices as [re, im] pairs") {
    const channels::Channel channel = channels::build(channels::MemsRank2{0.6});
    const teleport::TeleportRun run = teleport::run(QubitState(0.5, 0.3), channel);
    const serialize::json j = serialize::run_to_json(run);
    CHECK(j["channel"] == "mems2:p1=0.6");
    REQUIRE(j["outcomes"].size() == 4);
    const auto& matrix = j["outcomes"][0]["bob_corrected"];
    REQUIRE(matrix.is_array());
    REQUIRE(matrix.size() == 2);
    CHECK(matrix[0][0].size() == 2); // [re, im]
    const double sum = j["outcomes"][0]["probability"].get<double>() +
                       j["outcomes"][1]["probability"].get<double>() +
                       j["outcomes"][2]["probability"].get<double>() +
                       j["outcomes"][3]["probability"].get<double>();
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
