#include "goldbach/harness.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace goldbach;

namespace {

const PrimeTable& shared_table() {
    static const PrimeTable table(500000);
    return table;
}

} // namespace

TEST_CASE("fixture shapes match the published tables") {
    CHECK(table1_fixture().size() == 5);
    CHECK(table2_fixture().size() == 40);
    CHECK(table3_fixture().size() == 40);
    CHECK(table4_fixture().size() == 12);

    for (const auto& row : table2_fixture()) {
        std::uint64_t product = 1;
        for (std::uint64_t p : row.factors)
            product *= p;
        CHECK(product == row.n);
    }
    // Table 3 keys are exactly the Table 2 values.
    REQUIRE(table3_fixture().size() == table2_fixture().size());
}

TEST_CASE("run_table2 matches everywhere except the documented misprint") {
    const auto rows = run_table2(shared_table());
    REQUIRE(rows.size() == 40);
    int errata = 0;
    for (const auto& row : rows) {
        if (row.status == RowStatus::Erratum) {
            ++errata;
            CHECK(row.inputs == "n=1230");
            CHECK(row.computed.as_double() == 88);
            CHECK(row.paper.as_double() == 87);
            CHECK(row.documented_erratum);
        } else {
            CHECK(row.status == RowStatus::Match);
        }
    }
    CHECK(errata == 1);
    CHECK(exit_code_for(rows) == 0);
}

TEST_CASE("run_table3 flags exactly the documented errata") {
    const auto rows = run_table3(shared_table());
    REQUIRE(rows.size() == 40);
    std::vector<std::string> erratum_inputs;
    for (const auto& row : rows) {
        if (row.status == RowStatus::Erratum) {
            erratum_inputs.push_back(row.inputs);
            CHECK(row.documented_erratum);
        }
    }
    CHECK(erratum_inputs ==
          std::vector<std::string>{"n=42", "n=714", "n=798", "n=858"});

    for (const auto& row : rows) {
        if (row.inputs == "n=42") {
            CHECK(row.computed.as_scaled2() == 10000); // 100.00
            CHECK(row.paper.as_scaled2() == 8000);
        }
        if (row.inputs == "n=8778") {
            CHECK(row.status == RowStatus::Match);
            CHECK(row.computed.as_scaled2() == 4919);
        }
        if (row.inputs == "n=858")
            CHECK(row.computed.as_scaled2() == 6000); // 60.00
    }
    CHECK(exit_code_for(rows) == 0);
}

TEST_CASE("run_table1 small-sample rows never gate") {
    StatRunConfig config;
    config.trials = 10;
    config.seed = 3;
    config.digit_list = {20};
    const auto result = run_table1(config);
    REQUIRE(result.rows.size() == 1);
    const auto& row = result.rows[0];
    CHECK(row.experiment == "table1");
    CHECK(row.inputs == "d=20");
    CHECK(row.status == RowStatus::Statistical);
    CHECK_FALSE(row.out_of_model);
    CHECK(row.prediction.as_double() == doctest::Approx(46.05).epsilon(0.001));
    CHECK_FALSE(row.paper.has_value()); // 20 is not a published row
    CHECK(result.mean_by_digits.at(20) > 0);
}

TEST_CASE("run_table4 produces cells, minima, and improvement rows") {
    StatRunConfig config;
    config.trials = 5;
    config.seed = 11;
    config.digit_list = {20};
    config.pa_digit_list = {4, 5};
    const auto result = run_table4(config, true);

    // 2 cells x (mean + min) + 1 improvement row.
    REQUIRE(result.rows.size() == 5);
    CHECK(result.mean_by_cell.at({20, 4}) > 0);
    CHECK(result.mean_by_cell.at({20, 5}) > 0);
    CHECK(result.min_by_cell.at({20, 4}) >= 1);
    CHECK(result.baseline_mean_by_digits.at(20) > 0);
    CHECK(result.improvement_by_digits.at(20) > 0);

    REQUIRE(result.trial_logs.size() == 10);
    for (const auto& log : result.trial_logs) {
        CHECK(log.p_a + log.p_b == log.n);
        CHECK(log.attempts >= 1);
    }
}

TEST_CASE("run_verify claim rows") {
    const auto rows = run_verify(shared_table(), 1000);
    bool saw_inequality = false, saw_largest = false, saw_productform = false;
    int local_max_rows = 0;
    for (const auto& row : rows) {
        if (row.inputs.find("h>=g") != std::string::npos) {
            saw_inequality = true;
            CHECK(row.status == RowStatus::Match);
            CHECK(row.computed.as_double() == 0);
        }
        if (row.inputs.find("largest equality") != std::string::npos) {
            saw_largest = true;
            CHECK(row.computed.as_double() == 210);
            CHECK(row.status == RowStatus::Match);
        }
        if (row.inputs.find("productform") != std::string::npos) {
            saw_productform = true;
            CHECK(row.status == RowStatus::Erratum);
            CHECK(row.documented_erratum); // claim contradicted, on file
            CHECK(row.computed.as_double() == 6);
        }
        if (row.inputs.find("local max") != std::string::npos) {
            ++local_max_rows;
            if (row.inputs == "claim=local max n=6") {
                CHECK(row.status == RowStatus::Erratum);
                CHECK(row.documented_erratum);
            } else {
                CHECK(row.status == RowStatus::Match);
            }
        }
    }
    CHECK(saw_inequality);
    CHECK(saw_largest);
    CHECK(saw_productform);
    CHECK(local_max_rows == 3); // 6, 30, 210 within limit 1000
    CHECK(exit_code_for(rows) == 0);
}

TEST_CASE("CSV rendering and sorting") {
    CHECK(render_csv({}) == "experiment,inputs,computed,paper,abs_diff,status,prediction\n");

    ReportRow a;
    a.experiment = "table3";
    a.inputs = "n=1110";
    a.computed = CellValue::fixed2(6429);
    a.status = RowStatus::Match;
    ReportRow b;
    b.experiment = "table3";
    b.inputs = "n=114";
    b.computed = CellValue::integer(13);
    b.status = RowStatus::Info;
    ReportRow c;
    c.experiment = "table1";
    c.inputs = "d=45";
    c.computed = CellValue::real(103.6);
    c.status = RowStatus::Statistical;
    c.prediction = CellValue::real(103.6);

    const std::string csv = render_csv({a, b, c});
    const std::string expected =
        "experiment,inputs,computed,paper,abs_diff,status,prediction\n"
        "table1,d=45,103.60,,,Statistical,103.60\n"
        "table3,n=114,13,,,Info,\n"
        "table3,n=1110,64.29,,,Match,\n";
    CHECK(csv == expected);
}

TEST_CASE("emit_csv writes exactly the rendered bytes") {
    const auto rows = run_table2(shared_table());
    const auto path = std::filesystem::temp_directory_path() / "goldbach_t2_test.csv";
    emit_csv(rows, path.string());
    std::ifstream file(path, std::ios::binary);
    std::string contents((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
    CHECK(contents == render_csv(rows));
    std::filesystem::remove(path);
}

TEST_CASE("re-running an experiment reproduces bytes; workers do not matter") {
    StatRunConfig config;
    config.trials = 8;
    config.seed = 21;
    config.digit_list = {18};
    config.pa_digit_list = {4};

    const auto first = run_table4(config);
    const auto second = run_table4(config);
    CHECK(render_csv(first.rows) == render_csv(second.rows));

    StatRunConfig parallel = config;
    parallel.jobs = 4;
    const auto third = run_table4(parallel);
    CHECK(render_csv(first.rows) == render_csv(third.rows));
}

TEST_CASE("exit codes") {
    ReportRow match;
    match.status = RowStatus::Match;

    ReportRow documented;
    documented.status = RowStatus::Erratum;
    documented.documented_erratum = true;

    ReportRow unexpected;
    unexpected.status = RowStatus::Erratum;

    ReportRow drifted;
    drifted.status = RowStatus::Statistical;
    drifted.out_of_model = true;

    CHECK(exit_code_for({match}) == 0);
    CHECK(exit_code_for({match, documented}) == 0);
    CHECK(exit_code_for({match, unexpected}) == 2);
    CHECK(exit_code_for({match, drifted}) == 3);
    CHECK(exit_code_for({drifted, unexpected}) == 2);
}

TEST_CASE("independent oracles agree with production analytics") {
    const auto& t = shared_table();
    for (std::uint64_t n : {30ULL, 42ULL, 210ULL, 858ULL, 1230ULL}) {
        CHECK(brute_force_goldbach_count(n) == goldbach_g(t, n));
        CHECK(direct_candidate_count(n) == candidate_h(t, n));
    }
}
