// Command-line frontend: reproduces the reference tables, runs the claim
// verifier, generates primes, and prints partition stats. CSV goes to --out
// (stdout when omitted); exit codes: 0 ok, 2 unexpected erratum, 3 model
// tolerance violation, 4 configuration error.

#include "goldbach/harness.hpp"
#include "goldbach/errors.hpp"
#include "goldbach/natural.hpp"
#include "goldbach/numeric.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using goldbach::CellValue;
using goldbach::ConfigError;
using goldbach::NStrategy;
using goldbach::PrimeTable;
using goldbach::ReportRow;
using goldbach::StatRunConfig;

struct CliOptions {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::vector<int> digits;
    std::vector<int> pa_digits;
    std::string strategy = "primorial-multiple";
    int primorial_k = 6;
    int mr_rounds = 40;
    std::uint64_t limit = 100000;
    std::string out_path;
    std::string log_format;
    std::uint64_t partitions_n = 0;
    int jobs = 1;
};

NStrategy parse_strategy(const std::string& name) {
    if (name == "exact-primorial")
        return NStrategy::ExactPrimorial;
    if (name == "primorial-multiple")
        return NStrategy::PrimorialMultiple;
    if (name == "random-even")
        return NStrategy::RandomEven;
    throw ConfigError("unknown strategy: " + name);
}

void write_report(const std::vector<ReportRow>& rows, const std::string& out_path) {
    if (out_path.empty())
        std::cout << goldbach::render_csv(rows);
    else
        goldbach::emit_csv(rows, out_path);
}

void write_jsonl(const std::vector<goldbach::TrialLog>& logs, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open for writing: " + path);
    for (const auto& log : logs) {
        nlohmann::ordered_json line{
            {"trial", log.trial},
            {"n", goldbach::render_natural(log.n)},
            {"p_a", goldbach::render_natural(log.p_a)},
            {"p_b", goldbach::render_natural(log.p_b)},
            {"attempts", log.attempts},
        };
        file << line.dump() << '\n';
    }
}

StatRunConfig stat_config(const CliOptions& opt, std::vector<int> default_digits,
                          bool want_pa_digits) {
    StatRunConfig config;
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.jobs = opt.jobs;
    config.policy.mr_rounds = opt.mr_rounds;
    config.digit_list = opt.digits.empty() ? std::move(default_digits) : opt.digits;
    if (want_pa_digits && !opt.pa_digits.empty())
        config.pa_digit_list = opt.pa_digits;
    config.strategy = parse_strategy(opt.strategy);
    config.primorial_k = opt.primorial_k;
    return config;
}

int run(int argc, char** argv) {
    CLI::App app{"Goldbach-partition analytics and the GPGA prime generator"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_common = [&](CLI::App* sub, bool stats) {
        sub->add_option("--seed", opt.seed, "master seed");
        sub->add_option("--out", opt.out_path, "CSV output path (stdout when omitted)");
        if (stats) {
            sub->add_option("--trials", opt.trials, "trials per row");
            sub->add_option("--digits", opt.digits, "digit lengths")->delimiter(',');
            sub->add_option("--mr-rounds", opt.mr_rounds, "MR rounds above the deterministic bound");
            sub->add_option("--jobs", opt.jobs, "worker threads (output is identical for any count)");
        }
    };

    CLI::App* table1 = app.add_subcommand("table1", "baseline attempts per digit length");
    add_common(table1, true);

    CLI::App* table2 = app.add_subcommand("table2", "candidate partition counts h(n)");
    add_common(table2, false);

    CLI::App* table3 = app.add_subcommand("table3", "prime partition percentages");
    add_common(table3, false);

    CLI::App* table4 = app.add_subcommand("table4", "GPGA attempts per (d, da) cell");
    add_common(table4, true);
    table4->add_option("--pa-digits", opt.pa_digits, "known-prime digit lengths")->delimiter(',');
    table4->add_option("--strategy", opt.strategy,
                       "exact-primorial|primorial-multiple|random-even");
    table4->add_option("--primorial-k", opt.primorial_k, "primorial base index");
    table4->add_option("--log", opt.log_format, "jsonl: one JSON object per trial");

    CLI::App* verify = app.add_subcommand("verify", "claim verification scans");
    add_common(verify, false);
    verify->add_option("--limit", opt.limit, "scan limit (even n up to this bound)");

    CLI::App* gen = app.add_subcommand("gen", "generate one prime via GPGA");
    gen->add_option("--seed", opt.seed, "master seed");
    gen->add_option("--digits", opt.digits, "target digit length")->delimiter(',');
    gen->add_option("--pa-digits", opt.pa_digits, "known-prime digit length")->delimiter(',');
    gen->add_option("--strategy", opt.strategy,
                    "exact-primorial|primorial-multiple|random-even");
    gen->add_option("--primorial-k", opt.primorial_k, "primorial base index");
    gen->add_option("--mr-rounds", opt.mr_rounds, "MR rounds above the deterministic bound");
    gen->add_option("--log", opt.log_format, "jsonl: print the trial as a JSON object");

    CLI::App* partitions = app.add_subcommand("partitions", "stats and pairs for one n");
    partitions->add_option("--n", opt.partitions_n, "even n >= 4")->required();

    CLI11_PARSE(app, argc, argv);

    if (!opt.log_format.empty() && opt.log_format != "jsonl")
        throw ConfigError("unsupported --log format: " + opt.log_format);

    if (table1->parsed()) {
        auto result = goldbach::run_table1(stat_config(opt, {45, 50, 55, 60, 70}, false));
        write_report(result.rows, opt.out_path);
        return goldbach::exit_code_for(result.rows);
    }
    if (table2->parsed()) {
        PrimeTable table(490314);
        auto rows = goldbach::run_table2(table);
        write_report(rows, opt.out_path);
        return goldbach::exit_code_for(rows);
    }
    if (table3->parsed()) {
        PrimeTable table(490314);
        auto rows = goldbach::run_table3(table);
        write_report(rows, opt.out_path);
        return goldbach::exit_code_for(rows);
    }
    if (table4->parsed()) {
        const bool want_logs = opt.log_format == "jsonl";
        if (want_logs && opt.out_path.empty())
            throw ConfigError("--log jsonl requires --out (log goes to <out>.jsonl)");
        auto result = goldbach::run_table4(stat_config(opt, {45, 60}, true), want_logs);
        write_report(result.rows, opt.out_path);
        if (want_logs)
            write_jsonl(result.trial_logs, opt.out_path + ".jsonl");
        return goldbach::exit_code_for(result.rows);
    }
    if (verify->parsed()) {
        if (opt.limit < 250)
            throw ConfigError("verify: --limit must be >= 250");
        PrimeTable table(opt.limit + 2);
        auto rows = goldbach::run_verify(table, opt.limit);
        write_report(rows, opt.out_path);
        return goldbach::exit_code_for(rows);
    }
    if (gen->parsed()) {
        goldbach::GpgaConfig config;
        config.n_digits = opt.digits.empty() ? 45 : opt.digits.front();
        config.pa_digits = opt.pa_digits.empty() ? 6 : opt.pa_digits.front();
        config.n_strategy = parse_strategy(opt.strategy);
        config.primorial_k = opt.primorial_k;
        config.policy.mr_rounds = opt.mr_rounds;
        config.seed = opt.seed;
        goldbach::RandomStream rng(opt.seed, 0);
        auto record = goldbach::gpga_generate(config, rng);
        std::cout << goldbach::render_natural(record.p_b) << ' ' << record.attempts << '\n';
        if (opt.log_format == "jsonl") {
            nlohmann::ordered_json line{
                {"trial", 0},
                {"n", goldbach::render_natural(record.n)},
                {"p_a", goldbach::render_natural(record.p_a)},
                {"p_b", goldbach::render_natural(record.p_b)},
                {"attempts", record.attempts},
            };
            std::cout << line.dump() << '\n';
        }
        return 0;
    }
    if (partitions->parsed()) {
        const std::uint64_t n = opt.partitions_n;
        if (n < 4 || (n & 1))
            throw ConfigError("partitions: --n must be even and >= 4");
        PrimeTable table(n);
        auto stats = goldbach::partition_stats(table, n, true);
        std::cout << "n=" << stats.n << " g=" << stats.g << " h=" << stats.h << " percentage="
                  << goldbach::render_percentage_2dp(
                         goldbach::percentage_scaled_2dp(stats.g, stats.h))
                  << '\n';
        for (const auto& pair : *stats.pairs)
            std::cout << '(' << pair.q << ',' << pair.p << ")\n";
        return 0;
    }
    return 4;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
