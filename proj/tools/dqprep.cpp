// dqprep: DQBF preprocessor command line front end.
//
// Exit codes: 0 preprocessed (verdict unknown), 10 SAT, 20 UNSAT,
// 1 usage or input error, 2 failed oracle verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dqprep/dqdimacs.hpp"
#include "dqprep/fuzz.hpp"
#include "dqprep/oracle.hpp"
#include "dqprep/pipeline.hpp"

namespace {

using namespace dqprep;

constexpr int exit_unknown = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification = 2;
constexpr int exit_sat = 10;
constexpr int exit_unsat = 20;

void write_stats_text(std::ostream& out, const PipelineResult& result)
{
    for (const auto& r : result.reports) {
        out << "pass=" << r.pass << " round=" << r.round << " clauses_removed=" << r.clauses_removed
            << " clauses_shortened=" << r.clauses_shortened << " units_added=" << r.units_added
            << " equivalences_added=" << r.equivalences_added << " conflicts=" << r.conflicts
            << " seconds=" << r.seconds << '\n';
    }
    for (const auto& w : result.warnings) out << "warning=" << w << '\n';
    out << "verdict=" << verdict_name(result.verdict) << '\n';
    out << "rounds=" << result.rounds << '\n';
    out << "variables=" << result.formula.prefix().size() << '\n';
    out << "clauses=" << result.formula.num_clauses() << '\n';
    out << "literals=" << result.formula.literal_count() << '\n';
}

nlohmann::json stats_json(const PipelineResult& result)
{
    nlohmann::json passes = nlohmann::json::array();
    for (const auto& r : result.reports) {
        passes.push_back({{"pass", r.pass},
                          {"round", r.round},
                          {"clauses_removed", r.clauses_removed},
                          {"clauses_shortened", r.clauses_shortened},
                          {"units_added", r.units_added},
                          {"equivalences_added", r.equivalences_added},
                          {"conflicts", r.conflicts},
                          {"seconds", r.seconds}});
    }
    return {{"passes", passes},
            {"warnings", result.warnings},
            {"verdict", std::string(verdict_name(result.verdict))},
            {"rounds", result.rounds},
            {"variables", result.formula.prefix().size()},
            {"clauses", result.formula.num_clauses()},
            {"literals", result.formula.literal_count()}};
}

int exit_code(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Sat: return exit_sat;
    case Verdict::Unsat: return exit_unsat;
    default: return exit_unknown;
    }
}

/// Runs the verifying pipeline on generated formulas and checks decided verdicts against the oracle.
int run_fuzz(PipelineConfig config, std::size_t count)
{
    config.verify = true;
    FormulaFuzzer fuzzer(config.seed);
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Dqbf input = fuzzer.next();
        try {
            const auto result = run_pipeline(config, input);
            skipped += result.warnings.size();
            if (result.verdict != Verdict::Unknown) {
                const bool sat = oracle::solve_expansion(input, config.budget);
                if (sat != (result.verdict == Verdict::Sat)) {
                    std::cerr << "error: formula " << i << ": verdict " << verdict_name(result.verdict)
                              << " contradicts the oracle\n"
                              << emit_dqdimacs(input);
                    return exit_verification;
                }
            }
        } catch (const VerificationError& e) {
            std::cerr << "error: formula " << i << ": " << e.what() << '\n' << e.counterexample();
            return exit_verification;
        } catch (const BudgetError&) {
            ++skipped;
        }
    }
    std::cerr << "fuzz_formulas=" << count << '\n' << "fuzz_seed=" << config.seed << '\n'
              << "fuzz_skipped_checks=" << skipped << '\n';
    return exit_unknown;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DQBF preprocessor: universal reduction, unit propagation, UPLA, vivification and DQRAT+ "
                 "elimination on DQDIMACS input"};

    std::string input_path;
    std::string passes_csv = "ur,up,upla,vivify,dqrat";
    PipelineConfig config;
    std::size_t fuzz_count = 0;
    std::string out_path;
    std::string stats_json_path;

    app.add_option("input", input_path, "DQDIMACS file (standard input if omitted or '-')");
    app.add_option("--passes", passes_csv, "Comma separated passes: ur,up,upla,vivify,dqrat");
    app.add_option("--max-rounds", config.max_rounds, "Maximal number of rounds over all passes")
        ->check(CLI::PositiveNumber);
    app.add_option("--vivify-budget", config.vivify_budget, "Propagation steps per clause during vivification");
    app.add_flag("--upla-existential-only", config.upla_existential_only, "Probe only existential variables");
    app.add_flag("--verify", config.verify, "Check every pass against the brute-force oracle");
    app.add_option("--fuzz", fuzz_count, "Process N random formulas instead of an input file");
    app.add_option("--seed", config.seed, "Seed of the formula generator");
    app.add_option("--out", out_path, "Write the preprocessed formula here instead of standard output");
    app.add_option("--stats-json", stats_json_path, "Write statistics as JSON here instead of text to standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        config.passes = parse_pass_list(passes_csv);
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (fuzz_count > 0) return run_fuzz(config, fuzz_count);

    ParseResult parsed;
    try {
        if (input_path.empty() || input_path == "-") {
            parsed = parse_dqdimacs(std::cin);
        } else {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "error: cannot open '" << input_path << "'\n";
                return exit_usage;
            }
            parsed = parse_dqdimacs(in);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    for (const auto& d : parsed.diagnostics) std::cerr << "warning: line " << d.line << ": " << d.message << '\n';

    PipelineResult result;
    try {
        result = run_pipeline(config, std::move(parsed.formula));
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << '\n' << e.counterexample();
        return exit_verification;
    }

    if (out_path.empty()) {
        write_dqdimacs(std::cout, result.formula);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return exit_usage;
        }
        write_dqdimacs(out, result.formula);
    }

    if (stats_json_path.empty()) {
        write_stats_text(std::cerr, result);
    } else {
        std::ofstream stats(stats_json_path);
        if (!stats) {
            std::cerr << "error: cannot write '" << stats_json_path << "'\n";
            return exit_usage;
        }
        stats << stats_json(result).dump(2) << '\n';
    }
    return exit_code(result.verdict);
}
