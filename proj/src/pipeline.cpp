#include "dqprep/pipeline.hpp"

#include <chrono>
#include <tuple>

#include "dqprep/dqdimacs.hpp"
#include "dqprep/propagation.hpp"

namespace dqprep {

namespace {

struct PassOutput
{
    Dqbf formula;
    PassReport report;
    std::vector<Literal> units;
    bool up_conflict = false;
};

Dqbf unsat_formula(const Prefix& prefix)
{
    return Dqbf(prefix, {Clause{}});
}

std::size_t count_new(const Dqbf& before, const Dqbf& after)
{
    std::size_t count = 0;
    for (const auto& clause : after.clauses()) count += before.contains_clause(clause) ? 0 : 1;
    return count;
}

PassOutput run_pass(Pass pass, const PipelineConfig& config, const Dqbf& formula)
{
    PassOutput out;
    switch (pass) {
    case Pass::UniversalReduction: {
        const auto start = std::chrono::steady_clock::now();
        out.formula = universal_reduce(formula);
        out.report.clauses_shortened = count_new(formula, out.formula);
        out.report.clauses_removed = formula.num_clauses() - out.formula.num_clauses();
        if (out.formula.has_empty_clause()) out.report.conflicts = 1;
        out.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        break;
    }
    case Pass::UnitPropagation: {
        const auto start = std::chrono::steady_clock::now();
        auto outcome = unit_propagate(formula);
        if (outcome.conflict()) {
            out.up_conflict = true;
            out.formula = unsat_formula(formula.prefix());
            out.report.conflicts = 1;
        } else {
            out.formula = std::move(outcome.result);
            out.units = std::move(outcome.units);
            out.report.units_added = out.units.size();
            out.report.clauses_shortened = count_new(formula, out.formula);
            out.report.clauses_removed = formula.num_clauses() - out.formula.num_clauses()
                                         + out.report.clauses_shortened;
        }
        out.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        break;
    }
    case Pass::Upla: std::tie(out.formula, out.report) = upla_pass(formula, config.upla_existential_only); break;
    case Pass::Vivify: std::tie(out.formula, out.report) = vivify_pass(formula, config.vivify_budget); break;
    case Pass::Dqrat: std::tie(out.formula, out.report) = dqrat_eliminate_pass(formula); break;
    }
    out.report.pass = std::string(pass_name(pass));
    return out;
}

[[noreturn]] void fail(Pass pass, unsigned round, const std::string& relation, const Dqbf& before, const Dqbf& after)
{
    const std::string what = std::string(pass_name(pass)) + " in round " + std::to_string(round)
                             + " does not preserve " + relation;
    throw VerificationError(what, "c before\n" + emit_dqdimacs(before) + "c after\n" + emit_dqdimacs(after));
}

void verify_pass(Pass pass, unsigned round, const PipelineConfig& config, const Dqbf& before, const PassOutput& out,
                 std::vector<std::string>& warnings)
{
    try {
        switch (pass) {
        case Pass::UnitPropagation:
            if (out.up_conflict) {
                if (oracle::solve_expansion(before, config.budget)) fail(pass, round, "unsatisfiability", before, out.formula);
            } else {
                // the propagated variables are gone from the prefix; compare
                // against the residual plus the units under the old prefix
                Dqbf restored(before.prefix(), out.formula.clauses());
                for (const Literal unit : out.units) restored.add_clause(Clause{unit});
                if (!oracle::equivalent(before, restored, config.budget)) fail(pass, round, "equivalence", before, restored);
            }
            break;
        case Pass::Dqrat:
            if (!oracle::equisatisfiable(before, out.formula, config.budget)) {
                fail(pass, round, "satisfiability", before, out.formula);
            }
            break;
        default:
            if (!oracle::equivalent(before, out.formula, config.budget)) fail(pass, round, "equivalence", before, out.formula);
            break;
        }
    } catch (const BudgetError& e) {
        warnings.push_back("verification of " + std::string(pass_name(pass)) + " in round " + std::to_string(round)
                           + " skipped: " + e.what());
    }
}

} // namespace

std::string_view pass_name(Pass pass) noexcept
{
    switch (pass) {
    case Pass::UniversalReduction: return "ur";
    case Pass::UnitPropagation: return "up";
    case Pass::Upla: return "upla";
    case Pass::Vivify: return "vivify";
    case Pass::Dqrat: return "dqrat";
    }
    return "?";
}

std::string_view verdict_name(Verdict verdict) noexcept
{
    switch (verdict) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::vector<Pass> parse_pass_list(std::string_view csv)
{
    std::vector<Pass> passes;
    while (!csv.empty()) {
        const auto comma = csv.find(',');
        const auto name = csv.substr(0, comma);
        csv = comma == std::string_view::npos ? std::string_view{} : csv.substr(comma + 1);
        bool found = false;
        for (const Pass p : {Pass::UniversalReduction, Pass::UnitPropagation, Pass::Upla, Pass::Vivify, Pass::Dqrat}) {
            if (pass_name(p) == name) {
                passes.push_back(p);
                found = true;
            }
        }
        if (!found) throw ContractViolation("unknown pass '" + std::string(name) + "'");
    }
    if (passes.empty()) throw ContractViolation("pass list is empty");
    return passes;
}

PipelineResult run_pipeline(const PipelineConfig& config, Dqbf formula)
{
    if (config.passes.empty()) throw ContractViolation("pass list is empty");
    if (config.max_rounds == 0) throw ContractViolation("max_rounds must be at least 1");

    PipelineResult result;
    auto decided = [&](const Dqbf& f) {
        if (f.has_empty_clause()) {
            result.verdict = Verdict::Unsat;
            return true;
        }
        if (f.num_clauses() == 0) {
            result.verdict = Verdict::Sat;
            return true;
        }
        return false;
    };

    if (!decided(formula)) {
        for (unsigned round = 1; round <= config.max_rounds; ++round) {
            result.rounds = round;
            const Dqbf start = formula;
            bool stop = false;
            for (const Pass pass : config.passes) {
                auto out = run_pass(pass, config, formula);
                out.report.round = round;
                if (config.verify) verify_pass(pass, round, config, formula, out, result.warnings);
                formula = std::move(out.formula);
                result.reports.push_back(out.report);
                if (decided(formula)) {
                    stop = true;
                    break;
                }
            }
            if (stop || formula == start) break;
        }
    }
    if (result.verdict == Verdict::Unsat) formula = unsat_formula(formula.prefix());
    result.formula = std::move(formula);
    return result;
}

} // namespace dqprep
