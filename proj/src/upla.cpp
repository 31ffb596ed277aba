#include "dqprep/techniques.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <string>
#include <unordered_set>

namespace dqprep {

namespace {

UplaFindings probe_with(Propagator& engine, VariableId var)
{
    const Dqbf& formula = engine.formula();
    if (!formula.prefix().contains(var)) {
        throw CompatibilityError("variable " + std::to_string(var.value()) + " is not in the prefix");
    }
    const VarSet abstracted = dep(formula, var);
    const Literal positive(var, false);
    const Literal negative(var, true);

    UplaFindings findings;
    findings.probed = var;
    const auto one = engine.run(std::span(&positive, 1), abstracted);
    const auto zero = engine.run(std::span(&negative, 1), abstracted);

    if (one.conflict()) findings.forced.push_back(negative);
    if (zero.conflict()) findings.forced.push_back(positive);
    std::sort(findings.forced.begin(), findings.forced.end());
    if (one.conflict() || zero.conflict()) return findings;

    const std::unordered_set<Literal> zero_units(zero.units.begin(), zero.units.end());
    for (const Literal kappa : one.units) {
        if (kappa.var() == var) continue;
        if (zero_units.contains(kappa)) {
            findings.common_units.push_back(kappa);
        } else if (zero_units.contains(~kappa)) {
            findings.equivalences.emplace_back(var, kappa);
        }
    }
    return findings;
}

} // namespace

UplaFindings upla_probe(const Dqbf& formula, VariableId var)
{
    Propagator engine(formula);
    return probe_with(engine, var);
}

Dqbf upla_apply(Dqbf formula, const UplaFindings& findings, PassReport* report)
{
    if (findings.both_conflict()) {
        if (report != nullptr) ++report->conflicts;
        return Dqbf(formula.prefix(), {Clause{}});
    }
    for (const Literal lit : findings.forced) {
        if (formula.add_clause(Clause{lit}) && report != nullptr) ++report->units_added;
    }
    for (const Literal lit : findings.common_units) {
        if (formula.add_clause(Clause{lit}) && report != nullptr) ++report->units_added;
    }
    for (const auto& [var, kappa] : findings.equivalences) {
        const Literal v(var, false);
        const bool first = formula.add_clause(Clause{~v, kappa});
        const bool second = formula.add_clause(Clause{v, ~kappa});
        if ((first || second) && report != nullptr) ++report->equivalences_added;
    }
    return formula;
}

std::pair<Dqbf, PassReport> upla_pass(Dqbf formula, bool existential_only)
{
    const auto start = std::chrono::steady_clock::now();
    PassReport report;
    report.pass = "upla";

    std::unique_ptr<Propagator> engine;
    for (const VariableId var : formula.prefix().variables()) {
        if (formula.has_empty_clause()) break;
        if (existential_only && !formula.prefix().is_existential(var)) continue;
        if (!engine) engine = std::make_unique<Propagator>(formula);
        const auto findings = probe_with(*engine, var);
        if (findings.empty()) continue;
        engine.reset();
        formula = upla_apply(std::move(formula), findings, &report);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(formula), report};
}

} // namespace dqprep
