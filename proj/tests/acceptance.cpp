// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dqprep/dqdimacs.hpp"
#include "dqprep/fuzz.hpp"
#include "dqprep/oracle.hpp"
#include "dqprep/pipeline.hpp"
#include "dqprep/propagation.hpp"
#include "dqprep/techniques.hpp"
#include "test_util.hpp"

namespace {

using namespace dqprep;
using testing::cl;
using testing::vars;

const oracle::Limits limits{24, std::size_t{1} << 22};

constexpr std::size_t suite_size = 500;
constexpr std::size_t large_suite_size = 1000;

/// Default fuzz bounds plus a second batch of larger, more often satisfiable formulas.
std::vector<Dqbf> batch(std::uint64_t seed)
{
    auto formulas = fuzz(seed, suite_size);
    for (auto& f : fuzz(seed + 100, suite_size, FuzzBounds{4, 4, 10, 4})) formulas.push_back(std::move(f));
    return formulas;
}

struct Outcome
{
    bool ok = true;
    std::string detail;
};

struct Criterion
{
    int number;
    const char* name;
    double seconds_limit; ///< 0: no limit
    std::function<Outcome()> body;
};

std::vector<Clause> units_of(std::span<const Literal> lits)
{
    std::vector<Clause> clauses;
    for (const Literal lit : lits) clauses.push_back(Clause{lit});
    return clauses;
}

Outcome example_abstraction()
{
    const Dqbf psi1 = testing::independent_and();
    const Dqbf psi2 = psi1.with_clauses(std::vector{cl({-1})});
    const Dqbf abs1 = abstract(psi1, vars({1}));
    const Dqbf abs2 = abstract(psi2, vars({1}));

    const auto w = oracle::solve_brute(abs1, limits);
    const bool witness_ok = w.sat && w.witness->find(VariableId(1))->table == std::vector<bool>{true}
                            && w.witness->find(VariableId(2))->table == std::vector<bool>{true};
    Outcome out;
    out.ok = !oracle::solve_brute(psi1, limits).sat && !oracle::solve_brute(psi2, limits).sat && witness_ok
             && !oracle::solve_brute(abs2, limits).sat && oracle::equivalent(psi1, psi2, limits)
             && !oracle::equivalent(abs1, abs2, limits);
    out.detail = "psi1 UNSAT, psi2 UNSAT, abs1 SAT(s_x=1,s_y=1), abs2 UNSAT, psi1==psi2, abs1!=abs2";
    return out;
}

Outcome example_unsound_reduction()
{
    const Dqbf psi = testing::copy_formula();
    const Clause c = cl({2});
    const bool plain_conflict = unit_propagate(psi.with_clauses(std::vector{cl({-2})})).conflict();
    const bool dqat = dqat_check(psi, c);
    const auto solved = oracle::solve_brute(psi, limits);
    const bool witness_ok = solved.sat && solved.witness->find(VariableId(2))->table == std::vector<bool>{false, true};
    const bool with_c_sat = oracle::solve_brute(psi.with_clauses(std::vector{c}), limits).sat;

    Outcome out;
    out.ok = plain_conflict && !dqat && witness_ok && !with_c_sat;
    out.detail = "up(phi & -y1) conflict, dqat false, SAT with s_y1(x1)=x1, phi & y1 UNSAT";
    return out;
}

Outcome summary(std::size_t instances, std::size_t violations, const std::string& extra = {})
{
    Outcome out;
    out.ok = violations == 0 && instances >= suite_size;
    out.detail = std::to_string(instances) + " instances (" + std::to_string(suite_size)
                 + " at default bounds), " + std::to_string(violations) + " violations";
    if (!extra.empty()) out.detail += ", " + extra;
    return out;
}

Outcome universal_reduction_suite()
{
    std::size_t violations = 0;
    std::size_t changed = 0;
    const auto formulas = batch(1001);
    for (const Dqbf& f : formulas) {
        const Dqbf reduced = universal_reduce(f);
        changed += reduced == f ? 0 : 1;
        violations += oracle::equivalent(f, reduced, limits) ? 0 : 1;
    }
    return summary(formulas.size(), violations, std::to_string(changed) + " reduced");
}

Outcome propagation_suite()
{
    std::size_t violations = 0;
    std::size_t conflicts = 0;
    std::size_t with_units = 0;
    const auto formulas = batch(1002);
    for (const Dqbf& f : formulas) {
        const auto outcome = unit_propagate(f);
        if (outcome.conflict()) {
            ++conflicts;
            violations += oracle::solve_expansion(f, limits) ? 1 : 0;
        } else {
            with_units += outcome.units.empty() ? 0 : 1;
            violations += oracle::equivalent(f, f.with_clauses(units_of(outcome.units)), limits) ? 0 : 1;
        }
    }
    return summary(formulas.size(), violations,
                   std::to_string(conflicts) + " conflicts, " + std::to_string(with_units) + " fixpoints with units");
}

Outcome dqat_suite()
{
    FormulaFuzzer clauses(1003);
    const auto formulas = batch(1003);
    std::size_t violations = 0;
    std::size_t accepted = 0;
    for (const Dqbf& f : formulas) {
        const Clause c = clauses.random_clause(f, 4);
        if (!dqat_check(f, c)) continue;
        ++accepted;
        violations += oracle::equivalent(f, f.with_clauses(std::vector{c}), limits) ? 0 : 1;
    }
    return summary(formulas.size(), violations, std::to_string(accepted) + " clauses accepted");
}

Outcome vivification_suite()
{
    std::size_t violations = 0;
    std::size_t replaced = 0;
    std::size_t strengthened = 0;
    const auto formulas = batch(1004);
    for (const Dqbf& f : formulas) {
        for (std::size_t i = 0; i < f.num_clauses(); ++i) {
            const auto result = vivify_clause(f, i);
            if (result.kind == VivifyResult::Kind::Unchanged) continue;
            (result.kind == VivifyResult::Kind::Replaced ? replaced : strengthened) += 1;
            Dqbf changed = f;
            changed.replace_clause(i, result.new_clause);
            violations += oracle::equivalent(f, changed, limits) ? 0 : 1;
        }
        const Dqbf passed = vivify_pass(f).first;
        violations += oracle::equivalent(f, passed, limits) ? 0 : 1;
    }
    return summary(formulas.size(), violations,
                   std::to_string(replaced) + " replaced, " + std::to_string(strengthened) + " strengthened");
}

Outcome upla_suite()
{
    std::size_t violations = 0;
    std::size_t applied = 0;
    std::size_t both = 0;
    const auto formulas = batch(1005);
    for (const Dqbf& f : formulas) {
        for (const VariableId v : f.prefix().variables()) {
            const auto findings = upla_probe(f, v);
            if (findings.empty()) continue;
            ++applied;
            if (findings.both_conflict()) {
                ++both;
                violations += oracle::solve_expansion(f, limits) ? 1 : 0;
            }
            violations += oracle::equivalent(f, upla_apply(f, findings), limits) ? 0 : 1;
        }
        violations += oracle::equivalent(f, upla_pass(f).first, limits) ? 0 : 1;
    }
    return summary(formulas.size(), violations,
                   std::to_string(applied) + " probes with findings, " + std::to_string(both) + " both-sides conflicts");
}

bool has_kernel(const Prefix& prefix, VariableId v)
{
    for (const auto& [y, deps] : prefix.existentials()) {
        if (deps.contains(v)) return true;
    }
    return false;
}

/// Every Skolem tuple of \a f is one of \a f ∧ \a e. Enumerates the tuples
/// when the candidate space is in budget, compares expansions otherwise.
bool entails(const Dqbf& f, const Clause& e, std::size_t& enumerated)
{
    const Dqbf g = f.with_clauses(std::vector{e});
    std::vector<std::uint64_t> all;
    try {
        all = oracle::skolem_tuple_indices(f, oracle::Limits{16, limits.max_expansion});
    } catch (const BudgetError&) {
        return oracle::implies(f, g, limits);
    }
    ++enumerated;
    for (const auto index : all) {
        if (!oracle::is_skolem(g, oracle::tuple_from_index(f, index))) return false;
    }
    return true;
}

Outcome dqrat_suite()
{
    std::size_t violations = 0;
    std::size_t removed = 0;
    std::size_t shortened = 0;
    std::size_t resolvents = 0;
    std::size_t enumerated = 0;
    const auto formulas = batch(1006);
    for (const Dqbf& f : formulas) {
        const auto [out, report] = dqrat_eliminate_pass(f);
        removed += report.clauses_removed;
        shortened += report.clauses_shortened;
        violations += oracle::equisatisfiable(f, out, limits) ? 0 : 1;

        for (std::size_t i = 0; i < f.num_clauses(); ++i) {
            const Clause& c = f.clause(i);
            const Dqbf rest = f.without_clause(i);
            for (const Literal pivot : c) {
                if (f.prefix().is_universal(pivot.var()) && !has_kernel(f.prefix(), pivot.var())) continue;
                if (!dqrat_plus_check(rest, c, pivot)) continue;
                for (const Clause& d : rest.clauses()) {
                    if (!d.contains(~pivot)) continue;
                    const auto e = outer_resolvent(f.prefix(), c, d, pivot);
                    if (!e) continue;
                    ++resolvents;
                    violations += entails(rest, *e, enumerated) ? 0 : 1;
                }
            }
        }
    }
    return summary(formulas.size(), violations,
                   std::to_string(removed) + " clauses removed, " + std::to_string(shortened) + " shortened, "
                       + std::to_string(resolvents) + " accepted resolvents entailed (" + std::to_string(enumerated)
                       + " by Skolem enumeration)");
}

Outcome oracle_suite()
{
    std::size_t disagreements = 0;
    std::size_t sat = 0;
    for (const Dqbf& f : fuzz(1007, large_suite_size)) {
        const bool brute = oracle::solve_brute(f, limits).sat;
        sat += brute ? 1 : 0;
        disagreements += brute == oracle::solve_expansion(f, limits) ? 0 : 1;
    }
    Outcome out;
    out.ok = disagreements == 0;
    out.detail = std::to_string(large_suite_size) + " instances (" + std::to_string(sat) + " SAT), "
                 + std::to_string(disagreements) + " disagreements";
    return out;
}

Outcome round_trip_suite()
{
    std::size_t failures = 0;
    const PipelineConfig config;
    for (const Dqbf& f : fuzz(1008, large_suite_size)) {
        const std::string text = emit_dqdimacs(f);
        const auto parsed = parse_dqdimacs(text);
        failures += parsed.formula == f && emit_dqdimacs(parsed.formula) == text ? 0 : 1;
        const auto a = run_pipeline(config, f);
        const auto b = run_pipeline(config, f);
        failures += emit_dqdimacs(a.formula) == emit_dqdimacs(b.formula) && a.verdict == b.verdict ? 0 : 1;
    }
    Outcome out;
    out.ok = failures == 0;
    out.detail = std::to_string(large_suite_size) + " formulas, " + std::to_string(failures) + " mismatches";
    return out;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "abstraction example", 1.0, example_abstraction},
        {2, "unsound reduction example", 1.0, example_unsound_reduction},
        {3, "universal reduction preserves equivalence", 60.0, universal_reduction_suite},
        {4, "unit propagation sound", 120.0, propagation_suite},
        {5, "dqat clause addition preserves equivalence", 120.0, dqat_suite},
        {6, "vivification preserves equivalence", 0.0, vivification_suite},
        {7, "upla preserves equivalence", 0.0, upla_suite},
        {8, "dqrat+ elimination preserves satisfiability", 0.0, dqrat_suite},
        {9, "oracle cross-check", 0.0, oracle_suite},
        {10, "round trip and determinism", 0.0, round_trip_suite},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criterion.body();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.seconds_limit > 0 && seconds >= criterion.seconds_limit) {
            out.ok = false;
            out.detail += ", time limit exceeded";
        }
        std::printf("criterion %2d %s  %s: %s (%.3f s", criterion.number, out.ok ? "PASS" : "FAIL", criterion.name,
                    out.detail.c_str(), seconds);
        if (criterion.seconds_limit > 0) std::printf(", limit %.0f s", criterion.seconds_limit);
        std::printf(")\n");
        std::fflush(stdout);
        failed += out.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
