#include "dqprep/techniques.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <unordered_map>

namespace dqprep {

namespace {

VivifyResult try_candidate(Propagator& engine, std::size_t clause_index, const Clause& sub, std::size_t& budget)
{
    const Dqbf& formula = engine.formula();
    const Clause& clause = formula.clause(clause_index);
    std::vector<Literal> negated;
    negated.reserve(sub.size());
    for (const Literal lit : sub) negated.push_back(~lit);

    const auto run = engine.run(negated, dep(formula, sub), clause_index, budget);
    budget = run.steps >= budget ? 0 : budget - run.steps;

    VivifyResult result;
    if (run.conflict()) {
        result.kind = VivifyResult::Kind::Replaced;
        result.new_clause = sub;
    } else if (run.fixpoint()) {
        for (const Literal unit : run.units) {
            if (clause.contains(unit) && !sub.contains(unit)) {
                std::vector<Literal> lits = sub.literals();
                lits.push_back(unit);
                result.kind = VivifyResult::Kind::Strengthened;
                result.new_clause = Clause(lits);
                break;
            }
        }
    }
    return result;
}

void check_index(const Dqbf& formula, std::size_t clause_index)
{
    if (clause_index >= formula.num_clauses()) throw ContractViolation("clause index out of range");
}

} // namespace

VivifyResult vivify_candidate(const Dqbf& formula, std::size_t clause_index, const Clause& sub, std::size_t& budget)
{
    check_index(formula, clause_index);
    const Clause& clause = formula.clause(clause_index);
    const bool proper = sub.size() < clause.size()
                        && std::all_of(sub.begin(), sub.end(), [&](Literal lit) { return clause.contains(lit); });
    if (!proper) throw ContractViolation("candidate is not a proper sub-clause");
    Propagator engine(formula);
    return try_candidate(engine, clause_index, sub, budget);
}

namespace {

VivifyResult vivify_with(Propagator& engine, const std::unordered_map<Literal, std::size_t>& counts,
                         std::size_t clause_index, std::size_t budget)
{
    const Clause& clause = engine.formula().clause(clause_index);
    if (clause.size() <= 1) return {};

    std::vector<Literal> order = clause.literals();
    auto count = [&](Literal lit) {
        const auto it = counts.find(lit);
        return it == counts.end() ? std::size_t{0} : it->second;
    };
    std::stable_sort(order.begin(), order.end(), [&](Literal a, Literal b) {
        const auto ca = count(a), cb = count(b);
        if (ca != cb) return ca > cb;
        return a < b;
    });

    std::vector<Literal> sub;
    for (std::size_t k = 0; k < clause.size(); ++k) {
        if (k > 0) sub.push_back(order[k - 1]);
        auto result = try_candidate(engine, clause_index, Clause(sub), budget);
        if (result.kind == VivifyResult::Kind::Replaced) return result;
        if (result.kind == VivifyResult::Kind::Strengthened && result.new_clause.size() < clause.size()) return result;
        if (budget == 0) break;
    }
    return {};
}

std::unordered_map<Literal, std::size_t> occurrence_counts(const Dqbf& formula)
{
    std::unordered_map<Literal, std::size_t> counts;
    for (const auto& clause : formula.clauses()) {
        for (const Literal lit : clause) ++counts[lit];
    }
    return counts;
}

} // namespace

VivifyResult vivify_clause(const Dqbf& formula, std::size_t clause_index, std::size_t budget)
{
    check_index(formula, clause_index);
    Propagator engine(formula);
    return vivify_with(engine, occurrence_counts(formula), clause_index, budget);
}

std::pair<Dqbf, PassReport> vivify_pass(Dqbf formula, std::size_t budget)
{
    const auto start = std::chrono::steady_clock::now();
    PassReport report;
    report.pass = "vivify";

    std::unique_ptr<Propagator> engine;
    std::unordered_map<Literal, std::size_t> counts;
    std::size_t i = 0;
    while (i < formula.num_clauses() && !formula.has_empty_clause()) {
        if (!engine) {
            engine = std::make_unique<Propagator>(formula);
            counts = occurrence_counts(formula);
        }
        const auto result = vivify_with(*engine, counts, i, budget);
        if (result.kind == VivifyResult::Kind::Unchanged) {
            ++i;
            continue;
        }
        engine.reset();
        if (formula.replace_clause(i, result.new_clause)) {
            ++report.clauses_shortened;
            ++i;
        } else {
            ++report.clauses_removed;
        }
    }
    if (formula.has_empty_clause()) ++report.conflicts;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(formula), report};
}

} // namespace dqprep
