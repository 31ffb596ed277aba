#include "dqprep/techniques.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <string>

namespace dqprep {

OuterSets outer_variables(const Prefix& prefix, VariableId var)
{
    OuterSets sets;
    if (prefix.is_existential(var)) {
        const VarSet& deps = prefix.dependencies(var);
        sets.outer = deps;
        for (const auto& [w, wdeps] : prefix.existentials()) {
            if (std::includes(deps.begin(), deps.end(), wdeps.begin(), wdeps.end())) sets.outer.insert(w);
        }
        return sets;
    }
    if (!prefix.is_universal(var)) {
        throw CompatibilityError("variable " + std::to_string(var.value()) + " is not in the prefix");
    }

    for (const auto& [y, deps] : prefix.existentials()) (deps.contains(var) ? sets.sv : sets.iv).insert(y);
    if (sets.sv.empty()) {
        throw KernelUndefined("no existential depends on universal " + std::to_string(var.value()));
    }
    sets.kernel = prefix.dependencies(*sets.sv.begin());
    for (const VariableId y : sets.sv) {
        const VarSet& deps = prefix.dependencies(y);
        std::erase_if(sets.kernel, [&](VariableId x) { return !deps.contains(x); });
    }
    sets.outer = sets.kernel;
    for (const VariableId y : sets.iv) {
        const VarSet& deps = prefix.dependencies(y);
        if (std::includes(sets.kernel.begin(), sets.kernel.end(), deps.begin(), deps.end())) sets.outer.insert(y);
    }
    return sets;
}

namespace {

std::vector<Literal> restrict_to(const Clause& clause, const VarSet& outer)
{
    std::vector<Literal> result;
    for (const Literal lit : clause) {
        if (outer.contains(lit.var())) result.push_back(lit);
    }
    return result;
}

std::optional<Clause> resolve_outer(const Prefix& prefix, const VarSet& outer, const Clause& c, const Clause& d,
                                    Literal pivot)
{
    std::vector<Literal> lits;
    lits.reserve(c.size() + d.size());
    const auto from_d = restrict_to(d, outer);
    if (prefix.is_existential(pivot.var())) {
        lits.assign(c.begin(), c.end());
        for (const Literal lit : from_d) {
            if (lit != ~pivot) lits.push_back(lit);
        }
    } else {
        for (const Literal lit : c) {
            if (lit != pivot) lits.push_back(lit);
        }
        // ¬pivot stays: its variable is in the kernel of var(pivot)
        lits.insert(lits.end(), from_d.begin(), from_d.end());
    }
    return normalize_clause(lits);
}

void check_pivot(const Dqbf& formula, const Clause& clause, Literal pivot)
{
    if (!clause.contains(pivot)) throw ContractViolation("pivot is not a literal of the clause");
    if (!is_compatible(formula, clause)) throw CompatibilityError("clause mentions variables outside the prefix");
}

/// DQRAT+ of \a clause on \a pivot against the matrix of \a engine without clause \a skip.
bool check_with(Propagator& engine, std::optional<std::size_t> skip, const Clause& clause, Literal pivot)
{
    const Dqbf& formula = engine.formula();
    const Prefix& prefix = formula.prefix();
    std::optional<VarSet> outer;
    std::vector<Literal> negated;
    for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
        if (skip == i) continue;
        const Clause& partner = formula.clause(i);
        if (!partner.contains(~pivot)) continue;
        if (!outer) outer = outer_variables(prefix, pivot.var()).outer;
        const auto resolvent = resolve_outer(prefix, *outer, clause, partner, pivot);
        if (!resolvent) continue;
        negated.clear();
        for (const Literal lit : *resolvent) negated.push_back(~lit);
        if (!engine.run(negated, dep(prefix, *resolvent), skip).conflict()) return false;
    }
    return true;
}

bool has_kernel(const Prefix& prefix, VariableId universal)
{
    return std::any_of(prefix.existentials().begin(), prefix.existentials().end(),
                       [&](const auto& entry) { return entry.second.contains(universal); });
}

} // namespace

Clause outer_clause(const Prefix& prefix, const Clause& clause, Literal pivot)
{
    return Clause(restrict_to(clause, outer_variables(prefix, pivot.var()).outer));
}

std::optional<Clause> outer_resolvent(const Prefix& prefix, const Clause& c, const Clause& d, Literal pivot)
{
    if (!c.contains(pivot) || !d.contains(~pivot)) {
        throw ContractViolation("outer resolvent needs pivot in the first and its negation in the second clause");
    }
    return resolve_outer(prefix, outer_variables(prefix, pivot.var()).outer, c, d, pivot);
}

bool dqrat_plus_check(const Dqbf& formula, const Clause& clause, Literal pivot)
{
    check_pivot(formula, clause, pivot);
    Propagator engine(formula);
    return check_with(engine, std::nullopt, clause, pivot);
}

std::pair<Dqbf, PassReport> dqrat_eliminate_pass(Dqbf formula)
{
    const auto start = std::chrono::steady_clock::now();
    PassReport report;
    report.pass = "dqrat";

    std::unique_ptr<Propagator> engine;
    std::size_t i = 0;
    while (i < formula.num_clauses()) {
        if (!engine) engine = std::make_unique<Propagator>(formula);
        const Prefix& prefix = formula.prefix();
        const Clause clause = formula.clause(i);

        const bool blocked = std::any_of(clause.begin(), clause.end(), [&](Literal lit) {
            return prefix.is_existential(lit.var()) && check_with(*engine, i, clause, lit);
        });
        if (blocked) {
            engine.reset();
            formula.remove_clause(i);
            ++report.clauses_removed;
            continue;
        }

        // Drop universal literals one at a time; φ \ {C} stays the same.
        Clause current = clause;
        for (bool again = true; again;) {
            again = false;
            for (const Literal lit : current) {
                if (!prefix.is_universal(lit.var()) || !has_kernel(prefix, lit.var())) continue;
                if (!check_with(*engine, i, current, lit)) continue;
                current = universal_reduce_clause(prefix, current.without(lit));
                again = true;
                break;
            }
        }
        if (current != clause) {
            engine.reset();
            if (formula.replace_clause(i, current)) {
                ++report.clauses_shortened;
            } else {
                ++report.clauses_removed;
                continue;
            }
        }
        ++i;
    }
    if (formula.has_empty_clause()) ++report.conflicts;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(formula), report};
}

} // namespace dqprep
