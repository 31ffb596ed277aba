#include "dqprep/propagation.hpp"

#include <algorithm>
#include <string>

namespace dqprep {

namespace {

void require_compatible(const Prefix& prefix, const Clause& clause)
{
    if (!is_compatible(prefix, clause)) throw CompatibilityError("clause mentions variables outside the prefix");
}

} // namespace

Clause universal_reduce_clause(const Prefix& prefix, const Clause& clause)
{
    require_compatible(prefix, clause);
    std::vector<Literal> kept;
    kept.reserve(clause.size());
    for (const Literal lit : clause) {
        const VariableId var = lit.var();
        if (!prefix.is_universal(var)) {
            kept.push_back(lit);
            continue;
        }
        const bool supported = std::any_of(clause.begin(), clause.end(), [&](Literal other) {
            return prefix.is_existential(other.var()) && prefix.dependencies(other.var()).contains(var);
        });
        if (supported) kept.push_back(lit);
    }
    return Clause(kept);
}

Dqbf universal_reduce(const Dqbf& formula)
{
    Dqbf result(formula.prefix());
    for (const auto& clause : formula.clauses()) result.add_clause(universal_reduce_clause(formula.prefix(), clause));
    return result;
}

Dqbf abstract(const Dqbf& formula, const VarSet& vars)
{
    Prefix prefix = formula.prefix();
    for (const VariableId v : vars) {
        if (!prefix.is_universal(v)) {
            throw ContractViolation("cannot abstract non-universal variable " + std::to_string(v.value()));
        }
        prefix.remove(v);
        prefix.add_existential(v, {});
    }
    return Dqbf(std::move(prefix), formula.clauses());
}

PropagationOutcome unit_propagate(const Dqbf& formula)
{
    Propagator engine(formula);
    auto run = engine.run({});
    PropagationOutcome outcome;
    if (run.conflict()) {
        outcome.kind = PropagationKind::Conflict;
        return outcome;
    }
    outcome.kind = PropagationKind::Fixpoint;
    outcome.result = engine.residual();
    outcome.units = std::move(run.units);
    return outcome;
}

bool dqat_check(const Dqbf& formula, const Clause& clause)
{
    require_compatible(formula.prefix(), clause);
    std::vector<Literal> negated;
    negated.reserve(clause.size());
    for (const Literal lit : clause) negated.push_back(~lit);
    Propagator engine(formula);
    return engine.run(negated, dep(formula, clause)).conflict();
}

// ---------------------------------------------------------------------------
// Propagator

Propagator::Propagator(const Dqbf& formula) : formula_(formula)
{
    const Prefix& prefix = formula.prefix();
    const std::size_t n = prefix.max_variable() + 1;
    kind_.assign(n, 0);
    deps_.assign(n, nullptr);
    values_.assign(n, 0);
    abstracted_.assign(n, 0);
    occurrences_.resize(2 * n);
    for (const VariableId x : prefix.universals()) kind_[x.value()] = 1;
    for (const auto& [y, deps] : prefix.existentials()) {
        kind_[y.value()] = 2;
        deps_[y.value()] = &deps;
    }
    for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
        for (const Literal lit : formula.clause(i)) occurrences_[lit.code()].push_back(i);
    }
}

bool Propagator::existential_now(VariableId var) const noexcept
{
    return kind_[var.value()] == 2 || abstracted_[var.value()] != 0;
}

bool Propagator::supports(VariableId existential, VariableId universal) const noexcept
{
    const VarSet* deps = deps_[existential.value()];
    return deps != nullptr && deps->contains(universal);
}

int Propagator::value(Literal lit) const noexcept
{
    const int v = values_[lit.var().value()];
    return lit.negated() ? -v : v;
}

bool Propagator::assign(Literal lit)
{
    const int current = value(lit);
    if (current > 0) return true;
    if (current < 0) return false;
    values_[lit.var().value()] = static_cast<std::int8_t>(lit.negated() ? -1 : 1);
    trail_.push_back(lit);
    return true;
}

void Propagator::reset()
{
    for (const Literal lit : trail_) values_[lit.var().value()] = 0;
    trail_.clear();
    for (const VariableId v : abstracted_vars_) abstracted_[v.value()] = 0;
    abstracted_vars_.clear();
    skip_.reset();
}

Propagator::ClauseState Propagator::inspect(std::size_t index, Literal& unit) const
{
    return inspect(formula_.clause(index).literals(), unit);
}

Propagator::ClauseState Propagator::inspect(std::span<const Literal> lits, Literal& unit) const
{
    std::size_t survivors = 0;
    for (const Literal lit : lits) {
        const int v = value(lit);
        if (v > 0) return ClauseState::Satisfied;
        if (v < 0) continue;
        if (existential_now(lit.var())) {
            ++survivors;
            unit = lit;
        }
    }
    if (survivors == 0) return ClauseState::Conflict;  // all universals are unsupported
    if (survivors > 1) return ClauseState::Open;
    // exactly one existential left: a universal survives only if it supports it
    const VariableId supporter = unit.var();
    for (const Literal lit : lits) {
        if (value(lit) == 0 && !existential_now(lit.var()) && supports(supporter, lit.var())) return ClauseState::Open;
    }
    return ClauseState::Unit;
}

std::vector<Literal> Propagator::reduced(std::span<const Literal> lits) const
{
    std::vector<Literal> result;
    for (const Literal lit : lits) {
        if (value(lit) == 0 && existential_now(lit.var())) result.push_back(lit);
    }
    const std::size_t existentials = result.size();
    for (const Literal lit : lits) {
        if (value(lit) != 0 || existential_now(lit.var())) continue;
        const bool supported = std::any_of(result.begin(), result.begin() + static_cast<std::ptrdiff_t>(existentials),
                                           [&](Literal k) { return supports(k.var(), lit.var()); });
        if (supported) result.push_back(lit);
    }
    return result;
}

Propagator::Result Propagator::run(std::span<const Literal> assumptions, const VarSet& abstracted,
                                   std::optional<std::size_t> skip, std::size_t budget)
{
    reset();
    skip_ = skip;
    const Prefix& prefix = formula_.prefix();
    for (const VariableId v : abstracted) {
        if (!prefix.is_universal(v)) {
            throw ContractViolation("cannot abstract non-universal variable " + std::to_string(v.value()));
        }
        abstracted_[v.value()] = 1;
        abstracted_vars_.push_back(v);
    }

    Result result;
    auto conflict = [&] {
        result.status = Status::Conflict;
        result.units = trail_;
        return result;
    };

    Literal unit;
    for (std::size_t i = 0; i < formula_.num_clauses(); ++i) {
        if (skip_ == i) continue;
        switch (inspect(i, unit)) {
        case ClauseState::Conflict: return conflict();
        case ClauseState::Unit:
            if (!assign(unit)) return conflict();
            break;
        default: break;
        }
    }
    for (const Literal lit : assumptions) {
        if (!prefix.contains(lit.var())) {
            throw CompatibilityError("assumption on unknown variable " + std::to_string(lit.var().value()));
        }
        // a universal unit clause reduces to the empty clause
        if (!existential_now(lit.var())) return conflict();
        if (!assign(lit)) return conflict();
    }

    for (std::size_t head = 0; head < trail_.size(); ++head) {
        const Literal falsified = ~trail_[head];
        for (const std::size_t ci : occurrences_[falsified.code()]) {
            if (skip_ == ci) continue;
            if (++result.steps > budget) {
                result.status = Status::Aborted;
                return result;
            }
            switch (inspect(ci, unit)) {
            case ClauseState::Conflict: return conflict();
            case ClauseState::Unit:
                if (!assign(unit)) return conflict();
                break;
            default: break;
            }
        }
    }
    result.status = Status::Fixpoint;
    result.units = trail_;
    return result;
}

Dqbf Propagator::residual() const
{
    Prefix prefix = formula_.prefix();
    for (const VariableId v : abstracted_vars_) {
        prefix.remove(v);
        prefix.add_existential(v, {});
    }
    for (const Literal lit : trail_) prefix.remove(lit.var());

    Dqbf result(std::move(prefix));
    Literal unit;
    for (std::size_t i = 0; i < formula_.num_clauses(); ++i) {
        if (skip_ == i) continue;
        const auto& lits = formula_.clause(i).literals();
        if (inspect(lits, unit) == ClauseState::Satisfied) continue;
        result.add_clause(Clause(reduced(lits)));
    }
    return result;
}

} // namespace dqprep
