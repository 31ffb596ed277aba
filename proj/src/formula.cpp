#include "dqprep/formula.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace dqprep {

std::ostream& operator<<(std::ostream& out, VariableId var)
{
    return out << var.value();
}

std::ostream& operator<<(std::ostream& out, Literal lit)
{
    return out << lit.to_dimacs();
}

// ---------------------------------------------------------------------------
// Clause

std::optional<Clause> normalize_clause(std::span<const Literal> raw)
{
    Clause result;
    result.lits_.assign(raw.begin(), raw.end());
    std::sort(result.lits_.begin(), result.lits_.end());
    result.lits_.erase(std::unique(result.lits_.begin(), result.lits_.end()), result.lits_.end());
    // after sorting, x and -x are adjacent
    for (std::size_t i = 1; i < result.lits_.size(); ++i) {
        if (result.lits_[i] == ~result.lits_[i - 1]) return std::nullopt;
    }
    return result;
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::span<const Literal>(lits.begin(), lits.size())) {}

Clause::Clause(std::span<const Literal> lits)
{
    auto normalized = normalize_clause(lits);
    if (!normalized) throw ContractViolation("tautological clause");
    lits_ = std::move(normalized->lits_);
}

bool Clause::contains(Literal lit) const noexcept
{
    return std::binary_search(lits_.begin(), lits_.end(), lit);
}

bool Clause::contains_var(VariableId var) const noexcept
{
    return contains(Literal(var, false)) || contains(Literal(var, true));
}

Clause Clause::without(Literal lit) const
{
    Clause result;
    result.lits_.reserve(lits_.size());
    for (const Literal l : lits_) {
        if (l != lit) result.lits_.push_back(l);
    }
    return result;
}

std::size_t ClauseHash::operator()(const Clause& clause) const noexcept
{
    std::size_t h = clause.size();
    for (const Literal lit : clause) {
        h ^= lit.code() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::ostream& operator<<(std::ostream& out, const Clause& clause)
{
    out << '(';
    bool first = true;
    for (const Literal lit : clause) {
        if (!first) out << ' ';
        out << lit;
        first = false;
    }
    return out << ')';
}

// ---------------------------------------------------------------------------
// Prefix

void Prefix::add_universal(VariableId var)
{
    if (!var.valid()) throw ContractViolation("variable id 0 is reserved");
    if (contains(var)) throw ContractViolation("variable " + std::to_string(var.value()) + " declared twice");
    universals_.insert(var);
}

void Prefix::add_existential(VariableId var, VarSet deps)
{
    if (!var.valid()) throw ContractViolation("variable id 0 is reserved");
    if (contains(var)) throw ContractViolation("variable " + std::to_string(var.value()) + " declared twice");
    for (const VariableId d : deps) {
        if (!is_universal(d)) {
            throw ContractViolation("dependency " + std::to_string(d.value()) + " of "
                                    + std::to_string(var.value()) + " is not universal");
        }
    }
    existentials_.emplace(var, std::move(deps));
}

void Prefix::remove(VariableId var)
{
    if (universals_.erase(var) != 0) {
        for (auto& [y, deps] : existentials_) deps.erase(var);
        return;
    }
    if (existentials_.erase(var) == 0) {
        throw NotInPrefixError("variable " + std::to_string(var.value()) + " is not in the prefix");
    }
}

const VarSet& Prefix::dependencies(VariableId var) const
{
    const auto it = existentials_.find(var);
    if (it == existentials_.end()) {
        throw NotInPrefixError("variable " + std::to_string(var.value()) + " is not existential");
    }
    return it->second;
}

std::vector<VariableId> Prefix::variables() const
{
    std::vector<VariableId> result(universals_.begin(), universals_.end());
    for (const auto& entry : existentials_) result.push_back(entry.first);
    std::sort(result.begin(), result.end());
    return result;
}

std::uint32_t Prefix::max_variable() const noexcept
{
    std::uint32_t result = 0;
    if (!universals_.empty()) result = universals_.rbegin()->value();
    if (!existentials_.empty()) result = std::max(result, existentials_.rbegin()->first.value());
    return result;
}

Prefix prefix_remove(const Prefix& prefix, VariableId var)
{
    Prefix result = prefix;
    result.remove(var);
    return result;
}

// ---------------------------------------------------------------------------
// Dqbf

Dqbf::Dqbf(Prefix prefix, std::vector<Clause> clauses) : prefix_(std::move(prefix))
{
    clauses_.reserve(clauses.size());
    for (auto& clause : clauses) add_clause(std::move(clause));
}

void Dqbf::check_compatible(const Clause& clause) const
{
    for (const Literal lit : clause) {
        if (!prefix_.contains(lit.var())) {
            throw CompatibilityError("variable " + std::to_string(lit.var().value()) + " is not in the prefix");
        }
    }
}

bool Dqbf::add_clause(Clause clause)
{
    check_compatible(clause);
    if (!index_.insert(clause).second) return false;
    clauses_.push_back(std::move(clause));
    return true;
}

void Dqbf::remove_clause(std::size_t index)
{
    index_.erase(clauses_.at(index));
    clauses_.erase(clauses_.begin() + static_cast<std::ptrdiff_t>(index));
}

bool Dqbf::replace_clause(std::size_t index, Clause clause)
{
    check_compatible(clause);
    if (clauses_.at(index) == clause) return true;
    if (index_.contains(clause)) {
        remove_clause(index);
        return false;
    }
    index_.erase(clauses_[index]);
    index_.insert(clause);
    clauses_[index] = std::move(clause);
    return true;
}

std::optional<std::size_t> Dqbf::find_clause(const Clause& clause) const
{
    if (!index_.contains(clause)) return std::nullopt;
    const auto it = std::find(clauses_.begin(), clauses_.end(), clause);
    return static_cast<std::size_t>(it - clauses_.begin());
}

std::size_t Dqbf::literal_count() const noexcept
{
    std::size_t count = 0;
    for (const auto& clause : clauses_) count += clause.size();
    return count;
}

Dqbf Dqbf::without_clause(std::size_t index) const
{
    Dqbf result = *this;
    result.remove_clause(index);
    return result;
}

Dqbf Dqbf::with_clauses(std::span<const Clause> extra) const
{
    Dqbf result = *this;
    for (const auto& clause : extra) result.add_clause(clause);
    return result;
}

// ---------------------------------------------------------------------------
// Dependencies

bool is_compatible(const Prefix& prefix, const Clause& clause) noexcept
{
    return std::all_of(clause.begin(), clause.end(), [&](Literal lit) { return prefix.contains(lit.var()); });
}

bool is_compatible(const Dqbf& formula, const Clause& clause) noexcept
{
    return is_compatible(formula.prefix(), clause);
}

VarSet dep(const Prefix& prefix, VariableId var)
{
    if (prefix.is_universal(var)) return VarSet{var};
    const auto it = prefix.existentials().find(var);
    if (it == prefix.existentials().end()) {
        throw CompatibilityError("variable " + std::to_string(var.value()) + " is not in the prefix");
    }
    return it->second;
}

VarSet dep(const Prefix& prefix, Literal lit)
{
    return dep(prefix, lit.var());
}

VarSet dep(const Prefix& prefix, const Clause& clause)
{
    VarSet result;
    for (const Literal lit : clause) {
        if (prefix.is_universal(lit.var())) {
            result.insert(lit.var());
        } else {
            const auto it = prefix.existentials().find(lit.var());
            if (it == prefix.existentials().end()) {
                throw CompatibilityError("variable " + std::to_string(lit.var().value()) + " is not in the prefix");
            }
            result.insert(it->second.begin(), it->second.end());
        }
    }
    return result;
}

} // namespace dqprep
