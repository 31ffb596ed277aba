#ifndef DQPREP_FORMULA_HPP_
#define DQPREP_FORMULA_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "literal.hpp"

/**
 * \file formula.hpp
 * \brief Data model for DQBFs in CNF: clauses, quantifier prefix and formula.
 */

namespace dqprep {

/**
 * \brief A disjunction of literals.
 *
 * Literals are kept sorted by (variable, polarity) without duplicates, so
 * two clauses are equal iff they contain the same literals. A Clause is
 * never tautological.
 */
class Clause
{
public:
    using const_iterator = std::vector<Literal>::const_iterator;

    Clause() = default;

    /// Normalizes the literals; throws ContractViolation on a tautology.
    Clause(std::initializer_list<Literal> lits);
    explicit Clause(std::span<const Literal> lits);

    const_iterator begin() const noexcept { return lits_.begin(); }
    const_iterator end() const noexcept { return lits_.end(); }
    std::size_t size() const noexcept { return lits_.size(); }
    bool empty() const noexcept { return lits_.empty(); }
    Literal operator[](std::size_t i) const noexcept { return lits_[i]; }
    const std::vector<Literal>& literals() const noexcept { return lits_; }

    bool contains(Literal lit) const noexcept;
    bool contains_var(VariableId var) const noexcept;

    /// The clause without \a lit (unchanged if absent).
    Clause without(Literal lit) const;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;

private:
    friend std::optional<Clause> normalize_clause(std::span<const Literal> raw);
    std::vector<Literal> lits_;
};

/**
 * \brief Sorts and deduplicates \a raw. Returns std::nullopt when \a raw
 *        contains a complementary pair (the clause is a tautology).
 */
std::optional<Clause> normalize_clause(std::span<const Literal> raw);

struct ClauseHash
{
    std::size_t operator()(const Clause& clause) const noexcept;
};

std::ostream& operator<<(std::ostream& out, const Clause& clause);

/**
 * \brief Henkin quantifier prefix: universal variables plus existential
 *        variables with explicit dependency sets.
 *
 * Variable order is irrelevant, so the prefix behaves like a set.
 */
class Prefix
{
public:
    void add_universal(VariableId var);
    /// \a deps must consist of universal variables of this prefix.
    void add_existential(VariableId var, VarSet deps);

    /// Removes \a var; a universal is also erased from all dependency sets.
    void remove(VariableId var);

    bool contains(VariableId var) const noexcept { return is_universal(var) || is_existential(var); }
    bool is_universal(VariableId var) const noexcept { return universals_.contains(var); }
    bool is_existential(VariableId var) const noexcept { return existentials_.contains(var); }

    const VarSet& universals() const noexcept { return universals_; }
    const std::map<VariableId, VarSet>& existentials() const noexcept { return existentials_; }

    /// Dependency set of an existential variable.
    const VarSet& dependencies(VariableId var) const;

    std::vector<VariableId> variables() const;
    std::size_t size() const noexcept { return universals_.size() + existentials_.size(); }
    /// Largest variable id in the prefix, 0 if empty.
    std::uint32_t max_variable() const noexcept;

    friend bool operator==(const Prefix&, const Prefix&) = default;

private:
    VarSet universals_;
    std::map<VariableId, VarSet> existentials_;
};

/// Π \ {v}.
Prefix prefix_remove(const Prefix& prefix, VariableId var);

/**
 * \brief A DQBF Π : φ with φ in CNF.
 *
 * The matrix is an ordered set of clauses: insertion order is kept for
 * deterministic output, duplicates are dropped, and every clause only
 * mentions variables of the prefix.
 */
class Dqbf
{
public:
    Dqbf() = default;
    explicit Dqbf(Prefix prefix, std::vector<Clause> clauses = {});

    const Prefix& prefix() const noexcept { return prefix_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    const Clause& clause(std::size_t i) const { return clauses_.at(i); }

    /// Appends \a clause; returns false if it was already present.
    bool add_clause(Clause clause);
    void remove_clause(std::size_t index);
    /**
     * Replaces clause \a index by \a clause. If \a clause already occurs
     * elsewhere the old clause is removed instead and false is returned.
     */
    bool replace_clause(std::size_t index, Clause clause);

    bool contains_clause(const Clause& clause) const { return index_.contains(clause); }
    std::optional<std::size_t> find_clause(const Clause& clause) const;
    bool has_empty_clause() const { return index_.contains(Clause{}); }
    std::size_t literal_count() const noexcept;

    /// Copy of this formula without clause \a index.
    Dqbf without_clause(std::size_t index) const;
    /// Copy of this formula with \a extra appended.
    Dqbf with_clauses(std::span<const Clause> extra) const;

    friend bool operator==(const Dqbf& a, const Dqbf& b)
    {
        return a.prefix_ == b.prefix_ && a.clauses_ == b.clauses_;
    }

private:
    void check_compatible(const Clause& clause) const;

    Prefix prefix_;
    std::vector<Clause> clauses_;
    std::unordered_set<Clause, ClauseHash> index_;
};

bool is_compatible(const Prefix& prefix, const Clause& clause) noexcept;
bool is_compatible(const Dqbf& formula, const Clause& clause) noexcept;

/// dep(v): {v} for universals, D_v for existentials.
VarSet dep(const Prefix& prefix, VariableId var);
VarSet dep(const Prefix& prefix, Literal lit);
VarSet dep(const Prefix& prefix, const Clause& clause);

inline VarSet dep(const Dqbf& formula, VariableId var) { return dep(formula.prefix(), var); }
inline VarSet dep(const Dqbf& formula, Literal lit) { return dep(formula.prefix(), lit); }
inline VarSet dep(const Dqbf& formula, const Clause& clause) { return dep(formula.prefix(), clause); }

} // namespace dqprep

#endif
