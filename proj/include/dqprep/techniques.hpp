#ifndef DQPREP_TECHNIQUES_HPP_
#define DQPREP_TECHNIQUES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "propagation.hpp"

/**
 * \file techniques.hpp
 * \brief Preprocessing techniques that run unit propagation with universal
 *        reduction on abstracted formulas: vivification, unit propagation
 *        lookahead (UPLA) and DQRAT+ based clause and literal elimination.
 */

namespace dqprep {

/// Statistics of one preprocessing pass.
struct PassReport
{
    std::string pass;
    unsigned round = 0;
    std::size_t clauses_removed = 0;
    std::size_t clauses_shortened = 0;
    std::size_t units_added = 0;
    std::size_t equivalences_added = 0;
    std::size_t conflicts = 0;
    double seconds = 0.0;

    bool changed() const noexcept
    {
        return clauses_removed + clauses_shortened + units_added + equivalences_added + conflicts != 0;
    }
};

// ---------------------------------------------------------------------------
// Vivification

struct VivifyResult
{
    enum class Kind { Unchanged, Replaced, Strengthened };
    Kind kind = Kind::Unchanged;
    Clause new_clause;
};

inline constexpr std::size_t default_vivify_budget = 10000;

/**
 * \brief Tests one candidate sub-clause \a sub ⊊ \a clause.
 *
 * With φ the matrix without \a clause and V' = dep(sub): a conflict of
 * abs(Π : φ ∧ ¬sub, V') gives Replaced(sub); a unit ℓ ∈ clause \ sub gives
 * Strengthened(sub ∪ {ℓ}). \a budget is decreased by the propagation steps.
 */
VivifyResult vivify_candidate(const Dqbf& formula, std::size_t clause_index, const Clause& sub,
                              std::size_t& budget);

/**
 * \brief Vivifies clause \a clause_index of \a formula.
 *
 * Candidates are the prefixes ∅, {l1}, {l1,l2}, ... of the clause literals
 * ordered by descending occurrence count (ties by variable id). The first
 * candidate that shortens the clause wins. \a budget bounds the total number
 * of propagation steps spent on this clause.
 */
VivifyResult vivify_clause(const Dqbf& formula, std::size_t clause_index,
                           std::size_t budget = default_vivify_budget);

/// Vivifies every clause once, in matrix order, committing each change.
std::pair<Dqbf, PassReport> vivify_pass(Dqbf formula, std::size_t budget = default_vivify_budget);

// ---------------------------------------------------------------------------
// Unit propagation lookahead

struct UplaFindings
{
    VariableId probed;
    std::vector<Literal> forced;                              ///< from one-sided conflicts
    std::vector<Literal> common_units;                        ///< U0 ∩ U1
    std::vector<std::pair<VariableId, Literal>> equivalences; ///< (v, κ): v ≡ κ

    bool empty() const noexcept { return forced.empty() && common_units.empty() && equivalences.empty(); }
    /// Both polarities of the probed variable lead to a conflict.
    bool both_conflict() const noexcept { return forced.size() == 2; }
};

/// Propagates v and ¬v on abs(Ψ, dep(v)) and collects what both agree on.
UplaFindings upla_probe(const Dqbf& formula, VariableId var);

/**
 * \brief Adds the findings to the matrix: forced literals and common units
 *        as unit clauses, each equivalence v ≡ κ as (¬v ∨ κ) ∧ (v ∨ ¬κ).
 *        A complementary pair of forced literals yields the empty clause.
 */
Dqbf upla_apply(Dqbf formula, const UplaFindings& findings, PassReport* report = nullptr);

/// Probes every variable of the prefix (or only existentials) and applies the findings.
std::pair<Dqbf, PassReport> upla_pass(Dqbf formula, bool existential_only = false);

// ---------------------------------------------------------------------------
// DQRAT+

struct OuterSets
{
    VarSet sv;     ///< existentials depending on v (universal v only)
    VarSet iv;     ///< existentials independent of v (universal v only)
    VarSet kernel; ///< intersection of the dependency sets of sv
    VarSet outer;
};

/// Outer variables of \a var; throws KernelUndefined for a universal nobody depends on.
OuterSets outer_variables(const Prefix& prefix, VariableId var);

/// Literals of \a clause whose variable is an outer variable of var(pivot).
Clause outer_clause(const Prefix& prefix, const Clause& clause, Literal pivot);

/**
 * \brief Outer resolvent of \a c and \a d on \a pivot (pivot ∈ c, ¬pivot ∈ d).
 *        std::nullopt if the resolvent is tautological.
 */
std::optional<Clause> outer_resolvent(const Prefix& prefix, const Clause& c, const Clause& d, Literal pivot);

/**
 * \brief DQRAT+ test of \a clause on \a pivot with respect to \a formula.
 *
 * For every partner D ∋ ¬pivot of the matrix, the outer resolvent E must
 * be tautological or abs(Π : φ ∧ ¬E, dep(E)) must propagate to a conflict.
 */
bool dqrat_plus_check(const Dqbf& formula, const Clause& clause, Literal pivot);

/**
 * \brief Removes clauses with DQRAT+ on an existential literal and universal
 *        literals with DQRAT+, tested against the matrix without the clause.
 */
std::pair<Dqbf, PassReport> dqrat_eliminate_pass(Dqbf formula);

} // namespace dqprep

#endif
