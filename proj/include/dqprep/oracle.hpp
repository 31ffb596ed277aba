#ifndef DQPREP_ORACLE_HPP_
#define DQPREP_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "formula.hpp"

/**
 * \file oracle.hpp
 * \brief Brute-force semantics of DQBFs for validating transformations on
 *        small formulas. Nothing here is meant to be fast.
 *
 * Assignments of a variable set are ranked by reading the variables in
 * ascending id order as a binary number with the smallest id as the least
 * significant bit. A Skolem function for y stores one truth value per rank
 * of an assignment of D_y.
 */

namespace dqprep::oracle {

using VariableAssignment = std::map<VariableId, bool>;

struct SkolemFunction
{
    VariableId variable;
    std::vector<VariableId> domain; ///< D_y in ascending order
    std::vector<bool> table;        ///< 2^|domain| entries, indexed by rank

    /// Value under \a assignment, which must cover the domain.
    bool operator()(const VariableAssignment& assignment) const;
};

/// One Skolem function per existential, ordered by variable id.
struct SkolemTuple
{
    std::vector<SkolemFunction> functions;

    const SkolemFunction* find(VariableId var) const;
};

struct Limits
{
    /// Upper bound on Σ_y 2^|D_y| for enumeration of Skolem tuples.
    unsigned max_table_bits = 20;
    /// Upper bound on 2^|universals| × |matrix| for expansion based methods.
    std::size_t max_expansion = std::size_t{1} << 20;
};

struct SolveResult
{
    bool sat = false;
    std::optional<SkolemTuple> witness;
};

/// Every clause of \a matrix has a true literal. Throws ContractViolation on a partial assignment.
bool evaluate(std::span<const Clause> matrix, const VariableAssignment& assignment);

/// For every universal assignment μ the matrix holds under μ ∪ {y ↦ s_y(μ|D_y)}.
bool is_skolem(const Dqbf& formula, const SkolemTuple& tuple);

/**
 * \brief Searches Skolem tuples in canonical order and returns the first one
 *        that satisfies the formula.
 *
 * Canonical order is lexicographic over the table entries, existentials by
 * ascending id and each table by ascending rank, with 0 before 1. Partial
 * tuples that already falsify a clause for some universal assignment are
 * pruned, which does not change the first witness.
 */
SolveResult solve_brute(const Dqbf& formula, const Limits& limits = {});

/**
 * \brief Decides the formula by universal expansion: one propositional
 *        variable per table entry, one clause per matrix clause and universal
 *        assignment, decided by a DPLL search.
 */
bool solve_expansion(const Dqbf& formula, const Limits& limits = {});

/// Every Skolem function of \a f1 is one of \a f2. The prefixes must be equal.
bool implies(const Dqbf& f1, const Dqbf& f2, const Limits& limits = {});

/// \a f1 and \a f2 have the same Skolem functions. The prefixes must be equal.
bool equivalent(const Dqbf& f1, const Dqbf& f2, const Limits& limits = {});

bool equisatisfiable(const Dqbf& f1, const Dqbf& f2, const Limits& limits = {});

/**
 * \brief Indices of all Skolem tuples of \a formula, by plain enumeration.
 *
 * The index of a tuple reads its table entries in canonical order as a
 * binary number, first entry most significant.
 */
std::vector<std::uint64_t> skolem_tuple_indices(const Dqbf& formula, const Limits& limits = {});

/// Decodes a tuple index (see skolem_tuple_indices) for the prefix of \a formula.
SkolemTuple tuple_from_index(const Dqbf& formula, std::uint64_t index);

} // namespace dqprep::oracle

#endif
