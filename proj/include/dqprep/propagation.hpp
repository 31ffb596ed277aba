#ifndef DQPREP_PROPAGATION_HPP_
#define DQPREP_PROPAGATION_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "formula.hpp"

/**
 * \file propagation.hpp
 * \brief Universal reduction, unit propagation with universal reduction,
 *        abstraction, and the propagation-based clause derivation test.
 */

namespace dqprep {

/**
 * \brief Removes every universal literal of \a clause that no existential
 *        literal of \a clause depends on.
 */
Clause universal_reduce_clause(const Prefix& prefix, const Clause& clause);

/// Clause-wise universal reduction; the prefix is left untouched.
Dqbf universal_reduce(const Dqbf& formula);

enum class PropagationKind { Conflict, Fixpoint };

struct PropagationOutcome
{
    PropagationKind kind = PropagationKind::Fixpoint;
    /// The fixpoint formula with the propagated variables removed from the prefix.
    Dqbf result;
    /// Existential unit literals in the order they were processed.
    std::vector<Literal> units;

    bool conflict() const noexcept { return kind == PropagationKind::Conflict; }
};

/// Unit propagation with universal reduction, iterated to the fixpoint.
PropagationOutcome unit_propagate(const Dqbf& formula);

/**
 * \brief Turns every universal variable in \a vars into an existential
 *        variable with an empty dependency set. The matrix is unchanged.
 */
Dqbf abstract(const Dqbf& formula, const VarSet& vars);

/**
 * \brief True iff unit propagation on abs(Π : φ ∧ ¬C, dep(C)) yields a
 *        conflict. In that case Π : φ and Π : φ ∧ C are equivalent.
 */
bool dqat_check(const Dqbf& formula, const Clause& clause);

/**
 * \brief Reusable propagation engine over a fixed formula.
 *
 * Unit propagation is evaluated lazily: a clause is re-examined whenever one
 * of its literals becomes false, and its reduced form (unassigned literals,
 * then universal reduction) is computed from scratch. Since universal
 * reduction only ever loses supporting literals, this equals the iterated
 * rewriting of the textbook definition.
 *
 * Abstraction is handled without copying: variables passed as abstracted
 * are treated as existentials with empty dependency sets.
 *
 * The engine keeps a reference to the formula, which must outlive it and
 * must not change while it is in use.
 */
class Propagator
{
public:
    enum class Status { Conflict, Fixpoint, Aborted };

    struct Result
    {
        Status status = Status::Fixpoint;
        std::vector<Literal> units;
        std::size_t steps = 0;

        bool conflict() const noexcept { return status == Status::Conflict; }
        bool fixpoint() const noexcept { return status == Status::Fixpoint; }
    };

    static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    explicit Propagator(const Dqbf& formula);

    /**
     * \brief Propagates φ ∧ ⋀ assumptions under the abstraction of \a abstracted.
     *
     * \param assumptions literals added as unit clauses (not part of the matrix)
     * \param abstracted  universal variables treated as ∃v(∅)
     * \param skip        index of a matrix clause to ignore, if any
     * \param budget      maximal number of clause visits; Aborted when exceeded
     */
    Result run(std::span<const Literal> assumptions, const VarSet& abstracted = {},
               std::optional<std::size_t> skip = std::nullopt, std::size_t budget = unlimited);

    /// Residual formula of the last Fixpoint run: assigned variables leave the prefix, clauses are reduced.
    Dqbf residual() const;

    const Dqbf& formula() const noexcept { return formula_; }

private:
    enum class ClauseState { Satisfied, Conflict, Unit, Open };

    ClauseState inspect(std::size_t index, Literal& unit) const;
    ClauseState inspect(std::span<const Literal> lits, Literal& unit) const;
    std::vector<Literal> reduced(std::span<const Literal> lits) const;

    bool existential_now(VariableId var) const noexcept;
    bool supports(VariableId existential, VariableId universal) const noexcept;
    /// 1 true, -1 false, 0 unassigned.
    int value(Literal lit) const noexcept;
    bool assign(Literal lit);
    void reset();

    const Dqbf& formula_;
    std::vector<std::uint8_t> kind_;        ///< 0 absent, 1 universal, 2 existential
    std::vector<const VarSet*> deps_;       ///< dependency sets of existentials
    std::vector<std::vector<std::size_t>> occurrences_; ///< indexed by literal code
    std::vector<std::int8_t> values_;
    std::vector<std::uint8_t> abstracted_;
    std::vector<Literal> trail_;
    std::vector<VariableId> abstracted_vars_;
    std::optional<std::size_t> skip_;
};

} // namespace dqprep

#endif
