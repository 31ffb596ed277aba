#ifndef DQPREP_FUZZ_HPP_
#define DQPREP_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "formula.hpp"

namespace dqprep {

/// Shape of generated formulas. The defaults keep every formula within the oracle's reach.
struct FuzzBounds
{
    unsigned max_universals = 3;
    unsigned max_existentials = 3;
    unsigned max_clauses = 8;
    unsigned max_width = 4;
};

/**
 * \brief Deterministic generator of small random DQBFs.
 *
 * Draws use mt19937_64 with modulo reduction only, so a seed produces the
 * same stream on every platform.
 */
class FormulaFuzzer
{
public:
    explicit FormulaFuzzer(std::uint64_t seed, FuzzBounds bounds = {});

    Dqbf next();
    /// A random non-tautological clause over the variables of \a formula (may be empty).
    Clause random_clause(const Dqbf& formula, unsigned max_width);
    /// Uniform draw from [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

private:
    std::mt19937_64 rng_;
    FuzzBounds bounds_;
};

std::vector<Dqbf> fuzz(std::uint64_t seed, std::size_t count, const FuzzBounds& bounds = {});

} // namespace dqprep

#endif
