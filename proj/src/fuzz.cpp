#include "dqprep/fuzz.hpp"

#include <algorithm>

namespace dqprep {

FormulaFuzzer::FormulaFuzzer(std::uint64_t seed, FuzzBounds bounds) : rng_(seed), bounds_(bounds) {}

Dqbf FormulaFuzzer::next()
{
    const auto universals = static_cast<unsigned>(below(bounds_.max_universals + 1));
    auto existentials = bounds_.max_existentials == 0 ? 0u : static_cast<unsigned>(1 + below(bounds_.max_existentials));
    if (universals + existentials == 0) existentials = 1;
    const unsigned n = universals + existentials;

    // Fisher-Yates with our own draws, std::shuffle is not portable
    std::vector<std::uint32_t> ids(n);
    for (unsigned i = 0; i < n; ++i) ids[i] = i + 1;
    for (unsigned i = n; i > 1; --i) std::swap(ids[i - 1], ids[below(i)]);

    Prefix prefix;
    for (unsigned i = 0; i < universals; ++i) prefix.add_universal(VariableId(ids[i]));
    for (unsigned i = universals; i < n; ++i) {
        VarSet deps;
        for (const VariableId x : prefix.universals()) {
            if (below(2) != 0) deps.insert(x);
        }
        prefix.add_existential(VariableId(ids[i]), std::move(deps));
    }

    Dqbf formula(std::move(prefix));
    const auto clauses = bounds_.max_clauses == 0 ? 0 : 1 + below(bounds_.max_clauses);
    for (std::uint64_t c = 0; c < clauses; ++c) {
        auto clause = random_clause(formula, bounds_.max_width);
        if (clause.empty()) continue;
        formula.add_clause(std::move(clause));
    }
    return formula;
}

Clause FormulaFuzzer::random_clause(const Dqbf& formula, unsigned max_width)
{
    std::vector<VariableId> vars = formula.prefix().variables();
    const auto limit = std::min<std::uint64_t>(max_width, vars.size());
    if (limit == 0) return {};
    // unit clauses decide too much too early, keep them rare
    const auto width = limit == 1 || below(8) == 0 ? 1 : 2 + below(limit - 1);
    std::vector<Literal> lits;
    for (std::uint64_t k = 0; k < width; ++k) {
        const auto pick = k + below(vars.size() - k);
        std::swap(vars[k], vars[pick]);
        lits.emplace_back(vars[k], below(2) != 0);
    }
    return Clause(lits);
}

std::vector<Dqbf> fuzz(std::uint64_t seed, std::size_t count, const FuzzBounds& bounds)
{
    FormulaFuzzer fuzzer(seed, bounds);
    std::vector<Dqbf> result;
    result.reserve(count);
    for (std::size_t i = 0; i < count; ++i) result.push_back(fuzzer.next());
    return result;
}

} // namespace dqprep
