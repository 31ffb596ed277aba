#include "dqprep/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dqprep::oracle {

namespace {

constexpr unsigned max_universals = 24;

/// Where each table entry of each existential lives in a flat bit vector.
struct Layout
{
    struct Table
    {
        VariableId var;
        std::vector<VariableId> domain;
        std::vector<unsigned> domain_bits; ///< bit of each domain variable within a universal rank
        std::size_t offset = 0;
    };

    std::vector<VariableId> universals;
    std::map<VariableId, unsigned> universal_bit;
    std::vector<Table> tables;
    std::map<VariableId, std::size_t> table_of;
    std::size_t bits = 0;

    explicit Layout(const Prefix& prefix)
    {
        universals.assign(prefix.universals().begin(), prefix.universals().end());
        if (universals.size() > max_universals) throw BudgetError("too many universal variables");
        for (unsigned i = 0; i < universals.size(); ++i) universal_bit[universals[i]] = i;
        for (const auto& [y, deps] : prefix.existentials()) {
            Table table{y, std::vector<VariableId>(deps.begin(), deps.end()), {}, bits};
            for (const VariableId x : table.domain) table.domain_bits.push_back(universal_bit.at(x));
            if (table.domain.size() >= 63) throw BudgetError("dependency set too large");
            table_of[y] = tables.size();
            bits += std::size_t{1} << table.domain.size();
            tables.push_back(std::move(table));
        }
    }

    std::uint64_t universal_assignments() const { return std::uint64_t{1} << universals.size(); }

    std::size_t position(const Table& table, std::uint64_t mu) const
    {
        std::size_t rank = 0;
        for (std::size_t i = 0; i < table.domain_bits.size(); ++i) rank |= ((mu >> table.domain_bits[i]) & 1u) << i;
        return table.offset + rank;
    }
};

/// Propositional clause over table positions: +(p+1) / -(p+1).
using PropClause = std::vector<int>;
using Cnf = std::vector<PropClause>;

void check_expansion_budget(const Layout& layout, const Dqbf& formula, const Limits& limits)
{
    const std::uint64_t points = layout.universal_assignments();
    const std::uint64_t clauses = std::max<std::uint64_t>(formula.num_clauses(), 1);
    if (points > limits.max_expansion / clauses || layout.bits > limits.max_expansion) {
        throw BudgetError("universal expansion exceeds the oracle budget");
    }
}

/// Instantiates the matrix for every universal assignment. Satisfied instances are dropped.
Cnf expand(const Layout& layout, const Dqbf& formula)
{
    Cnf cnf;
    std::set<PropClause> seen;
    for (std::uint64_t mu = 0; mu < layout.universal_assignments(); ++mu) {
        for (const auto& clause : formula.clauses()) {
            PropClause instance;
            bool satisfied = false;
            for (const Literal lit : clause) {
                const auto u = layout.universal_bit.find(lit.var());
                if (u != layout.universal_bit.end()) {
                    const bool value = ((mu >> u->second) & 1u) != 0;
                    if (value != lit.negated()) {
                        satisfied = true;
                        break;
                    }
                    continue;
                }
                const auto& table = layout.tables[layout.table_of.at(lit.var())];
                const int p = static_cast<int>(layout.position(table, mu)) + 1;
                instance.push_back(lit.negated() ? -p : p);
            }
            if (satisfied) continue;
            std::sort(instance.begin(), instance.end());
            if (seen.insert(instance).second) cnf.push_back(std::move(instance));
        }
    }
    return cnf;
}

/// Plain DPLL with unit propagation. \a values: 1 true, -1 false, 0 open.
bool dpll(const Cnf& cnf, std::vector<std::int8_t>& values)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& clause : cnf) {
            int open = 0;
            int last = 0;
            bool satisfied = false;
            for (const int lit : clause) {
                const int v = values[static_cast<std::size_t>(std::abs(lit))];
                if (v == 0) {
                    ++open;
                    last = lit;
                } else if ((v > 0) == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (open == 0) return false;
            if (open == 1) {
                values[static_cast<std::size_t>(std::abs(last))] = static_cast<std::int8_t>(last > 0 ? 1 : -1);
                changed = true;
            }
        }
    }
    int branch = 0;
    for (const auto& clause : cnf) {
        bool satisfied = false;
        int open = 0;
        for (const int lit : clause) {
            const int v = values[static_cast<std::size_t>(std::abs(lit))];
            if (v == 0 && open == 0) open = std::abs(lit);
            if (v != 0 && (v > 0) == (lit > 0)) satisfied = true;
        }
        if (!satisfied) {
            branch = open;
            break;
        }
    }
    if (branch == 0) return true;
    for (const std::int8_t choice : {std::int8_t{1}, std::int8_t{-1}}) {
        auto copy = values;
        copy[static_cast<std::size_t>(branch)] = choice;
        if (dpll(cnf, copy)) return true;
    }
    return false;
}

bool satisfiable(const Cnf& cnf, std::size_t vars, std::span<const int> assumptions = {})
{
    std::vector<std::int8_t> values(vars + 1, 0);
    for (const int lit : assumptions) {
        auto& v = values[static_cast<std::size_t>(std::abs(lit))];
        const std::int8_t want = lit > 0 ? 1 : -1;
        if (v == -want) return false;
        v = want;
    }
    return dpll(cnf, values);
}

SkolemTuple tuple_from_bits(const Layout& layout, const std::vector<std::int8_t>& bits)
{
    SkolemTuple tuple;
    for (const auto& table : layout.tables) {
        SkolemFunction f{table.var, table.domain, {}};
        const std::size_t size = std::size_t{1} << table.domain.size();
        for (std::size_t r = 0; r < size; ++r) f.table.push_back(bits[table.offset + r] > 0);
        tuple.functions.push_back(std::move(f));
    }
    return tuple;
}

void require_same_prefix(const Dqbf& f1, const Dqbf& f2)
{
    if (!(f1.prefix() == f2.prefix())) throw ContractViolation("formulas have different prefixes");
}

} // namespace

bool SkolemFunction::operator()(const VariableAssignment& assignment) const
{
    std::size_t rank = 0;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        const auto it = assignment.find(domain[i]);
        if (it == assignment.end()) throw ContractViolation("assignment does not cover the Skolem domain");
        if (it->second) rank |= std::size_t{1} << i;
    }
    return table.at(rank);
}

const SkolemFunction* SkolemTuple::find(VariableId var) const
{
    for (const auto& f : functions) {
        if (f.variable == var) return &f;
    }
    return nullptr;
}

bool evaluate(std::span<const Clause> matrix, const VariableAssignment& assignment)
{
    bool result = true;
    for (const auto& clause : matrix) {
        bool satisfied = false;
        for (const Literal lit : clause) {
            const auto it = assignment.find(lit.var());
            if (it == assignment.end()) throw ContractViolation("partial assignment");
            if (it->second != lit.negated()) satisfied = true;
        }
        if (!satisfied) result = false;
    }
    return result;
}

bool is_skolem(const Dqbf& formula, const SkolemTuple& tuple)
{
    const Prefix& prefix = formula.prefix();
    if (tuple.functions.size() != prefix.existentials().size()) {
        throw ContractViolation("tuple does not cover the existential variables");
    }
    for (const auto& f : tuple.functions) {
        if (!prefix.is_existential(f.variable)) throw ContractViolation("tuple names a non-existential variable");
        const VarSet& deps = prefix.dependencies(f.variable);
        if (!std::equal(f.domain.begin(), f.domain.end(), deps.begin(), deps.end())) {
            throw ContractViolation("Skolem domain differs from the dependency set");
        }
        if (f.table.size() != (std::size_t{1} << f.domain.size())) throw ContractViolation("truth table has wrong size");
    }
    const std::vector<VariableId> universals(prefix.universals().begin(), prefix.universals().end());
    if (universals.size() > max_universals) throw BudgetError("too many universal variables");
    for (std::uint64_t mu = 0; mu < (std::uint64_t{1} << universals.size()); ++mu) {
        VariableAssignment assignment;
        for (std::size_t i = 0; i < universals.size(); ++i) assignment[universals[i]] = ((mu >> i) & 1u) != 0;
        for (const auto& f : tuple.functions) assignment[f.variable] = f(assignment);
        if (!evaluate(formula.clauses(), assignment)) return false;
    }
    return true;
}

SolveResult solve_brute(const Dqbf& formula, const Limits& limits)
{
    const Layout layout(formula.prefix());
    if (layout.bits > limits.max_table_bits) {
        throw BudgetError("Skolem candidate space 2^" + std::to_string(layout.bits) + " exceeds the oracle budget");
    }
    check_expansion_budget(layout, formula, limits);
    const Cnf instances = expand(layout, formula);

    // Each instance can be decided once its highest position is assigned.
    std::vector<std::vector<std::size_t>> decided_at(layout.bits);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (instances[i].empty()) return {};
        std::size_t high = 0;
        for (const int lit : instances[i]) high = std::max(high, static_cast<std::size_t>(std::abs(lit) - 1));
        decided_at[high].push_back(i);
    }

    std::vector<std::int8_t> bits(layout.bits, 0);
    auto falsified = [&](std::size_t i) {
        return std::all_of(instances[i].begin(), instances[i].end(), [&](int lit) {
            return (bits[static_cast<std::size_t>(std::abs(lit) - 1)] > 0) != (lit > 0);
        });
    };
    // Iterative DFS: bits[p] == 0 means untried, -1 means tried 0, 1 means tried 1.
    std::size_t depth = 0;
    while (true) {
        if (depth == layout.bits) return {true, tuple_from_bits(layout, bits)};
        auto& current = bits[depth];
        if (current == 1) {
            current = 0;
            if (depth == 0) return {};
            --depth;
            continue;
        }
        current = static_cast<std::int8_t>(current == 0 ? -1 : 1);
        const bool ok = std::none_of(decided_at[depth].begin(), decided_at[depth].end(), falsified);
        if (ok) ++depth;
    }
}

bool solve_expansion(const Dqbf& formula, const Limits& limits)
{
    const Layout layout(formula.prefix());
    check_expansion_budget(layout, formula, limits);
    return satisfiable(expand(layout, formula), layout.bits);
}

bool implies(const Dqbf& f1, const Dqbf& f2, const Limits& limits)
{
    require_same_prefix(f1, f2);
    const Layout layout(f1.prefix());
    check_expansion_budget(layout, f1, limits);
    check_expansion_budget(layout, f2, limits);
    const Cnf cnf1 = expand(layout, f1);
    const Cnf cnf2 = expand(layout, f2);
    const std::set<PropClause> known(cnf1.begin(), cnf1.end());
    // models(cnf1) ⊆ models(cnf2) iff cnf1 entails every clause of cnf2
    for (const auto& clause : cnf2) {
        if (known.contains(clause)) continue;
        std::vector<int> negated;
        for (const int lit : clause) negated.push_back(-lit);
        if (satisfiable(cnf1, layout.bits, negated)) return false;
    }
    return true;
}

bool equivalent(const Dqbf& f1, const Dqbf& f2, const Limits& limits)
{
    return implies(f1, f2, limits) && implies(f2, f1, limits);
}

bool equisatisfiable(const Dqbf& f1, const Dqbf& f2, const Limits& limits)
{
    return solve_expansion(f1, limits) == solve_expansion(f2, limits);
}

SkolemTuple tuple_from_index(const Dqbf& formula, std::uint64_t index)
{
    const Layout layout(formula.prefix());
    if (layout.bits > 63) throw BudgetError("tuple index does not fit 64 bits");
    std::vector<std::int8_t> bits(layout.bits);
    for (std::size_t p = 0; p < layout.bits; ++p) {
        bits[p] = ((index >> (layout.bits - 1 - p)) & 1u) != 0 ? 1 : -1;
    }
    return tuple_from_bits(layout, bits);
}

std::vector<std::uint64_t> skolem_tuple_indices(const Dqbf& formula, const Limits& limits)
{
    const Layout layout(formula.prefix());
    if (layout.bits > limits.max_table_bits || layout.bits > 40) {
        throw BudgetError("Skolem candidate space exceeds the oracle budget");
    }
    std::vector<std::uint64_t> result;
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << layout.bits); ++index) {
        if (is_skolem(formula, tuple_from_index(formula, index))) result.push_back(index);
    }
    return result;
}

} // namespace dqprep::oracle
