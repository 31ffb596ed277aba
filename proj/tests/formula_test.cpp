#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dqprep/formula.hpp"
#include "dqprep/fuzz.hpp"
#include "test_util.hpp"

namespace dqprep {
namespace {

using testing::cl;
using testing::make;
using testing::make_prefix;
using testing::vars;

TEST(Literal, DimacsRoundTrip)
{
    for (const int v : {1, -1, 7, -42}) EXPECT_EQ(Literal::from_dimacs(v).to_dimacs(), v);
    EXPECT_EQ(~pos(3), neg(3));
    EXPECT_LT(pos(3), neg(3));
    EXPECT_LT(neg(3), pos(4));
}

TEST(Dep, ExistentialVariable)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_EQ(dep(prefix, VariableId(2)), vars({1}));
}

TEST(Dep, UniversalVariable)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_EQ(dep(prefix, VariableId(1)), vars({1}));
    EXPECT_EQ(dep(prefix, neg(1)), vars({1}));
}

TEST(Dep, Clause)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_EQ(dep(prefix, cl({1, -2})), vars({1}));
    EXPECT_TRUE(dep(prefix, Clause{}).empty());
}

TEST(Dep, UnknownVariableThrows)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_THROW(dep(prefix, VariableId(3)), CompatibilityError);
    EXPECT_THROW(dep(prefix, cl({1, 5})), CompatibilityError);
}

TEST(Dep, ClauseIsUnionOfLiterals)
{
    FormulaFuzzer fuzzer(11);
    for (int i = 0; i < 300; ++i) {
        const Dqbf f = fuzzer.next();
        const Clause c = fuzzer.random_clause(f, 4);
        VarSet expected;
        for (const Literal lit : c) expected.merge(dep(f, lit));
        EXPECT_EQ(dep(f, c), expected);
    }
}

TEST(PrefixRemove, UniversalLeavesDependencySets)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_EQ(prefix_remove(prefix, VariableId(1)), make_prefix({}, {{2, {}}}));
}

TEST(PrefixRemove, Existential)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_EQ(prefix_remove(prefix, VariableId(2)), make_prefix({1}, {}));
}

TEST(PrefixRemove, OneOfTwoDependencies)
{
    const auto prefix = make_prefix({1, 2}, {{3, {1, 2}}});
    EXPECT_EQ(prefix_remove(prefix, VariableId(2)), make_prefix({1}, {{3, {1}}}));
}

TEST(PrefixRemove, AbsentVariableThrows)
{
    const auto prefix = make_prefix({1}, {{2, {1}}});
    EXPECT_THROW(prefix_remove(prefix, VariableId(9)), NotInPrefixError);
}

TEST(PrefixRemove, UniversalGoneEverywhere)
{
    FormulaFuzzer fuzzer(5);
    for (int i = 0; i < 300; ++i) {
        const Dqbf f = fuzzer.next();
        for (const VariableId u : f.prefix().universals()) {
            const Prefix p = prefix_remove(f.prefix(), u);
            EXPECT_FALSE(p.contains(u));
            for (const auto& [y, deps] : p.existentials()) EXPECT_FALSE(deps.contains(u));
        }
    }
}

TEST(Prefix, RejectsBadDeclarations)
{
    Prefix prefix;
    prefix.add_universal(VariableId(1));
    EXPECT_THROW(prefix.add_universal(VariableId(1)), ContractViolation);
    EXPECT_THROW(prefix.add_existential(VariableId(1), {}), ContractViolation);
    EXPECT_THROW(prefix.add_existential(VariableId(2), vars({3})), ContractViolation);
    prefix.add_existential(VariableId(2), vars({1}));
    EXPECT_THROW(prefix.add_existential(VariableId(3), vars({2})), ContractViolation);
    EXPECT_EQ(prefix.max_variable(), 2u);
}

TEST(NormalizeClause, Duplicates)
{
    const std::vector<Literal> raw{pos(2), pos(2)};
    EXPECT_EQ(normalize_clause(raw), Clause{pos(2)});
}

TEST(NormalizeClause, Tautology)
{
    const std::vector<Literal> raw{pos(1), neg(1)};
    EXPECT_FALSE(normalize_clause(raw).has_value());
    EXPECT_THROW(Clause({pos(1), neg(1)}), ContractViolation);
}

TEST(NormalizeClause, CanonicalOrder)
{
    const std::vector<Literal> raw{neg(2), pos(1)};
    const auto c = normalize_clause(raw);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->literals(), (std::vector<Literal>{pos(1), neg(2)}));
}

TEST(NormalizeClause, Idempotent)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        std::vector<Literal> raw;
        const int n = static_cast<int>(rng() % 6);
        for (int k = 0; k < n; ++k) raw.push_back(Literal(VariableId(1 + rng() % 4), rng() % 2 == 0));
        const auto once = normalize_clause(raw);
        if (!once) continue;
        const auto twice = normalize_clause(once->literals());
        ASSERT_TRUE(twice.has_value());
        EXPECT_EQ(*once, *twice);
    }
}

TEST(IsCompatible, Examples)
{
    const Dqbf f = testing::copy_formula();
    EXPECT_TRUE(is_compatible(f, cl({1, -2})));
    EXPECT_FALSE(is_compatible(f, cl({3})));
    EXPECT_TRUE(is_compatible(f, Clause{}));
}

TEST(Dqbf, RejectsIncompatibleClause)
{
    EXPECT_THROW(make({1}, {}, {{2}}), CompatibilityError);
}

TEST(Dqbf, MatrixIsAnOrderedSet)
{
    Dqbf f = make({1}, {{2, {1}}}, {{1, -2}, {-1, 2}, {1, -2}});
    EXPECT_EQ(f.num_clauses(), 2u);
    EXPECT_FALSE(f.add_clause(cl({-1, 2})));
    EXPECT_TRUE(f.add_clause(cl({2})));
    EXPECT_EQ(f.find_clause(cl({2})), std::optional<std::size_t>(2));
    EXPECT_EQ(f.literal_count(), 5u);

    EXPECT_FALSE(f.replace_clause(0, cl({2})));
    EXPECT_EQ(f.num_clauses(), 2u);
    EXPECT_EQ(f.clause(0), cl({-1, 2}));
    EXPECT_TRUE(f.replace_clause(1, Clause{}));
    EXPECT_TRUE(f.has_empty_clause());
}

TEST(Dqbf, ClausePrinting)
{
    std::ostringstream out;
    out << cl({-2, 1});
    EXPECT_EQ(out.str(), "(1 -2)");
}

} // namespace
} // namespace dqprep
