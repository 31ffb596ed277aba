#ifndef DQPREP_DQDIMACS_HPP_
#define DQPREP_DQDIMACS_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "formula.hpp"

namespace dqprep {

enum class Severity { Error, Warning };

struct ParseDiagnostic
{
    std::size_t line = 1;
    std::string message;
    Severity severity = Severity::Warning;
};

struct ParseResult
{
    Dqbf formula;
    std::vector<ParseDiagnostic> diagnostics;
};

/**
 * \brief Reads a formula in DQDIMACS format.
 *
 * Accepted lines: comments (`c ...`, anywhere), the header
 * `p cnf <maxvar> <nclauses>`, quantifier lines `a <vars> 0`,
 * `e <vars> 0` (depending on all universals declared so far) and
 * `d <var> <deps> 0`, followed by 0-terminated clauses. Variables that
 * occur in clauses but in no quantifier line become existentials with an
 * empty dependency set. Tautologies are dropped. Both are reported as
 * warnings; everything else that is wrong throws ParseError.
 */
ParseResult parse_dqdimacs(std::istream& in);
ParseResult parse_dqdimacs(std::string_view text);

/// Canonical DQDIMACS: one `a` line, one `d` line per existential, clauses in matrix order.
void write_dqdimacs(std::ostream& out, const Dqbf& formula);
std::string emit_dqdimacs(const Dqbf& formula);

} // namespace dqprep

#endif
