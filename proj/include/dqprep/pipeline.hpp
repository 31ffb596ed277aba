#ifndef DQPREP_PIPELINE_HPP_
#define DQPREP_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "formula.hpp"
#include "oracle.hpp"
#include "techniques.hpp"

namespace dqprep {

enum class Pass { UniversalReduction, UnitPropagation, Upla, Vivify, Dqrat };

std::string_view pass_name(Pass pass) noexcept;
/// Parses a comma separated list of ur, up, upla, vivify, dqrat. Throws ContractViolation.
std::vector<Pass> parse_pass_list(std::string_view csv);

struct PipelineConfig
{
    std::vector<Pass> passes{Pass::UniversalReduction, Pass::UnitPropagation, Pass::Upla, Pass::Vivify,
                             Pass::Dqrat};
    unsigned max_rounds = 10;
    std::size_t vivify_budget = default_vivify_budget;
    bool upla_existential_only = false;
    /// Cross-check every pass against the oracle.
    bool verify = false;
    std::uint64_t seed = 0;
    oracle::Limits budget;
};

enum class Verdict { Sat, Unsat, Unknown };

std::string_view verdict_name(Verdict verdict) noexcept;

struct PipelineResult
{
    Dqbf formula;
    std::vector<PassReport> reports;
    Verdict verdict = Verdict::Unknown;
    unsigned rounds = 0;
    /// Oracle checks that were skipped because of the budget.
    std::vector<std::string> warnings;
};

/**
 * \brief Runs the configured passes in order, repeating the whole sequence
 *        until a round leaves the formula unchanged or max_rounds is reached.
 *
 * The run stops early once the matrix is empty (SAT) or contains the empty
 * clause (UNSAT); an UNSAT result carries the empty clause as its only
 * clause. With config.verify, ur, up, upla and vivify must preserve
 * equivalence and dqrat satisfiability; a violation throws
 * VerificationError with both formulas in DQDIMACS.
 */
PipelineResult run_pipeline(const PipelineConfig& config, Dqbf formula);

} // namespace dqprep

#endif
