#ifndef DQPREP_ERRORS_HPP_
#define DQPREP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqprep {

/// Base class of all exceptions thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A clause, literal or variable does not belong to the formula.
class CompatibilityError : public Error
{
public:
    using Error::Error;
};

/// A variable that was expected in the prefix is missing.
class NotInPrefixError : public Error
{
public:
    using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public Error
{
public:
    using Error::Error;
};

/// The kernel of a universal variable on which no existential depends.
class KernelUndefined : public Error
{
public:
    using Error::Error;
};

/// The oracle would exceed its work bound. Never a verdict.
class BudgetError : public Error
{
public:
    using Error::Error;
};

/// A transformation failed its oracle cross-check.
class VerificationError : public Error
{
public:
    VerificationError(const std::string& what, std::string counterexample)
        : Error(what), counterexample_(std::move(counterexample))
    {}

    const std::string& counterexample() const noexcept { return counterexample_; }

private:
    std::string counterexample_;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(message)
    {}

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

} // namespace dqprep

#endif
