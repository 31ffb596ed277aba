#ifndef DQPREP_LITERAL_HPP_
#define DQPREP_LITERAL_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>

namespace dqprep {

/**
 * \brief Identifier of a Boolean variable, 1-based as in DQDIMACS.
 */
class VariableId
{
public:
    constexpr VariableId() = default;
    constexpr explicit VariableId(std::uint32_t id) noexcept : id_(id) {}

    constexpr std::uint32_t value() const noexcept { return id_; }
    constexpr bool valid() const noexcept { return id_ != 0; }

    friend constexpr auto operator<=>(VariableId, VariableId) = default;

private:
    std::uint32_t id_ = 0;
};

using VarSet = std::set<VariableId>;

/**
 * \brief A variable or its negation.
 *
 * Stored as 2*var + sign, so the natural order sorts by variable first and
 * puts the positive literal before the negative one.
 */
class Literal
{
public:
    constexpr Literal() = default;
    constexpr Literal(VariableId var, bool negated) noexcept
        : code_((var.value() << 1) | static_cast<std::uint32_t>(negated))
    {}

    /// Builds a literal from its signed DIMACS representation (non-zero).
    static constexpr Literal from_dimacs(std::int64_t value) noexcept
    {
        return value < 0 ? Literal(VariableId(static_cast<std::uint32_t>(-value)), true)
                         : Literal(VariableId(static_cast<std::uint32_t>(value)), false);
    }

    constexpr VariableId var() const noexcept { return VariableId(code_ >> 1); }
    constexpr bool negated() const noexcept { return (code_ & 1u) != 0; }
    constexpr std::uint32_t code() const noexcept { return code_; }

    constexpr std::int64_t to_dimacs() const noexcept
    {
        const auto v = static_cast<std::int64_t>(var().value());
        return negated() ? -v : v;
    }

    constexpr Literal operator~() const noexcept
    {
        Literal result;
        result.code_ = code_ ^ 1u;
        return result;
    }

    friend constexpr auto operator<=>(Literal, Literal) = default;

private:
    std::uint32_t code_ = 0;
};

/// Shorthand used heavily by tests: pos(3) is x3, neg(3) is -x3.
constexpr Literal pos(std::uint32_t var) noexcept { return Literal(VariableId(var), false); }
constexpr Literal neg(std::uint32_t var) noexcept { return Literal(VariableId(var), true); }

std::ostream& operator<<(std::ostream& out, VariableId var);
std::ostream& operator<<(std::ostream& out, Literal lit);

} // namespace dqprep

template <>
struct std::hash<dqprep::VariableId>
{
    std::size_t operator()(dqprep::VariableId v) const noexcept { return std::hash<std::uint32_t>{}(v.value()); }
};

template <>
struct std::hash<dqprep::Literal>
{
    std::size_t operator()(dqprep::Literal l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};

#endif
