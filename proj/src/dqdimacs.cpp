#include "dqprep/dqdimacs.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

namespace dqprep {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::int64_t to_int(std::string_view token, std::size_t line)
{
    std::int64_t value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || first == token.data() + token.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

class Parser
{
public:
    ParseResult run(std::istream& in)
    {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            std::string_view text(raw);
            if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
            const auto tokens = split_tokens(text);
            if (tokens.empty()) continue;
            const std::string_view head = tokens.front();
            if (head == "c" || head.front() == 'c') continue;
            if (head == "p") {
                header(tokens);
            } else if (head == "a" || head == "e" || head == "d") {
                quantifier(tokens);
            } else {
                clause_tokens(tokens);
            }
        }
        if (!seen_header_) throw ParseError(line_ == 0 ? 1 : line_, "missing 'p cnf' header");
        if (!pending_.empty()) throw ParseError(line_, "last clause is not terminated by 0");
        return finish();
    }

private:
    void header(const std::vector<std::string_view>& tokens)
    {
        if (seen_header_) throw ParseError(line_, "duplicate header");
        if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError(line_, "malformed header, expected 'p cnf <vars> <clauses>'");
        const auto vars = to_int(tokens[2], line_);
        const auto clauses = to_int(tokens[3], line_);
        if (vars < 0 || clauses < 0 || vars > std::int64_t{UINT32_MAX >> 2}) throw ParseError(line_, "malformed header, negative or oversized count");
        max_var_ = static_cast<std::uint32_t>(vars);
        declared_clauses_ = static_cast<std::size_t>(clauses);
        seen_header_ = true;
    }

    void require_header() const
    {
        if (!seen_header_) throw ParseError(line_, "missing 'p cnf' header before content");
    }

    VariableId declared_var(std::int64_t value) const
    {
        if (value <= 0 || value > max_var_) {
            throw ParseError(line_, "invalid variable " + std::to_string(value) + " in quantifier line");
        }
        return VariableId(static_cast<std::uint32_t>(value));
    }

    std::vector<std::int64_t> zero_terminated(const std::vector<std::string_view>& tokens) const
    {
        std::vector<std::int64_t> values;
        for (std::size_t i = 1; i < tokens.size(); ++i) values.push_back(to_int(tokens[i], line_));
        if (values.empty() || values.back() != 0) throw ParseError(line_, "quantifier line must end with 0");
        values.pop_back();
        for (const auto v : values) {
            if (v == 0) throw ParseError(line_, "unexpected 0 inside quantifier line");
        }
        return values;
    }

    void quantifier(const std::vector<std::string_view>& tokens)
    {
        require_header();
        if (seen_clause_) throw ParseError(line_, "quantifier line after the first clause");
        const auto values = zero_terminated(tokens);
        const char kind = tokens.front().front();
        try {
            if (kind == 'a') {
                for (const auto v : values) prefix_.add_universal(declared_var(v));
            } else if (kind == 'e') {
                for (const auto v : values) prefix_.add_existential(declared_var(v), prefix_.universals());
            } else {
                if (values.empty()) throw ParseError(line_, "'d' line without variable");
                const VariableId y = declared_var(values.front());
                VarSet deps;
                for (std::size_t i = 1; i < values.size(); ++i) {
                    const VariableId x = declared_var(values[i]);
                    if (!prefix_.is_universal(x)) {
                        throw ParseError(line_, "dependency " + std::to_string(values[i]) + " is not a declared universal");
                    }
                    deps.insert(x);
                }
                prefix_.add_existential(y, std::move(deps));
            }
        } catch (const ContractViolation& e) {
            throw ParseError(line_, e.what());
        }
    }

    void clause_tokens(const std::vector<std::string_view>& tokens)
    {
        require_header();
        seen_clause_ = true;
        for (const auto token : tokens) {
            const auto value = to_int(token, line_);
            if (value == 0) {
                end_clause();
                continue;
            }
            const auto magnitude = value < 0 ? -value : value;
            if (magnitude > max_var_) {
                throw ParseError(line_, "variable " + std::to_string(magnitude) + " exceeds the header bound "
                                            + std::to_string(max_var_));
            }
            pending_.push_back(Literal::from_dimacs(value));
        }
    }

    void end_clause()
    {
        auto clause = normalize_clause(pending_);
        pending_.clear();
        ++read_clauses_;
        if (!clause) {
            warn("tautological clause dropped");
            return;
        }
        for (const Literal lit : *clause) {
            if (!prefix_.contains(lit.var()) && !free_.contains(lit.var())) {
                free_.insert(lit.var());
                warn("free variable " + std::to_string(lit.var().value()) + " treated as outermost existential");
            }
        }
        clauses_.push_back(std::move(*clause));
    }

    void warn(std::string message)
    {
        diagnostics_.push_back({line_, std::move(message), Severity::Warning});
    }

    ParseResult finish()
    {
        if (read_clauses_ != declared_clauses_) {
            warn("header announces " + std::to_string(declared_clauses_) + " clauses, found "
                 + std::to_string(read_clauses_));
        }
        for (const VariableId v : free_) prefix_.add_existential(v, {});
        ParseResult result{Dqbf(std::move(prefix_)), std::move(diagnostics_)};
        for (auto& clause : clauses_) result.formula.add_clause(std::move(clause));
        return result;
    }

    std::size_t line_ = 0;
    bool seen_header_ = false;
    bool seen_clause_ = false;
    std::uint32_t max_var_ = 0;
    std::size_t declared_clauses_ = 0;
    std::size_t read_clauses_ = 0;
    Prefix prefix_;
    VarSet free_;
    std::vector<Literal> pending_;
    std::vector<Clause> clauses_;
    std::vector<ParseDiagnostic> diagnostics_;
};

} // namespace

ParseResult parse_dqdimacs(std::istream& in)
{
    return Parser().run(in);
}

ParseResult parse_dqdimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_dqdimacs(in);
}

void write_dqdimacs(std::ostream& out, const Dqbf& formula)
{
    const Prefix& prefix = formula.prefix();
    out << "p cnf " << prefix.max_variable() << ' ' << formula.num_clauses() << '\n';
    if (!prefix.universals().empty()) {
        out << 'a';
        for (const VariableId x : prefix.universals()) out << ' ' << x.value();
        out << " 0\n";
    }
    for (const auto& [y, deps] : prefix.existentials()) {
        out << "d " << y.value();
        for (const VariableId x : deps) out << ' ' << x.value();
        out << " 0\n";
    }
    for (const auto& clause : formula.clauses()) {
        for (const Literal lit : clause) out << lit.to_dimacs() << ' ';
        out << "0\n";
    }
}

std::string emit_dqdimacs(const Dqbf& formula)
{
    std::ostringstream out;
    write_dqdimacs(out, formula);
    return out.str();
}

} // namespace dqprep
