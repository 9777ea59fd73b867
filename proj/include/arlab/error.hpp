#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arlab {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an intermediate value would not fit a 64-bit word.
class RangeError : public std::range_error
{
public:
    using std::range_error::range_error;
};

/// Raised when a size is beyond what the library can certify (e.g. an ES
/// value that is neither known nor computable within budget).
class UnsupportedSize : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Graph / labeling file errors. Carries the line of the offending token and
/// a field path such as `edges[3][1]`.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string message, std::size_t line, std::string field)
        : std::runtime_error(format(message, line, field)),
          line_(line),
          field_(std::move(field))
    {
    }

    auto line() const -> std::size_t { return line_; }
    auto field() const -> const std::string & { return field_; }

private:
    static auto format(const std::string & message, std::size_t line, const std::string & field) -> std::string
    {
        std::string out = message;
        if (line != 0)
            out += " (line " + std::to_string(line) + ")";
        if (! field.empty())
            out += " at " + field;
        return out;
    }

    std::size_t line_;
    std::string field_;
};

} // namespace arlab
