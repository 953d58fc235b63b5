#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text or functor expression. `line` and `column` are
/// 1-based; a zero means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        std::string prefix;
        if (line != 0) prefix += "line " + std::to_string(line);
        if (column != 0) prefix += (prefix.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
        return prefix.empty() ? what : prefix + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// A vertex or edge name that does not belong to the graph, or a vertex set
/// built over a different universe.
class LookupError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but violates a mathematical precondition
/// (non-hereditary set, infinite emitter where refused, and so on).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exponential enumeration was requested on a graph above the cap.
class CapExceeded : public DomainError {
public:
    CapExceeded(std::size_t vertices, std::size_t cap)
        : DomainError("graph has " + std::to_string(vertices) + " vertices, enumeration cap is " +
                      std::to_string(cap)) {}
};

}  // namespace lpa
