#pragma once

#include <stdexcept>
#include <string>

namespace graphalg {

/// Input text could not be parsed. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An enumeration or analysis cap was exceeded.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check that should never fail did fail (e.g. oracle disagreement).
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graphalg
