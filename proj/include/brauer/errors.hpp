#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Invalid preset or formula parameters, or an out-of-range index.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed tree file text. Line and column are 1-based; 0 means the
/// problem is structural (wrong field type, missing key) rather than lexical.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column)
                                      : what),
          line_(line), column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A tree that parses but breaks a structural invariant.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured dimension budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (family, q, r) does not fit the case analysis.
class ClassificationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace brauer
