#pragma once

#include <stdexcept>
#include <string>

namespace adtk {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct BadPrime : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct UnknownVariant : Error {
    using Error::Error;
};

struct UnknownPattern : Error {
    using Error::Error;
};

struct NotABialgebra : Error {
    using Error::Error;
};

struct NotFactorizable : Error {
    using Error::Error;
};

struct NotRotaBaxter : Error {
    using Error::Error;
};

struct NotQRB : Error {
    using Error::Error;
};

struct ZeroWeight : Error {
    using Error::Error;
};

struct Degenerate : Error {
    using Error::Error;
};

struct NotACocycle : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

/// Parse error with 1-based line/column position.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    int line;
    int column;
};

struct UnknownKind : Error {
    using Error::Error;
};

} // namespace adtk
