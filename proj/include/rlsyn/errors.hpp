#pragma once

#include <stdexcept>
#include <string>

namespace rlsyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DegenerateGate : Error {
    using Error::Error;
};

struct WidthMismatch : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct BudgetInfeasible : Error {
    using Error::Error;
};

struct ScratchExhausted : Error {
    using Error::Error;
};

struct DoubleRelease : Error {
    using Error::Error;
};

/// Thrown when the requested ancilla budget cannot host even the minimal
/// wire layout; carries the smallest budget that would work.
struct QBudgetTooSmall : Error {
    QBudgetTooSmall(std::uint64_t minimum, const std::string& msg)
        : Error(msg), minimum_budget(minimum) {}
    std::uint64_t minimum_budget;
};

struct ParseError : Error {
    ParseError(int line_no, const std::string& msg) : Error(msg), line(line_no) {}
    int line;
};

struct WrongLineCount : ParseError {
    using ParseError::ParseError;
};

struct BadDigit : ParseError {
    using ParseError::ParseError;
};

struct UnknownGateArity : ParseError {
    using ParseError::ParseError;
};

} // namespace rlsyn
