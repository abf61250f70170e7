#pragma once

#include <stdexcept>
#include <string>

namespace spanweight {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph files, weighting files, rational literals).
struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_no(line) {}
    int line_no = 0;
};

// A precondition on arguments was violated (unknown vertex, a <= 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// Instance exceeds a documented size or time budget.
struct ResourceLimit : Error {
    using Error::Error;
};

// A condition the underlying theorem guarantees failed at runtime; indicates
// an implementation bug. Carries a diagnostic dump for triage.
struct InternalInvariantViolation : Error {
    InternalInvariantViolation(const std::string& msg, std::string dump_json = "")
        : Error(msg), dump(std::move(dump_json)) {}
    std::string dump;
};

} // namespace spanweight
