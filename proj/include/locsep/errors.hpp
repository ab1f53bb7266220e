#ifndef LOCSEP_ERRORS_HPP
#define LOCSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace locsep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed edge-list input.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
};

// An input file that cannot be read.
struct InputError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// An enumeration exceeded its configured cap.
struct CapOverflow : Error {
    using Error::Error;
};

// A constructed decomposition violates (H1), (H2) or tree axioms.
struct ValidationError : Error {
    std::string axiom;
    std::string witness;
    ValidationError(const std::string& ax, const std::string& wit)
        : Error("validation failed: " + ax + " (witness " + wit + ")"), axiom(ax), witness(wit) {}
};

}  // namespace locsep

#endif
