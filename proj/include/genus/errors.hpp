#pragma once

#include <stdexcept>
#include <string>

namespace genus {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// combine() was called with no terms.
struct EmptyTermList : Error {
    EmptyTermList() : Error("combine: empty term list") {}
};

// A rational-weighted combination left a non-integer entry.
struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& msg) : Error(msg) {}
};

// A closed-form evaluation did not reduce to an integer (implementation bug).
struct NonIntegerEntry : Error {
    explicit NonIntegerEntry(const std::string& msg) : Error(msg) {}
};

// A window/mode operation received a term whose sequence is not unimodal.
struct NonUnimodalTerm : Error {
    explicit NonUnimodalTerm(const std::string& msg) : Error(msg) {}
};

// Requested evaluation method does not exist for this family.
struct MethodUnavailable : Error {
    explicit MethodUnavailable(const std::string& msg) : Error(msg) {}
};

// Two supposedly-equal evaluation routes disagreed (must never fire).
struct CrossCheckMismatch : Error {
    explicit CrossCheckMismatch(const std::string& msg) : Error(msg) {}
};

// Parameter outside the defined range of an operation.
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

// Exhaustive enumeration would exceed the configured budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Face tracing produced an inconsistent Euler characteristic (internal bug).
struct NonIntegerGenus : Error {
    explicit NonIntegerGenus(const std::string& msg) : Error(msg) {}
};

// Distribution surgery would drive an entry negative.
struct InvalidAdjustment : Error {
    explicit InvalidAdjustment(const std::string& msg) : Error(msg) {}
};

// Malformed input file (partial polynomials, edge lists).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Multigraph failed a structural requirement (disconnected, bad vertex id).
struct InvalidGraph : Error {
    explicit InvalidGraph(const std::string& msg) : Error(msg) {}
};

}  // namespace genus
