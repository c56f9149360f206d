#ifndef FANFREE_ERRORS_HPP
#define FANFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanfree {

// Invalid parameters for a named constructor or operation.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Input exceeds a configured size cap (vertex capacity, canonicalization cap).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input. byte_offset points at the offending byte.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}

    // For rethrowing with extra context when the message already names the byte.
    struct Preformatted {};
    FormatError(Preformatted, const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what), byte_offset(byte_offset) {}

    std::size_t byte_offset;
};

// Structural precondition violated (disconnected input, trivial component).
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric argument outside the mathematical domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Iteration budget exhausted; carries the best enclosure reached so far.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, double lambda_lo, double lambda_hi)
        : std::runtime_error(what), lambda_lo(lambda_lo), lambda_hi(lambda_hi) {}
    double lambda_lo;
    double lambda_hi;
};

// Illegal edge-rotation move.
class MoveError : public std::runtime_error {
public:
    explicit MoveError(const std::string& what) : std::runtime_error(what) {}
};

// No feasible starting point for a search.
class FeasibilityError : public std::runtime_error {
public:
    explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fanfree

#endif
