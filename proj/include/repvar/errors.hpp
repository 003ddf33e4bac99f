#ifndef REPVAR_ERRORS_HPP
#define REPVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace repvar {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial/scalar text; carries the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

class RingMismatchError : public Error {
public:
    using Error::Error;
};

class UnknownVariableError : public Error {
public:
    using Error::Error;
};

class MissingAssignmentError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class ArityMismatchError : public Error {
public:
    using Error::Error;
};

class UnknownSurfaceError : public Error {
public:
    using Error::Error;
};

class OrderNotEliminatingError : public Error {
public:
    using Error::Error;
};

class SingularFiberError : public Error {
public:
    using Error::Error;
};

class NonPrincipalIdealError : public Error {
public:
    using Error::Error;
};

class ResonanceError : public Error {
public:
    using Error::Error;
};

class UnexpectedSpectrumError : public Error {
public:
    using Error::Error;
};

class HigherOrderPoleError : public Error {
public:
    using Error::Error;
};

class UnsplitDenominatorError : public Error {
public:
    using Error::Error;
};

class PoleProximityError : public Error {
public:
    using Error::Error;
};

class NonConvergenceError : public Error {
public:
    using Error::Error;
};

// A failed internal consistency check (a broken invariant, not a user error).
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

// Snapshot of a long-running Groebner computation, carried by BudgetExceededError
// and fed to progress callbacks.
struct ComputationStats {
    double elapsed_seconds = 0.0;
    std::size_t pairs_processed = 0;
    std::size_t pairs_remaining = 0;
    std::size_t basis_size = 0;
    long max_degree_seen = 0;
};

class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& msg, ComputationStats s)
        : Error(msg), stats(s) {}
    ComputationStats stats;
};

} // namespace repvar

#endif
