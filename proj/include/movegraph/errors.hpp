#pragma once

#include <stdexcept>
#include <string>

namespace movegraph {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input lies outside the mathematical domain of an operation
/// (non-prime where a prime is required, gcd condition violated, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Caller broke an API contract: mismatched dimensions or moduli.
class contract_error : public error {
public:
    using error::error;
};

/// A stated precondition about the mathematical object does not hold.
class precondition_error : public error {
public:
    using error::error;
};

/// The requested graph would exceed the configured vertex budget.
class capacity_error : public error {
public:
    using error::error;
};

/// An internal consistency check failed. Never expected to fire.
class invariant_error : public error {
public:
    using error::error;
};

}  // namespace movegraph
