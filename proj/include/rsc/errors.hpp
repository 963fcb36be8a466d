#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user input (bad facet line, duplicate vertex in a tuple, ...).
struct MalformedInputError : Error {
    using Error::Error;
};

/// Argument outside the operation's domain (W not a vertex subset, empty
/// complex where a nonempty one is required, unknown preset name, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Complex does not fit the ambient context (vertex outside {1..n} or
/// dimension above r).
struct ContextError : Error {
    using Error::Error;
};

/// A stated precondition fails; the message names a witness.
struct PreconditionError : Error {
    using Error::Error;
};

/// A configured brute-force cap was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

} // namespace rsc
