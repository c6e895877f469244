#pragma once

#include <stdexcept>
#include <string>

namespace mrbla {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data is structurally broken: bad shapes, bad syntax, unknown fields.
struct MalformedInputError : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// The requested quotient is not well defined: the coboundary square does not
/// vanish under the selected phi variant on the given instance.
struct IllDefinedComplexError : Error {
    using Error::Error;
};

} // namespace mrbla
