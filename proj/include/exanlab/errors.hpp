#pragma once

#include <stdexcept>
#include <string>

namespace exanlab {

/// Malformed input: unparsable scalars, schema violations, mismatched fields
/// or dimensions. Maps to CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A request outside an operation's mathematical domain (division by zero,
/// a commutative-only operation on a non-commutative algebra, a non-central
/// element passed to the center action).
struct MathDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension guard tripped (cochain space too large). Maps to CLI exit code 3.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A postcondition the library guarantees failed to verify. Reaching this is
/// a bug in the library, never a property of valid user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace exanlab
