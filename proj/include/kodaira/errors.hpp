#pragma once

#include <stdexcept>

namespace kodaira {

// Error taxonomy shared by all modules; the CLI maps these to exit codes
// (schema -> 2, precondition -> 3, invariant -> 4).

// Malformed or ill-typed input (bad JSON shape, unknown fields, wrong arity).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is well-formed but violates a mathematical precondition
// (negative discriminant where forbidden, semi-definite Gram matrix, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state the library itself must never produce; reaching one is a bug
// in the caller or in the library.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace kodaira
