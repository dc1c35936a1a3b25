#pragma once

#include <stdexcept>
#include <string>

namespace torus {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input: bad multiplication tables,
// non-normal inertia, parse failures, dimension mismatches.
struct ValidationError : Error {
    using Error::Error;
};

// Two lattices that were expected to share a group do not.
struct GroupMismatch : ValidationError {
    using ValidationError::ValidationError;
};

// A designated generator does not generate the group.
struct NotCyclic : ValidationError {
    using ValidationError::ValidationError;
};

// point_count_good_reduction called on ramified data.
struct NotGoodReduction : ValidationError {
    using ValidationError::ValidationError;
};

// An endomorphism does not descend to the requested quotient.  Unreachable
// for data that passed validation; signals corrupted input.
struct NotWellDefined : Error {
    using Error::Error;
};

// det(1 - h(F)/q^s) vanished.  Unreachable for valid action data.
struct SingularMatrix : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagree.
struct CrossCheckFailure : Error {
    using Error::Error;
};

// A structural invariant of the library itself failed.
struct InternalError : Error {
    using Error::Error;
};

} // namespace torus
