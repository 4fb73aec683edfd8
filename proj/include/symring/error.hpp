#pragma once

#include <stdexcept>
#include <string>

namespace symring {

/// Library-wide error type. Thrown on contract violations (degree
/// mismatches, malformed input files, guard refusals).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Refusal to enumerate a symmetric group above the degree guard.
/// Callers may retry with an explicit higher guard.
struct GuardError : Error {
    using Error::Error;
};

}  // namespace symring
