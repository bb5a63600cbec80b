#pragma once

#include <stdexcept>
#include <string>

namespace pbf {

/// Malformed or inconsistent user input (bad files, invalid path lists,
/// cyclic graphs handed to an acyclic-only operation).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check inside the pipeline failed. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pbf
