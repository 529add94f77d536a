#pragma once

#include <stdexcept>

namespace sfcl {

/// Invalid model input. The message names the offending key, state or
/// transition so callers can surface it directly.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The chain has no path to absorption (or a vanishing total failure rate),
/// so the expected time to failure is not a finite number.
class InfiniteMttfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sfcl
