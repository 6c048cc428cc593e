#pragma once

#include <stdexcept>
#include <string>

namespace kohnert {

/// Malformed user input: negative parts, bad coordinates, unparsable text.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation contradicts a proven property of the objects
/// (a second valid labeling, an unlabelable closure diagram, a stuck unlock
/// step, ...).  These are never expected and must not be swallowed.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An unlock operator tried to push a box into an occupied cell with no
/// string left to swap with.
class UnlockStuck : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

} // namespace kohnert
