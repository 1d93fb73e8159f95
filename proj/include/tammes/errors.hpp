#pragma once

#include <stdexcept>
#include <string>

namespace tammes {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vector or scalar argument violates an operation's precondition.
struct InvalidInputError : Error {
    using Error::Error;
};

// The two circle centers are parallel or antipodal; the intersection axis
// is undefined.
struct DegenerateAxisError : Error {
    using Error::Error;
};

// Requested cap radius lies outside the window on which the construction
// is defined.
struct InvalidRadiusError : Error {
    using Error::Error;
};

// A placement step has no real intersection point.
struct InfeasibleError : Error {
    using Error::Error;
};

// Both intersection branches score equally; the selection rule cannot
// decide.
struct AmbiguousBranchError : Error {
    using Error::Error;
};

// The root finder found no sign change inside the given bracket.
struct BracketError : Error {
    using Error::Error;
};

// A configuration document is structurally or semantically malformed.
struct DocumentError : Error {
    using Error::Error;
};

}  // namespace tammes
