#pragma once

#include <stdexcept>

namespace qsim {

// A value broke an invariant the library itself is supposed to maintain
// (e.g. a state vector lost normalization mid-run). Distinct from input
// validation failures so callers can map it to a different exit status.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A requested object would exceed the configured qubit ceiling.
struct instance_too_large : std::length_error {
    using std::length_error::length_error;
};

} // namespace qsim
