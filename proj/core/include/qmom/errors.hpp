#pragma once

#include <stdexcept>
#include <string>

namespace qmom {

/// Bad user input: out-of-range parameters, malformed config, unknown keys.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ensemble has no active interaction channel (mu2 = 0), so q and the
/// reduced moments are undefined.
struct DegenerateEnsembleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quadrature non-convergence, eigensolver failure rate above budget, etc.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested many-body space exceeds the configured dimension cap.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qmom
