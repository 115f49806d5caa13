#pragma once

#include <stdexcept>

namespace curldg {

// Invalid run configuration (bad parameters, penalty below the stability
// threshold detected by the SPD probe, inconsistent study setup).
struct ConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iteration failed to reach its tolerance within the allowed budget.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A factorization hit a non-positive pivot: the matrix is not SPD.
struct NotSpdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mesh connectivity violates the two-elements-per-edge manifold property.
struct TopologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace curldg
