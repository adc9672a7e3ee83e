#pragma once

#include <stdexcept>
#include <string>

namespace deltabias {

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGrid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientDecay : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPoint : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidSmoothing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MisalignedDelta : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyBiasRegion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientLadder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
    int iterations;
    double best_residual;
    NoConvergence(int it, double res)
        : std::runtime_error("eigensolver did not converge after " + std::to_string(it) +
                             " restarts (best residual " + std::to_string(res) + ")"),
          iterations(it), best_residual(res) {}
};

} // namespace deltabias
