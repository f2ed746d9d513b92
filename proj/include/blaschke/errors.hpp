#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

/// Evaluation hit (or came numerically too close to) a pole 1/conj(a_i).
struct PoleHit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A claimed fixed-point root failed its residual check.
struct RootSolveFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed-point counts match none of the classification cases.
struct Degenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument tracking could not produce a lift with the expected winding.
struct WindingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Branch inversion produced fewer verified preimages than the degree.
struct BranchMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arc image did not reach full measure within the iteration cap.
struct NotCovered : std::runtime_error {
    explicit NotCovered(int max_n)
        : std::runtime_error("arc image did not reach full measure within " +
                             std::to_string(max_n) + " steps"),
          max_n(max_n) {}
    int max_n;
};

/// Inputs violate the stated preconditions of a construction.
struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Backward iteration did not converge where a converged fibre is required.
struct FixedPointNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace blaschke
