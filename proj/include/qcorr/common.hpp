// Shared tolerances and error types for the quantum-correlations toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Two tolerance tiers: exact quantum-generated tables are held to kExactTol,
// anything mediated by an LP or a numerical optimizer to kSolverTol.
inline constexpr double kExactTol = 1e-9;
inline constexpr double kSolverTol = 1e-7;

// Validation tolerance for Hermiticity / positivity, scaled by dimension.
inline constexpr double kStateTol = 1e-9;

// Eigenvalues in [-kEigenvalueFloor, 0] are numerical noise and clamp to 0;
// anything more negative is an invalid state.
inline constexpr double kEigenvalueFloor = 1e-12;

// Probabilities below this are treated as impossible outcomes: conditioning
// on them is undefined and callers must skip the branch.
inline constexpr double kProbFloor = 1e-12;

// A minimised discord at or below this counts as zero.
inline constexpr double kDiscordZeroTol = 1e-5;

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace qcorr
