#pragma once

#include "run_config.hpp"

namespace qmom::cli {

/// Exit codes: 0 success, 2 validation error, 3 numerical/degenerate error,
/// 4 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitResourceCap = 4;

int cmd_moments(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_qnormal_table(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_compare(const RunConfig& config);

/// Dispatches on config.mode and maps thrown errors to exit codes.
int run(const RunConfig& config);

} // namespace qmom::cli
