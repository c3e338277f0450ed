// SPDX-License-Identifier: Apache-2.0
#pragma once

// Central numeric-constants record. Tests include this header so that
// production code and assertions always agree on tolerances.

namespace swapnet::tol {

// State validation (max-norm residuals).
inline constexpr double hermiticity = 1e-9;
inline constexpr double trace_unit = 1e-9;

// Eigenvalues in [psd_eigen_floor, 0) are clamped to 0; anything below
// is a genuine PSD violation.
inline constexpr double psd_eigen_floor = -1e-10;

// Cyclic Jacobi eigensolver.
inline constexpr double jacobi_offdiag = 1e-12;
inline constexpr int jacobi_max_sweeps = 100;

// Residual bounds promised by the kernel.
inline constexpr double eigen_reconstruct = 1e-9;
inline constexpr double sqrt_residual = 1e-8;

// Haar sampler.
inline constexpr double unitarity = 1e-12;
inline constexpr double qr_pivot_min = 1e-12;

// Swap engine.
inline constexpr double branch_prune = 1e-12;
inline constexpr int max_path_length = 8;

// Ensemble generation.
inline constexpr double full_rank_min_eigen = 1e-8;
inline constexpr double purity_gap_min = 1e-4;
inline constexpr double bisection_target = 1e-9;
inline constexpr int generation_attempts = 100;
inline constexpr double orbit_concurrence_match = 1e-8;

// Experiments.
inline constexpr double winner_dead_band = 1e-12;
inline constexpr double ratio_mean_floor = 1e-6;
inline constexpr double fit_grid_step = 0.005;
inline constexpr double fit_refine_step = 1e-4;

}  // namespace swapnet::tol
