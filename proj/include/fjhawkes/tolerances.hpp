#pragma once

// Numeric thresholds shared across the library. Every comparison against a
// magic constant goes through this table so the contracts stay in one place.

namespace fjhawkes::tol {

// dense kernels
inline constexpr double pivot_rel = 1e-14;        // singular pivot cutoff, relative to max initial |entry|
inline constexpr double ill_conditioned = 1e12;   // invert() sets a warning flag above this
inline constexpr double zero_row = 1e-14;         // row_normalize rejects row sums at or below this
inline constexpr double row_stochastic = 1e-12;   // acceptable deviation of a row sum from 1
inline constexpr int eig_sweeps_per_n = 30;       // QR sweep budget is this times the matrix order

// simulation
inline constexpr int max_steps_default = 5000;
inline constexpr double conv_tol_default = 1e-10;
inline constexpr double div_threshold_default = 1e9;

// equilibrium
inline constexpr double equilibrium_residual = 1e-9;   // residual bound for the valid flag
inline constexpr double equilibrium_cond = 1e10;       // condition bound for the valid flag
inline constexpr double degenerate_denominator = 1e-12;

// stability
inline constexpr double uniform_reactivity = 1e-12;    // max spread of diag(B) still treated as uniform
inline constexpr double excluded_point = 1e-8;         // guard band around the pole of the reduced determinant
inline constexpr double critical_band = 1e-6;          // |rho - 1| below this is flagged critical
inline constexpr double boundary_rho = 1e-6;           // bisection stops when |rho - 1| drops below this
inline constexpr int boundary_grid = 21;               // coarse scan points used to bracket a crossing
inline constexpr int boundary_max_iter = 80;

}  // namespace fjhawkes::tol
