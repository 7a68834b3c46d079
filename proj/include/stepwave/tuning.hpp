#pragma once

// Desk-scale knobs that the physics does not fix. Kept together so the
// decisions they encode are visible in one place.

namespace stepwave::tuning {

/// psi_decomposed is flagged valid only for q0 x at or above this.
inline constexpr double decomposition_min_opacity = 3.0;

/// Numeric t_m is searched in [pulse_window_lo, pulse_window_hi] * tau.
inline constexpr double pulse_window_lo = 0.2;
inline constexpr double pulse_window_hi = 5.0;

/// Log-spaced prescan density ahead of golden-section refinement.
inline constexpr int prescan_points_per_decade = 21;

/// Relative tolerance of golden-section argmax refinement.
inline constexpr double argmax_rel_tol = 1e-6;

/// Relative tolerance of R = 1 root bracketing.
inline constexpr double root_rel_tol = 1e-10;

/// Scaling-check support starts where the pulse density first reaches this
/// fraction of its peak (or at X0, whichever is further out).
inline constexpr double scaling_support_fraction = 0.1;

/// Scaling-check support ends at this multiple of v t0.
inline constexpr double scaling_support_hi = 4.0;

/// Samples used across the scaling-check support.
inline constexpr int scaling_samples = 801;

/// Crank-Nicolson accuracy heuristic: dt * hbar / (m dx^2) <= this.
inline constexpr double cn_dt_over_dx2_limit = 1000.0;

/// Hard-wall preflight: the domain must exceed this multiple of v T.
inline constexpr double cn_front_speed_factor = 3.0;

/// Node count of the Talbot contour.
inline constexpr int talbot_nodes = 64;

}  // namespace stepwave::tuning
