#pragma once

#include <vector>

#include "stepwave/faddeeva.hpp"
#include "stepwave/units.hpp"

namespace stepwave {

/// Uniform grid on [0, L] with nx nodes and n_steps steps of dt.
struct GridSpec {
  double length = 0.0;
  int nx = 0;
  double dt = 0.0;
  int n_steps = 0;

  double dx() const { return length / (nx - 1); }
  double final_time() const { return dt * n_steps; }
};

enum class FarBoundary {
  /// Discrete transparent condition: exact for the semi-discrete CN scheme on
  /// the half-line, so the domain only has to hold the region of interest.
  transparent,
  /// psi = 0 at x = L; needs the front to stay well inside the domain.
  hard_wall,
};

struct CnOptions {
  FarBoundary boundary = FarBoundary::transparent;
  /// Source is amplitude * e^{-i w0 t}.
  double source_amplitude = 1.0;
  /// Boundary value drops to 0 for t > source_off_time (< 0: never).
  double source_off_time = -1.0;
  /// Leading CN steps replaced by two implicit-Euler half-steps each, which
  /// damps the grid-scale ringing of the sharp onset. 0 gives plain CN with
  /// the boundary value taken at step midpoints.
  int startup_steps = 2;
  /// Record every k-th step (0: final state only).
  int snapshot_stride = 0;
};

struct CNState {
  double t = 0.0;
  /// Values on all nx nodes. With the transparent boundary the last node
  /// holds the ghost value implied by the boundary kernel.
  std::vector<Complex> psi;
};

/// Validates the grid: nx >= 64, dt > 0, n_steps >= 1, the accuracy heuristic
/// dt hbar / (m dx^2) <= tuning::cn_dt_over_dx2_limit and, for the hard wall,
/// L > tuning::cn_front_speed_factor * v * T. Throws PreflightError.
void preflight(const SourceScenario& s, const GridSpec& g, const CnOptions& opt = {});

/// Crank-Nicolson integration of i hbar psi_t = -hbar^2/2m psi_xx + V0 psi on
/// x > 0 with psi(0, t) = e^{-i w0 t}, psi(x, 0) = 0. Returns snapshots in
/// time order; the last one is at g.final_time().
std::vector<CNState> cn_evolve(const SourceScenario& s, const GridSpec& g,
                               const CnOptions& opt = {});

/// Coefficients kappa_0..kappa_{n-1} of the transparent boundary kernel
/// (ghost^n = sum_m kappa_m psi_J^{n-m}) for frequency offset V, coupling
/// c = hbar / (2 m dx^2) and step dt.
std::vector<Complex> transparent_kernel(double V, double c, double dt, int n);

/// Relative L2 distance of `psi` to the analytic field at time t on the
/// nodes with x <= fraction * L.
double cn_relative_l2_error(const SourceScenario& s, const GridSpec& g, const CNState& state,
                            double fraction = 0.5);

struct TalbotOptions {
  int nodes = 64;
  /// Subtract the stationary pole analytically; without it, the pole must lie
  /// inside the contour or ContourError is thrown.
  bool subtract_pole = true;
};

/// Numerical Bromwich inversion of the Laplace-domain solution
///   psi(x; s) = e^{ipx} / (s + i w0),  p = sqrt(beta (i s - V)), Im p >= 0,
/// on a Talbot contour scaled by 1/t.
Complex talbot_invert(double x, double t, const SourceScenario& s, const TalbotOptions& opt = {});

}  // namespace stepwave
