#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "stepwave/units.hpp"

namespace stepwave {

enum class PulseMethod { closed_form, full_field };
enum class ScalingField { pulse_only, full_field };

std::string_view to_string(PulseMethod m);

/// X0 = 2 x_p = 2 / q0.
double onset_bound(const SourceScenario& s);

/// Position where the stationary and pulse densities are equal at time t
/// (t > X0 / v). R(x) decreases monotonically in x, so the root is bracketed
/// starting from the pulse peak x = v t and moving toward the source.
double crossover_position(double t, const SourceScenario& s);

/// Time at which |psi|^2 peaks at fixed x_f. Analytic: tau / sqrt(3). Numeric:
/// argmax of the exact density over t in the pulse window.
double time_of_density_max(double x_f, const SourceScenario& s, PulseMethod method);

/// Position at which |psi|^2 peaks at fixed t_f. Analytic: v t_f. Numeric:
/// argmax of the exact density over x > X0.
double position_of_density_max(double t_f, const SourceScenario& s, PulseMethod method);

struct PulseHeights {
  double t_m;              // time of the density maximum at x_f
  double x_m;              // position of the space-cut maximum at t_m
  double h_hc;             // density at (x_f, t_m)
  double h_fd;             // space-cut peak height at t_m
  double h_fd_at_t_prime;  // space-cut peak height at t' = sqrt(3) t_m
  double ratio;            // h_hc / h_fd_at_t_prime
};

PulseHeights pulse_heights(double x_f, const SourceScenario& s,
                           PulseMethod method = PulseMethod::closed_form);

struct ScalingCheck {
  double eta;
  double max_residual;  // normalized by the pulse peak at t0
  std::pair<double, double> support;
};

/// Compares eta * rho(eta x, eta t0) with rho(x, t0) over the pulse support.
ScalingCheck scaling_check(const SourceScenario& s, double eta, double t0, ScalingField field);

struct PulseBirth {
  double t;  // first time a space cut has an interior maximum
  double x;  // where that maximum appears
};

/// Scans space cuts of the exact density forward in time and returns the
/// first interior maximum. Times and lengths in the scan are in units of
/// m / (hbar q0^2) and x_p. Throws NumericalError if none appears by t_hi.
PulseBirth pulse_birth(const SourceScenario& s, double t_hi_scaled = 20.0,
                       double x_hi_scaled = 20.0, int nx = 4001);

struct ForerunnerReport {
  SourceScenario scenario;
  PulseMethod method;
  double X0;
  std::vector<std::pair<double, double>> XR_at;
  double x_f;
  double t_f;
  double t_m;
  double x_m;
  PulseHeights heights;
};

/// t_m is evaluated at x_f, x_m at t_f, X_R at each of `xr_times`.
ForerunnerReport make_report(const SourceScenario& s, double x_f, double t_f,
                             const std::vector<double>& xr_times, PulseMethod method);

}  // namespace stepwave
