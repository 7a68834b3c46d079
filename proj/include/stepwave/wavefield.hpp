#pragma once

#include "stepwave/faddeeva.hpp"
#include "stepwave/units.hpp"

namespace stepwave {

/// psi_> = e^{-iVt} [M(x, k0, t) + M(x, -k0, t)]; above regime, x >= 0, t > 0.
Complex psi_above(double x, double t, const SourceScenario& s);

/// psi_< = e^{-iVt} [M(x, iq0, t) + M(x, -iq0, t)]; below regime, x >= 0, t > 0.
Complex psi_below(double x, double t, const SourceScenario& s);

/// psi_above or psi_below by regime.
Complex psi_exact(double x, double t, const SourceScenario& s);

/// Spatial part of the long-time solution: e^{-q0 x} below the step, e^{+i k0 x}
/// above it. Multiply by e^{-i w0 t} for the full stationary wave.
Complex psi_stationary(double x, const SourceScenario& s);

struct PulseSample {
  Complex psi;
  double density = 0.0;  // closed form, always finite
  /// One of y_{+-iq0} is within 1e-8 of zero; psi's phase is unreliable.
  bool near_pole = false;
};

/// Transient pulse amplitude
///   psi_tp = 1/(2 sqrt(pi)) e^{i(m x^2/2 hbar t - V t)} [1/y_{iq0} + 1/y_{-iq0}].
/// Below regime, x > 0, t > 0.
PulseSample pulse_sample(double x, double t, const SourceScenario& s);

Complex psi_transient_pulse(double x, double t, const SourceScenario& s);

/// |psi_tp|^2 = (2/pi) (hbar x^2 t / m) / [x^2 + (hbar q0 t / m)^2]^2.
double pulse_density(double x, double t, const SourceScenario& s);

struct Decomposition {
  Complex stationary;  // e^{-i w0 t} e^{-q0 x}
  Complex pulse;       // psi_tp
  Complex sum;
  /// t > X0 / v and q0 x >= tuning::decomposition_min_opacity.
  bool valid = false;
};

Decomposition psi_decomposed(double x, double t, const SourceScenario& s);

/// R = e^{-2 q0 x} / |psi_tp|^2; +inf at x = 0.
double interplay_ratio(double x, double t, const SourceScenario& s);

}  // namespace stepwave
