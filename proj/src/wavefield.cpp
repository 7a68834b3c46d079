#include "stepwave/wavefield.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stepwave/error.hpp"
#include "stepwave/moshinsky.hpp"
#include "stepwave/tuning.hpp"

namespace stepwave {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077;

void require_below(const SourceScenario& s, const char* what) {
  if (s.regime() != Regime::below)
    throw RegimeError(std::string(what) + " is defined only below the step");
}

void check_xt(double x, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("field needs t > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("field needs x >= 0");
}

Complex source_phase(double t, const SourceScenario& s) {
  return std::polar(1.0, -s.omega0() * t);
}

Complex psi_pair(double x, double t, const SourceScenario& s, WaveMode a, WaveMode b) {
  check_xt(x, t);
  if (x == 0.0) return source_phase(t, s);
  return std::polar(1.0, -s.barrier_frequency() * t) * (m_direct(x, a, t, s) + m_direct(x, b, t, s));
}

}  // namespace

Complex psi_above(double x, double t, const SourceScenario& s) {
  if (s.regime() != Regime::above)
    throw RegimeError("psi_above needs a scenario above the step");
  return psi_pair(x, t, s, WaveMode::plus_k0, WaveMode::minus_k0);
}

Complex psi_below(double x, double t, const SourceScenario& s) {
  require_below(s, "psi_below");
  return psi_pair(x, t, s, WaveMode::plus_iq0, WaveMode::minus_iq0);
}

Complex psi_exact(double x, double t, const SourceScenario& s) {
  return s.regime() == Regime::above ? psi_above(x, t, s) : psi_below(x, t, s);
}

Complex psi_stationary(double x, const SourceScenario& s) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("stationary wave needs x >= 0");
  const double k = derive_wavenumber(s);
  if (s.regime() == Regime::below) return {std::exp(-k * x), 0.0};
  return std::polar(1.0, k * x);
}

PulseSample pulse_sample(double x, double t, const SourceScenario& s) {
  require_below(s, "transient pulse");
  check_xt(x, t);
  if (x == 0.0) throw DomainError("transient pulse amplitude needs x > 0");
  const Complex yp = argument_y(x, WaveMode::plus_iq0, t, s).y;
  const Complex ym = argument_y(x, WaveMode::minus_iq0, t, s).y;
  PulseSample out;
  out.density = pulse_density(x, t, s);
  out.near_pole = std::abs(yp) <= 1e-8 || std::abs(ym) <= 1e-8;
  if (out.near_pole) {
    out.psi = std::sqrt(out.density);
    return out;
  }
  const double phase = x * x / (2.0 * s.units().hbar_over_mass() * t) - s.barrier_frequency() * t;
  out.psi = 0.5 * kInvSqrtPi * std::polar(1.0, phase) * (1.0 / yp + 1.0 / ym);
  return out;
}

Complex psi_transient_pulse(double x, double t, const SourceScenario& s) {
  return pulse_sample(x, t, s).psi;
}

double pulse_density(double x, double t, const SourceScenario& s) {
  require_below(s, "pulse density");
  check_xt(x, t);
  const double hm = s.units().hbar_over_mass();
  const double front = hm * derive_wavenumber(s) * t;
  const double d = x * x + front * front;
  return (2.0 / std::numbers::pi) * (hm * x * x * t) / (d * d);
}

Decomposition psi_decomposed(double x, double t, const SourceScenario& s) {
  require_below(s, "decomposition");
  check_xt(x, t);
  if (x == 0.0) throw DomainError("decomposition needs x > 0");
  const double q0 = derive_wavenumber(s);
  Decomposition d;
  d.stationary = source_phase(t, s) * std::exp(-q0 * x);
  d.pulse = psi_transient_pulse(x, t, s);
  d.sum = d.stationary + d.pulse;
  const double onset_time = (2.0 / q0) / group_velocity(s);
  d.valid = t > onset_time && q0 * x >= tuning::decomposition_min_opacity;
  return d;
}

double interplay_ratio(double x, double t, const SourceScenario& s) {
  require_below(s, "interplay ratio");
  check_xt(x, t);
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  const double q0 = derive_wavenumber(s);
  // Ratio of exp(-2 q0 x) to the closed-form pulse density, kept in log form so
  // it stays finite far out where both factors underflow.
  const double hm = s.units().hbar_over_mass();
  const double front = hm * q0 * t;
  const double d = x * x + front * front;
  const double log_pulse = std::log(2.0 / std::numbers::pi) + std::log(hm * t) + 2.0 * std::log(x) - 2.0 * std::log(d);
  return std::exp(-2.0 * q0 * x - log_pulse);
}

}  // namespace stepwave
