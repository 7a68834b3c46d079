#include "stepwave/forerunner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stepwave/error.hpp"
#include "stepwave/field_grid.hpp"
#include "stepwave/search.hpp"
#include "stepwave/tuning.hpp"
#include "stepwave/wavefield.hpp"

namespace stepwave {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_below(const SourceScenario& s, const char* what) {
  if (s.regime() != Regime::below)
    throw RegimeError(std::string(what) + " is defined only below the step");
}

double exact_density(double x, double t, const SourceScenario& s) {
  return std::norm(psi_below(x, t, s));
}

// Index of the first strict interior local maximum of d, or -1.
long first_interior_max(const std::vector<double>& d) {
  for (std::size_t i = 1; i + 1 < d.size(); ++i)
    if (d[i] > d[i - 1] && d[i] > d[i + 1]) return static_cast<long>(i);
  return -1;
}

}  // namespace

std::string_view to_string(PulseMethod m) {
  return m == PulseMethod::closed_form ? "closed_form" : "full_field";
}

double onset_bound(const SourceScenario& s) {
  require_below(s, "onset bound");
  return 2.0 * penetration_length(s);
}

double crossover_position(double t, const SourceScenario& s) {
  require_below(s, "crossover position");
  const double v = group_velocity(s);
  const double X0 = onset_bound(s);
  if (!(t > X0 / v)) throw DomainError("crossover position needs t > X0 / v");
  const auto f = [&](double x) { return std::log(interplay_ratio(x, t, s)); };

  const double peak = v * t;
  double lo = peak, hi = peak;
  if (f(peak) < 0.0) {
    for (int i = 0; i < 200 && f(lo) < 0.0; ++i) lo *= 0.5;
  } else {
    for (int i = 0; i < 200 && f(hi) >= 0.0; ++i) hi *= 2.0;
  }
  if (f(lo) < 0.0 || f(hi) >= 0.0)
    throw NumericalError("stationary and pulse densities never cross");
  return find_root(f, lo, hi, tuning::root_rel_tol);
}

double time_of_density_max(double x_f, const SourceScenario& s, PulseMethod method) {
  require_below(s, "time of density maximum");
  const double tau = traversal_time(s, x_f);
  if (method == PulseMethod::closed_form) return tau / kSqrt3;
  const auto f = [&](double t) { return exact_density(x_f, t, s); };
  return log_prescan_max(f, tuning::pulse_window_lo * tau, tuning::pulse_window_hi * tau,
                         tuning::prescan_points_per_decade, tuning::argmax_rel_tol)
      .x;
}

double position_of_density_max(double t_f, const SourceScenario& s, PulseMethod method) {
  require_below(s, "position of density maximum");
  if (!(t_f > 0.0) || !std::isfinite(t_f)) throw DomainError("position of maximum needs t_f > 0");
  const double v = group_velocity(s);
  if (method == PulseMethod::closed_form) return v * t_f;
  const double X0 = onset_bound(s);
  const double hi = std::max(tuning::pulse_window_hi * v * t_f, 10.0 * X0);
  const auto f = [&](double x) { return exact_density(x, t_f, s); };
  return log_prescan_max(f, X0, hi, tuning::prescan_points_per_decade, tuning::argmax_rel_tol).x;
}

PulseHeights pulse_heights(double x_f, const SourceScenario& s, PulseMethod method) {
  require_below(s, "pulse heights");
  PulseHeights h{};
  h.t_m = time_of_density_max(x_f, s, method);
  const double t_prime = kSqrt3 * h.t_m;
  if (method == PulseMethod::closed_form) {
    h.x_m = position_of_density_max(h.t_m, s, method);
    h.h_hc = pulse_density(x_f, h.t_m, s);
    h.h_fd = pulse_density(h.x_m, h.t_m, s);
    h.h_fd_at_t_prime = pulse_density(position_of_density_max(t_prime, s, method), t_prime, s);
  } else {
    h.x_m = position_of_density_max(h.t_m, s, method);
    h.h_hc = exact_density(x_f, h.t_m, s);
    h.h_fd = exact_density(h.x_m, h.t_m, s);
    const double x_prime = position_of_density_max(t_prime, s, method);
    h.h_fd_at_t_prime = exact_density(x_prime, t_prime, s);
  }
  h.ratio = h.h_hc / h.h_fd_at_t_prime;
  return h;
}

ScalingCheck scaling_check(const SourceScenario& s, double eta, double t0, ScalingField field) {
  require_below(s, "scaling check");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("scaling check needs eta > 0");
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw DomainError("scaling check needs t0 > 0");
  const double v = group_velocity(s);
  const double X0 = onset_bound(s);
  if (field == ScalingField::full_field && !(t0 > X0 / v))
    throw DomainError("scaling check of the exact field needs t0 > X0 / v");

  // Lower edge where x^2/(x^2+a^2)^2 falls to `fraction` of its peak 1/(4a^2),
  // a = v t0: u/(1+u^2) = sqrt(fraction)/2 with u = x/a.
  const double c = 0.5 * std::sqrt(tuning::scaling_support_fraction);
  const double u_lo = (1.0 - std::sqrt(1.0 - 4.0 * c * c)) / (2.0 * c);
  const double lo = std::max(X0, u_lo * v * t0);
  const double hi = tuning::scaling_support_hi * v * t0;
  ScalingCheck out{eta, 0.0, {lo, hi}};
  if (!(hi > lo)) throw DomainError("scaling check support is empty at this t0");

  const auto rho = [&](double x, double t) {
    return field == ScalingField::pulse_only ? pulse_density(x, t, s) : exact_density(x, t, s);
  };
  const std::vector<double> xs = linspace(lo, hi, tuning::scaling_samples);
  std::vector<double> base(xs.size()), scaled(xs.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    base[i] = rho(xs[i], t0);
    scaled[i] = eta * rho(eta * xs[i], eta * t0);
  }
  const double peak = field == ScalingField::pulse_only ? pulse_density(v * t0, t0, s)
                                                  : *std::max_element(base.begin(), base.end());
  for (long i = 0; i < n; ++i)
    out.max_residual = std::max(out.max_residual, std::abs(scaled[i] - base[i]) / peak);
  return out;
}

PulseBirth pulse_birth(const SourceScenario& s, double t_hi_scaled, double x_hi_scaled, int nx) {
  require_below(s, "pulse birth");
  if (nx < 16) throw DomainError("pulse birth scan needs nx >= 16");
  const double xp = penetration_length(s);
  const double T = xp / group_velocity(s);  // m / (hbar q0^2)
  const std::vector<double> xs = linspace(1e-4 * xp, x_hi_scaled * xp, nx);

  const auto first_max = [&](double t) {
    const FieldGrid g = sample_space_cut(s, t, xs);
    std::vector<double> d(g.samples.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = g.samples[i].density;
    return first_interior_max(d);
  };

  const double dt = 0.05 * T;
  double t_without = 0.0, t_with = -1.0;
  for (double t = dt; t <= t_hi_scaled * T; t += dt) {
    if (first_max(t) >= 0) {
      t_with = t;
      break;
    }
    t_without = t;
  }
  if (t_with < 0.0) throw NumericalError("no interior space-cut maximum in the scanned times");
  while (t_with - t_without > 1e-4 * T && t_without > 0.0) {
    const double mid = 0.5 * (t_with + t_without);
    (first_max(mid) >= 0 ? t_with : t_without) = mid;
  }
  const long i = first_max(t_with);
  return {t_with, xs[static_cast<std::size_t>(i)]};
}

ForerunnerReport make_report(const SourceScenario& s, double x_f, double t_f,
                             const std::vector<double>& xr_times, PulseMethod method) {
  require_below(s, "forerunner report");
  ForerunnerReport r{s, method, onset_bound(s), {}, x_f, t_f, 0.0, 0.0, {}};
  for (double t : xr_times) r.XR_at.emplace_back(t, crossover_position(t, s));
  r.t_m = time_of_density_max(x_f, s, method);
  r.x_m = position_of_density_max(t_f, s, method);
  r.heights = pulse_heights(x_f, s, method);
  return r;
}

}  // namespace stepwave
