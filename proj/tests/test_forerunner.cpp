#include <cmath>
#include <numbers>

#include "doctest.h"
#include "stepwave/error.hpp"
#include "stepwave/forerunner.hpp"
#include "stepwave/search.hpp"
#include "stepwave/wavefield.hpp"

using namespace stepwave;

namespace {
const SourceScenario below(UnitSystem::natural(), 1.0, 0.5);
const SourceScenario below_ev(UnitSystem::ev_nm_fs(), 1.0, 0.5);
const SourceScenario above(UnitSystem::natural(), 1.0, 2.0);
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

TEST_CASE("search helpers") {
  const auto parabola = [](double x) { return -(x - 2.0) * (x - 2.0); };
  CHECK(refine_max(parabola, 0.0, 5.0, 1e-8).x == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(find_root([](double x) { return x * x - 2.0; }, 0.0, 3.0, 1e-12) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, 0.0, 3.0, 1e-12), NumericalError);
  CHECK_THROWS_AS(log_prescan_max([](double x) { return x; }, 1.0, 10.0, 21, 1e-6), NumericalError);
  // interior local max wins even when an end is higher
  const auto bump = [](double x) { return std::exp(-x) + 0.2 * std::exp(-(x - 5) * (x - 5)); };
  CHECK(log_prescan_max(bump, 0.01, 50.0, 21, 1e-8).x == doctest::Approx(5.0).epsilon(1e-2));
}

TEST_CASE("onset bound") {
  CHECK(onset_bound(below) == 2.0);
  CHECK(onset_bound(below_ev) == doctest::Approx(0.552).epsilon(1e-3));
  CHECK(onset_bound(below_ev) * derive_wavenumber(below_ev) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(onset_bound(above), RegimeError);
}

TEST_CASE("crossover position") {
  const double v = group_velocity(below), X0 = onset_bound(below);
  CHECK_THROWS_AS(crossover_position(0.9 * X0 / v, below), DomainError);
  double prev = 0.0;
  for (double t : {2.5 * X0 / v, 8.0, 16.0, 32.0, 64.0}) {
    const double xr = crossover_position(t, below);
    CHECK(interplay_ratio(xr, t, below) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(xr > X0);
    CHECK(xr < v * t);
    CHECK(xr > prev);
    prev = xr;
  }
  for (double t : {3.0, 6.0, 12.0}) CHECK(crossover_position(2 * t, below) > crossover_position(t, below));
}

TEST_CASE("crossover lies left of X0 just after the validity threshold") {
  const double v = group_velocity(below), X0 = onset_bound(below);
  CHECK(crossover_position(1.1 * X0 / v, below) < X0);
}

TEST_CASE("analytic extremal time and position") {
  const double v = group_velocity(below);
  CHECK(time_of_density_max(kSqrt3 * v, below, PulseMethod::closed_form) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(position_of_density_max(30.0, below, PulseMethod::closed_form) == doctest::Approx(30.0).epsilon(1e-15));
  for (double eta : {2.0, 3.333, 10.0}) {
    CHECK(time_of_density_max(eta * 4.0, below_ev, PulseMethod::closed_form) ==
          doctest::Approx(eta * time_of_density_max(4.0, below_ev, PulseMethod::closed_form)).epsilon(1e-14));
    CHECK(position_of_density_max(eta * 4.0, below_ev, PulseMethod::closed_form) ==
          doctest::Approx(eta * position_of_density_max(4.0, below_ev, PulseMethod::closed_form)).epsilon(1e-14));
  }
  // x_m(t_m) = x_f / sqrt(3) < x_f
  const double x_f = 13.0;
  const double tm = time_of_density_max(x_f, below, PulseMethod::closed_form);
  CHECK(position_of_density_max(tm, below, PulseMethod::closed_form) == doctest::Approx(x_f / kSqrt3).epsilon(1e-14));
}

TEST_CASE("peak-speed dichotomy") {
  const double v = group_velocity(below_ev);
  const double x1 = position_of_density_max(10.0, below_ev, PulseMethod::closed_form);
  const double x2 = position_of_density_max(20.0, below_ev, PulseMethod::closed_form);
  CHECK((x2 - x1) / 10.0 == doctest::Approx(v).epsilon(1e-14));
  const double t1 = time_of_density_max(5.0, below_ev, PulseMethod::closed_form);
  const double t2 = time_of_density_max(9.0, below_ev, PulseMethod::closed_form);
  CHECK(4.0 / (t2 - t1) == doctest::Approx(kSqrt3 * v).epsilon(1e-13));
}

TEST_CASE("numeric extrema of the exact field") {
  const double x_f = 15.0;
  const double an = time_of_density_max(x_f, below, PulseMethod::closed_form);
  CHECK(time_of_density_max(x_f, below, PulseMethod::full_field) == doctest::Approx(an).epsilon(0.03));
  const double t_f = 15.0;
  CHECK(position_of_density_max(t_f, below, PulseMethod::full_field) == doctest::Approx(t_f).epsilon(0.05));
}

TEST_CASE("no interior space maximum at t_f = 1.5 X0 / v") {
  const double t_f = 1.5 * onset_bound(below) / group_velocity(below);
  CHECK_THROWS_AS(position_of_density_max(t_f, below, PulseMethod::full_field), NumericalError);
}

TEST_CASE("analytic heights") {
  for (const SourceScenario* s : {&below, &below_ev}) {
    const double x_f = 12.0 / derive_wavenumber(*s);
    const PulseHeights h = pulse_heights(x_f, *s);
    CHECK(h.h_fd == doctest::Approx(1.0 / (2 * std::numbers::pi * derive_wavenumber(*s) * h.x_m)).epsilon(1e-12));
    CHECK(h.h_hc / h.h_fd == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(h.ratio == doctest::Approx(3 * kSqrt3 / 4).epsilon(1e-12));
    CHECK(h.ratio == doctest::Approx(1.299038).epsilon(1e-6));
    CHECK(x_f / h.x_m == doctest::Approx(kSqrt3).epsilon(1e-12));
  }
}

TEST_CASE("numeric heights at q0 x_f = 15") {
  const PulseHeights h = pulse_heights(15.0, below, PulseMethod::full_field);
  CHECK(h.ratio > 1.0);
  CHECK(h.ratio == doctest::Approx(3 * kSqrt3 / 4).epsilon(0.1));
}

TEST_CASE("scaling check") {
  const double t0 = 30.0;  // fs
  CHECK(scaling_check(below_ev, 1.0, t0, ScalingField::pulse_only).max_residual == 0.0);
  CHECK(scaling_check(below_ev, 1.0, t0, ScalingField::full_field).max_residual == 0.0);
  for (double eta : {3.333, 5.0, 10.0}) {
    CHECK(scaling_check(below_ev, eta, t0, ScalingField::pulse_only).max_residual <= 1e-13);
    const ScalingCheck c = scaling_check(below_ev, eta, t0, ScalingField::full_field);
    CHECK(c.max_residual <= 0.02);
    CHECK(c.support.first >= onset_bound(below_ev));
    CHECK(c.support.second == doctest::Approx(4.0 * group_velocity(below_ev) * t0));
  }
  CHECK_THROWS_AS(scaling_check(below, 0.0, 10.0, ScalingField::pulse_only), DomainError);
  CHECK_THROWS_AS(scaling_check(below, 2.0, 1.0, ScalingField::full_field), DomainError);
}

TEST_CASE("report assembly") {
  const ForerunnerReport r = make_report(below, 20.0, 20.0, {5.0, 10.0}, PulseMethod::closed_form);
  CHECK(r.X0 == 2.0);
  CHECK(r.XR_at.size() == 2);
  CHECK(r.heights.ratio == doctest::Approx(3 * kSqrt3 / 4).epsilon(1e-12));
  CHECK(r.t_m == doctest::Approx(20.0 / kSqrt3).epsilon(1e-14));
  CHECK(r.x_m == doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("pulse birth sits near 3.47 x_p, outside [1.5, 3] x_p") {
  const PulseBirth b = pulse_birth(below, 8.0, 10.0, 2001);
  CHECK(b.t == doctest::Approx(5.04).epsilon(0.01));
  CHECK(b.x == doctest::Approx(3.47).epsilon(0.02));
}
