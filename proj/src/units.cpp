#include "stepwave/units.hpp"

#include <cmath>
#include <limits>

#include "stepwave/error.hpp"

namespace stepwave {

namespace {

constexpr double kHbarEvFs = 0.6582119569;
constexpr double kElectronRestEnergyEv = 510998.95;
constexpr double kLightSpeedNmPerFs = 299.792458;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

UnitSystem UnitSystem::natural() { return {1.0, 1.0, "natural"}; }

UnitSystem UnitSystem::ev_nm_fs() {
  return {kHbarEvFs,
          kElectronRestEnergyEv / (kLightSpeedNmPerFs * kLightSpeedNmPerFs),
          "ev-nm-fs"};
}

UnitSystem UnitSystem::from_label(std::string_view label) {
  if (label == "natural") return natural();
  if (label == "ev-nm-fs") return ev_nm_fs();
  throw DomainError("unknown unit system '" + std::string(label) +
                    "' (expected natural or ev-nm-fs)");
}

UnitSystem UnitSystem::with_mass(double m) const {
  if (!positive_finite(m)) throw DomainError("mass must be positive");
  UnitSystem u = *this;
  u.mass = m;
  return u;
}

std::string_view to_string(Regime r) {
  return r == Regime::above ? "above" : "below";
}

SourceScenario::SourceScenario(UnitSystem units, double V0, double E0)
    : units_(std::move(units)), V0_(V0), E0_(E0), regime_(Regime::above) {
  if (!positive_finite(units_.hbar) || !positive_finite(units_.mass))
    throw DomainError("unit system needs hbar > 0 and mass > 0");
  if (!std::isfinite(V0_) || V0_ < 0.0)
    throw DomainError("step height V0 must be >= 0");
  if (!positive_finite(E0_)) throw DomainError("source energy E0 must be > 0");
  const double scale = std::max(std::abs(E0_), std::abs(V0_));
  if (std::abs(E0_ - V0_) <= 4.0 * std::numeric_limits<double>::epsilon() * scale)
    throw DegenerateScenarioError("E0 == V0: source energy sits exactly at the step height");
  regime_ = E0_ > V0_ ? Regime::above : Regime::below;
}

double derive_wavenumber(const SourceScenario& s) {
  return std::sqrt(2.0 * s.mass() * std::abs(s.E0() - s.V0())) / s.hbar();
}

double group_velocity(const SourceScenario& s) {
  return s.units().hbar_over_mass() * derive_wavenumber(s);
}

double penetration_length(const SourceScenario& s) {
  if (s.regime() != Regime::below)
    throw RegimeError("penetration length is defined only below the step");
  return 1.0 / derive_wavenumber(s);
}

double traversal_time(const SourceScenario& s, double x_f) {
  if (s.regime() != Regime::below)
    throw RegimeError("traversal time is defined only below the step");
  if (!positive_finite(x_f)) throw DomainError("traversal time needs x_f > 0");
  return x_f / group_velocity(s);
}

NaturalScales natural_scales(const UnitSystem& units, double length_unit) {
  if (!positive_finite(length_unit)) throw DomainError("length unit must be positive");
  const double time = units.mass * length_unit * length_unit / units.hbar;
  return {length_unit, time, units.hbar / time};
}

SourceScenario to_natural(const SourceScenario& s, double length_unit) {
  const NaturalScales sc = natural_scales(s.units(), length_unit);
  return SourceScenario(UnitSystem::natural(), s.V0() / sc.energy, s.E0() / sc.energy);
}

SourceScenario from_natural(const SourceScenario& s, const UnitSystem& target,
                            double length_unit) {
  if (s.hbar() != 1.0 || s.mass() != 1.0)
    throw DomainError("from_natural expects a scenario in natural units");
  const NaturalScales sc = natural_scales(target, length_unit);
  return SourceScenario(target, s.V0() * sc.energy, s.E0() * sc.energy);
}

}  // namespace stepwave
