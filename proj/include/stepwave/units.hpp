#pragma once

#include <string>
#include <string_view>

namespace stepwave {

/// Physical constants of a unit system. Every derived quantity in the
/// library is expressed in whatever system the scenario carries.
struct UnitSystem {
  double hbar = 1.0;  // energy * time
  double mass = 1.0;  // energy * time^2 / length^2
  std::string label = "natural";

  /// hbar = m = 1.
  static UnitSystem natural();

  /// eV, nm, fs with the free-electron mass:
  /// hbar = 0.6582119569 eV fs, m = 510998.95 eV / (299.792458 nm/fs)^2.
  static UnitSystem ev_nm_fs();

  /// "natural" or "ev-nm-fs"; throws DomainError otherwise.
  static UnitSystem from_label(std::string_view label);

  /// Same system with a user-supplied particle mass.
  UnitSystem with_mass(double m) const;

  double hbar_over_mass() const { return hbar / mass; }
};

enum class Regime { above, below };

std::string_view to_string(Regime r);

/// Monochromatic point source of energy E0 at the edge of a step of height V0.
class SourceScenario {
 public:
  /// Throws DomainError for V0 < 0, E0 <= 0 or an invalid unit system, and
  /// DegenerateScenarioError when E0 == V0 to within rounding.
  SourceScenario(UnitSystem units, double V0, double E0);

  const UnitSystem& units() const { return units_; }
  double V0() const { return V0_; }
  double E0() const { return E0_; }
  Regime regime() const { return regime_; }

  /// Source angular frequency E0 / hbar.
  double omega0() const { return E0_ / units_.hbar; }
  /// Step height as a frequency, V0 / hbar.
  double barrier_frequency() const { return V0_ / units_.hbar; }

  double hbar() const { return units_.hbar; }
  double mass() const { return units_.mass; }

 private:
  UnitSystem units_;
  double V0_;
  double E0_;
  Regime regime_;
};

/// k0 = sqrt(2m(E0 - V0))/hbar above the step, q0 = sqrt(2m(V0 - E0))/hbar
/// below it. Always positive.
double derive_wavenumber(const SourceScenario& s);

/// hbar * wavenumber / m.
double group_velocity(const SourceScenario& s);

/// x_p = 1/q0; below regime only.
double penetration_length(const SourceScenario& s);

/// tau = x_f / v_q0; below regime only, x_f > 0.
double traversal_time(const SourceScenario& s, double x_f);

/// Scales that map a unit system onto hbar = m = 1 for a chosen length unit.
struct NaturalScales {
  double length;
  double time;    // m L^2 / hbar
  double energy;  // hbar^2 / (m L^2)
};

NaturalScales natural_scales(const UnitSystem& units, double length_unit);

/// Re-expresses a scenario in natural units, measuring length in multiples of
/// `length_unit` (given in the scenario's own length unit).
SourceScenario to_natural(const SourceScenario& s, double length_unit);

/// Inverse of to_natural: `s` must be in natural units.
SourceScenario from_natural(const SourceScenario& s, const UnitSystem& target,
                            double length_unit);

}  // namespace stepwave
