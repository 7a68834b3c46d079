#pragma once

#include <vector>

#include "stepwave/faddeeva.hpp"
#include "stepwave/units.hpp"

namespace stepwave {

struct FieldSample {
  double x = 0.0;
  double t = 0.0;
  Complex psi;
  double density = 0.0;  // |psi|^2
};

enum class CutAxis { space_cut_at_fixed_t, time_cut_at_fixed_x };

/// Which amplitude a cut samples.
enum class FieldModel {
  exact,       // psi_above / psi_below
  decomposed,  // stationary + transient pulse (below regime)
  pulse,       // transient pulse alone (below regime)
};

struct FieldGrid {
  SourceScenario scenario;
  CutAxis axis;
  double fixed_value;
  std::vector<FieldSample> samples;
};

FieldSample sample_point(double x, double t, const SourceScenario& s,
                         FieldModel model = FieldModel::exact);

/// |psi(x, t)|^2 along x at fixed t. `xs` must be strictly increasing and
/// non-negative; t > 0. The OpenMP version writes each sample into its own
/// slot, so both versions return bit-identical grids.
FieldGrid sample_space_cut(const SourceScenario& s, double t, const std::vector<double>& xs,
                           FieldModel model = FieldModel::exact);
FieldGrid sample_space_cut_serial(const SourceScenario& s, double t,
                                  const std::vector<double>& xs,
                                  FieldModel model = FieldModel::exact);

/// |psi(x, t)|^2 along t at fixed x. `ts` strictly increasing and positive.
FieldGrid sample_time_cut(const SourceScenario& s, double x, const std::vector<double>& ts,
                          FieldModel model = FieldModel::exact);
FieldGrid sample_time_cut_serial(const SourceScenario& s, double x,
                                 const std::vector<double>& ts,
                                 FieldModel model = FieldModel::exact);

std::vector<double> linspace(double lo, double hi, int n);
std::vector<double> logspace(double lo, double hi, int n);

}  // namespace stepwave
