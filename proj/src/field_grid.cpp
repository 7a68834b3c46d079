#include "stepwave/field_grid.hpp"

#include <cmath>

#include "stepwave/error.hpp"
#include "stepwave/wavefield.hpp"

namespace stepwave {

namespace {

void check_axis(const std::vector<double>& v, bool strictly_positive) {
  if (v.empty()) throw DomainError("field cut needs at least one sample");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) throw DomainError("field cut coordinate is not finite");
    if (strictly_positive ? !(v[i] > 0.0) : !(v[i] >= 0.0))
      throw DomainError("field cut coordinate out of range");
    if (i > 0 && !(v[i] > v[i - 1]))
      throw DomainError("field cut coordinates must be strictly increasing");
  }
}

// Everything that could throw inside a sample is checked up front, so the
// parallel loops never unwind through an OpenMP region.
void check_model(const SourceScenario& s, FieldModel model, double min_x) {
  if (model == FieldModel::exact) return;
  if (s.regime() != Regime::below)
    throw RegimeError("decomposed and pulse fields exist only below the step");
  if (!(min_x > 0.0)) throw DomainError("decomposed and pulse fields need x > 0");
}

FieldGrid make_grid(const SourceScenario& s, CutAxis axis, double fixed, std::size_t n) {
  return FieldGrid{s, axis, fixed, std::vector<FieldSample>(n)};
}

}  // namespace

FieldSample sample_point(double x, double t, const SourceScenario& s, FieldModel model) {
  FieldSample out{x, t, {}, 0.0};
  switch (model) {
    case FieldModel::exact:
      out.psi = psi_exact(x, t, s);
      out.density = std::norm(out.psi);
      break;
    case FieldModel::decomposed:
      out.psi = psi_decomposed(x, t, s).sum;
      out.density = std::norm(out.psi);
      break;
    case FieldModel::pulse: {
      const PulseSample p = pulse_sample(x, t, s);
      out.psi = p.psi;
      out.density = p.density;
      break;
    }
  }
  return out;
}

FieldGrid sample_space_cut_serial(const SourceScenario& s, double t,
                                  const std::vector<double>& xs, FieldModel model) {
  check_axis(xs, false);
  if (!(t > 0.0)) throw DomainError("space cut needs t > 0");
  check_model(s, model, xs.front());
  FieldGrid g = make_grid(s, CutAxis::space_cut_at_fixed_t, t, xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) g.samples[i] = sample_point(xs[i], t, s, model);
  return g;
}

FieldGrid sample_space_cut(const SourceScenario& s, double t, const std::vector<double>& xs,
                           FieldModel model) {
  check_axis(xs, false);
  if (!(t > 0.0)) throw DomainError("space cut needs t > 0");
  check_model(s, model, xs.front());
  FieldGrid g = make_grid(s, CutAxis::space_cut_at_fixed_t, t, xs.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) g.samples[i] = sample_point(xs[i], t, s, model);
  return g;
}

FieldGrid sample_time_cut_serial(const SourceScenario& s, double x,
                                 const std::vector<double>& ts, FieldModel model) {
  check_axis(ts, true);
  if (!(x >= 0.0)) throw DomainError("time cut needs x >= 0");
  check_model(s, model, x);
  FieldGrid g = make_grid(s, CutAxis::time_cut_at_fixed_x, x, ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) g.samples[i] = sample_point(x, ts[i], s, model);
  return g;
}

FieldGrid sample_time_cut(const SourceScenario& s, double x, const std::vector<double>& ts,
                          FieldModel model) {
  check_axis(ts, true);
  if (!(x >= 0.0)) throw DomainError("time cut needs x >= 0");
  check_model(s, model, x);
  FieldGrid g = make_grid(s, CutAxis::time_cut_at_fixed_x, x, ts.size());
  const long n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) g.samples[i] = sample_point(x, ts[i], s, model);
  return g;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw DomainError("linspace needs n >= 2");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v[n - 1] = hi;
  return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (n < 2) throw DomainError("logspace needs n >= 2");
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("logspace needs 0 < lo < hi");
  std::vector<double> v(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) v[i] = std::exp(a + (b - a) * i / (n - 1));
  v[0] = lo;
  v[n - 1] = hi;
  return v;
}

}  // namespace stepwave
