#include "stepwave/moshinsky.hpp"

#include <cmath>
#include <numbers>

#include "stepwave/error.hpp"

namespace stepwave {

namespace {

using std::numbers::pi;

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077;
constexpr double kBoundaryPhaseTol = 1e-12;

void check_xt(double x, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("M-function needs t > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("M-function needs x >= 0");
}

Complex prefactor(double x, double t, const SourceScenario& s) {
  const double phase = x * x / (2.0 * s.units().hbar_over_mass() * t);
  return 0.5 * std::polar(1.0, phase);
}

}  // namespace

Complex wave_number(WaveMode mode, const SourceScenario& s) {
  const double k = derive_wavenumber(s);
  const bool real_mode = mode == WaveMode::plus_k0 || mode == WaveMode::minus_k0;
  if (real_mode != (s.regime() == Regime::above))
    throw RegimeError(real_mode ? "+-k0 modes need an above-step scenario"
                                : "+-i q0 modes need a below-step scenario");
  switch (mode) {
    case WaveMode::plus_k0: return {k, 0.0};
    case WaveMode::minus_k0: return {-k, 0.0};
    case WaveMode::plus_iq0: return {0.0, k};
    case WaveMode::minus_iq0: return {0.0, -k};
  }
  return {};
}

MArgument classify(Complex y) {
  MArgument a;
  a.y = y;
  a.magnitude = std::abs(y);
  a.phase = std::arg(y);
  if (a.phase == -pi) a.phase = pi;
  const double d = std::abs(std::abs(a.phase) - pi / 2.0);
  if (d <= kBoundaryPhaseTol) {
    a.on_boundary = true;
    a.branch = Branch::principal;
  } else {
    a.branch = std::abs(a.phase) < pi / 2.0 ? Branch::principal : Branch::exponential;
  }
  return a;
}

MArgument argument_y(double x, WaveMode q, double t, const SourceScenario& s) {
  check_xt(x, t);
  const double hm = s.units().hbar_over_mass();
  const Complex bracket = x - hm * wave_number(q, s) * t;
  const Complex rot = std::polar(std::sqrt(1.0 / (2.0 * hm * t)), -pi / 4.0);
  return classify(rot * bracket);
}

Complex m_direct(double x, WaveMode q, double t, const SourceScenario& s) {
  const MArgument a = argument_y(x, q, t, s);
  return prefactor(x, t, s) * faddeeva_w(Complex(-a.y.imag(), a.y.real()));
}

Complex m_series(const MArgument& y, int n_terms, double x, double t,
                 const SourceScenario& s) {
  check_xt(x, t);
  if (n_terms != 1 && n_terms != 2) throw DomainError("m_series: n_terms must be 1 or 2");
  if (!(y.magnitude >= 1.0)) throw DomainError("m_series: needs |y| >= 1");
  Complex bracket = kInvSqrtPi / y.y;
  if (n_terms == 2) bracket -= 0.5 * kInvSqrtPi / (y.y * y.y * y.y);
  if (y.branch == Branch::exponential) bracket += 2.0 * std::exp(y.y * y.y);
  return prefactor(x, t, s) * bracket;
}

std::pair<Complex, Complex> m_one_term_pulse_pieces(double x, double t,
                                                    const SourceScenario& s) {
  if (s.regime() != Regime::below)
    throw RegimeError("pulse pieces are defined only below the step");
  if (!(x > 0.0)) throw DomainError("pulse pieces need x > 0");
  const Complex y_minus = argument_y(x, WaveMode::minus_iq0, t, s).y;
  const Complex y_plus = argument_y(x, WaveMode::plus_iq0, t, s).y;
  const Complex pre = prefactor(x, t, s);
  const Complex minus_piece = pre * (kInvSqrtPi / y_minus);
  const Complex plus_piece = pre * (2.0 * std::exp(y_plus * y_plus) + kInvSqrtPi / y_plus);
  return {minus_piece, plus_piece};
}

}  // namespace stepwave
