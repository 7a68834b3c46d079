#include <cmath>
#include <numbers>
#include <string>

#include "stepwave/error.hpp"
#include "stepwave/oracle.hpp"

namespace stepwave {

namespace {

using std::numbers::pi;

// Weideman's optimized fixed Talbot contour
//   s(theta) = (N/t) (sigma + mu theta cot(alpha theta) + i nu theta).
constexpr double kSigma = -0.6122;
constexpr double kMu = 0.5017;
constexpr double kNu = 0.2645;
constexpr double kAlpha = 0.6407;

double contour_re(double theta) {
  return kSigma + kMu * theta / std::tan(kAlpha * theta);
}

// Imaginary extent (in units of N/t) where the contour crosses Re s = 0.
double imaginary_axis_crossing() {
  double lo = 1e-6, hi = pi;  // contour_re(lo) > 0 > contour_re(hi)
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (contour_re(mid) > 0.0 ? lo : hi) = mid;
  }
  return kNu * 0.5 * (lo + hi);
}

}  // namespace

Complex talbot_invert(double x, double t, const SourceScenario& s, const TalbotOptions& opt) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("talbot_invert needs t > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("talbot_invert needs x >= 0");
  if (opt.nodes < 4) throw DomainError("talbot_invert needs at least 4 nodes");

  // Work in s' = s + iV, where p = e^{i pi/4} sqrt(beta s') and the
  // stationary pole sits at s' = i a.
  const double V = s.barrier_frequency();
  const double w0 = s.omega0();
  const double a = V - w0;
  const double beta = 2.0 * s.mass() / s.hbar();
  const double N = opt.nodes;

  static const double crossing = imaginary_axis_crossing();
  if (!opt.subtract_pole && std::abs(a) * t >= N * crossing)
    throw ContourError("Talbot contour does not enclose the pole at s = -i w0 (|V - w0| t = " +
                       std::to_string(std::abs(a) * t) + ")");

  // e^{i p* x} at the pole: decaying below the step, outgoing above it.
  const double k = derive_wavenumber(s);
  const Complex pole_wave = s.regime() == Regime::below ? Complex(std::exp(-k * x), 0.0)
                                                        : std::polar(1.0, k * x);
  const Complex rot = std::polar(1.0, pi / 4.0);
  const Complex ia(0.0, a);

  Complex sum = 0.0;
  for (int j = 0; j < opt.nodes; ++j) {
    const double th = -pi + (j + 0.5) * 2.0 * pi / N;
    const double cot = 1.0 / std::tan(kAlpha * th);
    const double sn = std::sin(kAlpha * th);
    const Complex sp = (N / t) * Complex(kSigma + kMu * th * cot, kNu * th);
    const Complex dsp = (N / t) * Complex(kMu * cot - kMu * kAlpha * th / (sn * sn), kNu);
    const Complex p = rot * std::sqrt(beta * sp);
    Complex num = std::exp(Complex(0.0, 1.0) * p * x);
    if (opt.subtract_pole) num -= pole_wave;
    sum += num / (sp - ia) * std::exp(sp * t) * dsp;
  }
  Complex psi = sum / (Complex(0.0, 1.0) * N) * std::polar(1.0, -V * t);
  if (opt.subtract_pole) psi += pole_wave * std::polar(1.0, -w0 * t);
  return psi;
}

}  // namespace stepwave
