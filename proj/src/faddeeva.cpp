#include "stepwave/faddeeva.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "stepwave/error.hpp"

namespace stepwave {

namespace {

using std::numbers::pi;
namespace region = faddeeva_regions;

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077;

// Maclaurin coefficients 1/Gamma(n/2 + 1) of w(z) = sum (iz)^n / Gamma(n/2 + 1).
constexpr int kTaylorTerms = 40;

std::array<double, kTaylorTerms> make_taylor_coefficients() {
  std::array<double, kTaylorTerms> c{};
  c[0] = 1.0;
  c[1] = 2.0 * kInvSqrtPi;
  for (int n = 2; n < kTaylorTerms; ++n) c[n] = c[n - 2] / (0.5 * n);
  return c;
}

Complex w_taylor(Complex z) {
  static const std::array<double, kTaylorTerms> c = make_taylor_coefficients();
  const Complex iz(-z.imag(), z.real());
  Complex acc = c[kTaylorTerms - 1];
  for (int n = kTaylorTerms - 2; n >= 0; --n) acc = acc * iz + c[n];
  return acc;
}

// i/(sqrt(pi) z) * sum_k (2k-1)!! / (2 z^2)^k, truncated where the terms are
// far below rounding for |z| >= asymptotic_radius.
Complex w_asymptotic(Complex z) {
  constexpr int kTerms = 12;
  const Complex u = 1.0 / (2.0 * z * z);
  Complex acc = 1.0;
  for (int k = kTerms; k >= 1; --k) acc = 1.0 + acc * u * double(2 * k - 1);
  return Complex(0.0, kInvSqrtPi) * acc / z;
}

// Gaussian weights exp(-t^2) on the integer grid t = n h and on the
// half-shifted grid t = (n + 1/2) h, |t| <= 7.
constexpr int kHalfNodes = 14;

struct TrapezoidNodes {
  std::array<double, 2 * kHalfNodes + 1> t{};
  std::array<double, 2 * kHalfNodes + 1> weight{};
  int count = 0;
};

TrapezoidNodes make_nodes(double offset) {
  TrapezoidNodes nodes;
  const double h = region::trapezoid_step;
  for (int n = -kHalfNodes; n <= kHalfNodes; ++n) {
    const double t = (n + offset) * h;
    if (std::abs(t) > kHalfNodes * h) continue;
    nodes.t[nodes.count] = t;
    nodes.weight[nodes.count] = std::exp(-t * t);
    ++nodes.count;
  }
  return nodes;
}

// Trapezoid rule for w(z) = (i/pi) int exp(-t^2)/(z - t) dt with the residue
// correction of the pole at t = z. The grid is picked so that Re z sits at
// least h/4 away from every node, which keeps both the sum and the
// correction's denominator well conditioned down to the real axis.
Complex w_trapezoid(Complex z) {
  static const TrapezoidNodes integer_grid = make_nodes(0.0);
  static const TrapezoidNodes shifted_grid = make_nodes(0.5);

  const double h = region::trapezoid_step;
  const double x = z.real();
  const double y = z.imag();
  const double f = x / h;
  const bool shifted = std::abs(f - std::round(f)) < 0.25;
  const TrapezoidNodes& nodes = shifted ? shifted_grid : integer_grid;

  Complex sum = 0.0;
  for (int k = 0; k < nodes.count; ++k) sum += nodes.weight[k] / (z - nodes.t[k]);
  Complex w = Complex(0.0, h / pi) * sum;

  if (y < region::pole_correction_cutoff) {
    // exp(-z^2) * E with E = exp(2 pi i z / h), combined before exponentiation.
    const Complex two_pi_i_z_over_h = Complex(-2.0 * pi * y / h, 2.0 * pi * x / h);
    const Complex minus_z2((y - x) * (y + x), -2.0 * x * y);
    const Complex e = std::exp(two_pi_i_z_over_h);
    const Complex g = 2.0 * std::exp(minus_z2 + two_pi_i_z_over_h);
    w += shifted ? g / (1.0 + e) : -g / (1.0 - e);
  }
  return w;
}

Complex w_upper(Complex z) {
  const double r = std::abs(z);
  if (r < region::taylor_radius) return w_taylor(z);
  if (r >= region::asymptotic_radius) return w_asymptotic(z);
  return w_trapezoid(z);
}

}  // namespace

Complex faddeeva_w(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("faddeeva_w: non-finite argument");
  if (z.imag() >= 0.0) return w_upper(z);
  const double x = z.real();
  const double y = z.imag();
  const Complex minus_z2((y - x) * (y + x), -2.0 * x * y);
  return 2.0 * std::exp(minus_z2) - w_upper(-z);
}

}  // namespace stepwave
