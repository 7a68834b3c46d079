#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>

#include "stepwave/error.hpp"
#include "stepwave/faddeeva.hpp"

namespace stepwave {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::mpfr_float;

struct MpComplex {
  Real re;
  Real im;
};

MpComplex mul(const MpComplex& a, const MpComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

Complex faddeeva_w_reference(Complex z, int digits) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("faddeeva_w_reference: non-finite argument");
  if (std::abs(z) > 20.0) throw DomainError("faddeeva_w_reference: needs |z| <= 20");
  if (digits < 1 || digits > 30)
    throw DomainError("faddeeva_w_reference: digits must be in [1, 30]");

  // erf(iz) terms grow to ~exp(|z|^2) before cancelling down to O(1).
  const double r2 = std::norm(z);
  const unsigned bits =
      static_cast<unsigned>(digits * 3.33 + 2.0 * r2 * 1.4426950408889634 + 64.0);
  const unsigned saved = Real::default_precision();
  Real::default_precision(static_cast<unsigned>(bits / 3.32 + 10));

  // u = iz; erf(u) = 2/sqrt(pi) sum_n (-1)^n u^(2n+1) / (n! (2n+1)).
  const MpComplex u{Real(-z.imag()), Real(z.real())};
  const MpComplex u2 = mul(u, u);
  MpComplex power = u;  // (-1)^n u^(2n+1) / n!
  MpComplex sum = u;
  const Real eps = mp::pow(Real(2), -static_cast<int>(bits));
  for (int n = 1; n < 100000; ++n) {
    power = mul(power, u2);
    power.re = -power.re / n;
    power.im = -power.im / n;
    const Real denom = 2 * n + 1;
    const MpComplex term{power.re / denom, power.im / denom};
    sum.re += term.re;
    sum.im += term.im;
    if (mp::abs(term.re) + mp::abs(term.im) < eps * (1 + mp::abs(sum.re) + mp::abs(sum.im)) &&
        n > r2)
      break;
  }
  const Real two_over_sqrt_pi = 2 / mp::sqrt(boost::math::constants::pi<Real>());
  const MpComplex one_plus_erf{1 + two_over_sqrt_pi * sum.re, two_over_sqrt_pi * sum.im};

  // exp(-z^2) with z^2 = (x^2 - y^2) + 2ixy.
  const Real x(z.real()), y(z.imag());
  const Real mag = mp::exp((y - x) * (y + x));
  const Real ang = -2 * x * y;
  const MpComplex e{mag * mp::cos(ang), mag * mp::sin(ang)};
  const MpComplex w = mul(e, one_plus_erf);

  const Complex out(static_cast<double>(w.re), static_cast<double>(w.im));
  Real::default_precision(saved);
  return out;
}

}  // namespace stepwave
