#pragma once

#include <complex>

namespace stepwave {

using Complex = std::complex<double>;

/// Region boundaries of the w(z) evaluator. Every switch between algorithms
/// lives here so the continuity tests can straddle them.
namespace faddeeva_regions {
/// |z| below this: Maclaurin series.
inline constexpr double taylor_radius = 0.5;
/// |z| at or above this (upper half-plane): asymptotic series.
inline constexpr double asymptotic_radius = 40.0;
/// Node spacing of the trapezoid sum used in between.
inline constexpr double trapezoid_step = 0.5;
/// Im z at or above which the trapezoid pole correction is dropped (pi / h).
inline constexpr double pole_correction_cutoff = 6.283185307179586;
}  // namespace faddeeva_regions

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Relative error is about 1e-15 in the closed upper half-plane. The lower
/// half-plane uses w(z) = 2 exp(-z^2) - w(-z), so values there overflow once
/// Im(z)^2 - Re(z)^2 exceeds ~709. Throws DomainError for non-finite z.
Complex faddeeva_w(Complex z);

/// High-precision reference for w(z), |z| <= 20, 1 <= digits <= 30: Taylor
/// series of erf in MPFR arithmetic with enough guard bits to absorb the
/// cancellation, times an exactly evaluated exp(-z^2). Slow; meant for tests.
/// Lives in the stepwave_reference library.
Complex faddeeva_w_reference(Complex z, int digits);

}  // namespace stepwave
