#pragma once

#include <utility>

#include "stepwave/faddeeva.hpp"
#include "stepwave/units.hpp"

namespace stepwave {

/// The four wave numbers q that enter the exact solutions: +-k0 above the
/// step, +-i q0 below it.
enum class WaveMode { plus_k0, minus_k0, plus_iq0, minus_iq0 };

/// Complex q for `mode`; throws RegimeError if the mode does not belong to
/// the scenario's regime.
Complex wave_number(WaveMode mode, const SourceScenario& s);

enum class Branch { principal, exponential };

struct MArgument {
  Complex y;
  double magnitude = 0.0;
  double phase = 0.0;  // arg(y) in (-pi, pi]
  Branch branch = Branch::principal;
  /// Phase lies within 1e-12 of +-pi/2; classified principal.
  bool on_boundary = false;
};

/// Classifies an arbitrary y.
MArgument classify(Complex y);

/// y_q = e^{-i pi/4} sqrt(m / 2 hbar t) (x - hbar q t / m).
/// Throws DomainError for t <= 0 or x < 0.
MArgument argument_y(double x, WaveMode q, double t, const SourceScenario& s);

/// M(x, q, t) = 1/2 exp(i m x^2 / 2 hbar t) w(i y_q).
Complex m_direct(double x, WaveMode q, double t, const SourceScenario& s);

/// Large-|y| series for M with one or two inverse-power terms:
///   principal:   1/2 e^{i m x^2/2 hbar t} [1/(sqrt(pi) y) - 1/(2 sqrt(pi) y^3)]
///   exponential: the same plus 2 e^{y^2} inside the bracket.
/// Throws DomainError for |y| < 1 or n_terms outside {1, 2}.
Complex m_series(const MArgument& y, int n_terms, double x, double t,
                 const SourceScenario& s);

/// One-term approximants of M(y_{-iq0}) and M(y_{iq0}) (the latter with its
/// exponential term). Below regime, x > 0, t > 0.
std::pair<Complex, Complex> m_one_term_pulse_pieces(double x, double t,
                                                    const SourceScenario& s);

}  // namespace stepwave
