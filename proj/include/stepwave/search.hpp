#pragma once

#include <functional>

namespace stepwave {

using ScalarFn = std::function<double(double)>;

struct Extremum {
  double x;
  double value;
};

/// Refines a maximum of f inside [lo, hi] (Brent's golden-section/parabolic
/// minimizer on -f) to the given relative tolerance.
Extremum refine_max(const ScalarFn& f, double lo, double hi, double rel_tol);

/// Scans f on a log-spaced grid over [lo, hi] (0 < lo < hi) and refines the
/// largest interior local maximum; the ends of the range may be higher (the
/// stationary tail near the source, for instance). Throws NumericalError when
/// the samples have no interior local maximum.
Extremum log_prescan_max(const ScalarFn& f, double lo, double hi, int points_per_decade,
                         double rel_tol);

/// Root of f on a sign-changing bracket [lo, hi] via TOMS 748.
/// Throws NumericalError if f(lo) and f(hi) share a sign.
double find_root(const ScalarFn& f, double lo, double hi, double rel_tol);

}  // namespace stepwave
