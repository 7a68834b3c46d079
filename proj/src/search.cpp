#include "stepwave/search.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "stepwave/error.hpp"

namespace stepwave {

namespace {

int bits_for(double rel_tol) {
  const int b = static_cast<int>(std::ceil(1.0 - std::log2(rel_tol)));
  return std::min(std::max(b, 4), 52);
}

}  // namespace

Extremum refine_max(const ScalarFn& f, double lo, double hi, double rel_tol) {
  if (!(hi > lo)) throw NumericalError("refine_max needs lo < hi");
  std::uintmax_t iters = 500;
  const auto r = boost::math::tools::brent_find_minima(
      [&](double x) { return -f(x); }, lo, hi, bits_for(rel_tol), iters);
  return {r.first, -r.second};
}

Extremum log_prescan_max(const ScalarFn& f, double lo, double hi, int points_per_decade,
                         double rel_tol) {
  if (!(lo > 0.0) || !(hi > lo)) throw NumericalError("log prescan needs 0 < lo < hi");
  const int n = std::max(3, static_cast<int>(std::ceil(std::log10(hi / lo) * points_per_decade)) + 1);
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    fs[i] = f(xs[i]);
  }
  int best = -1;
  for (int i = 1; i + 1 < n; ++i)
    if (fs[i] >= fs[i - 1] && fs[i] >= fs[i + 1] && (best < 0 || fs[i] > fs[best])) best = i;
  if (best < 0)
    throw NumericalError("no interior maximum in the search range");
  return refine_max(f, xs[best - 1], xs[best + 1], rel_tol);
}

double find_root(const ScalarFn& f, double lo, double hi, double rel_tol) {
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw NumericalError("root is not bracketed");
  std::uintmax_t iters = 200;
  const auto tol = [rel_tol](double a, double b) {
    return std::abs(b - a) <= rel_tol * std::min(std::abs(a), std::abs(b));
  };
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace stepwave
