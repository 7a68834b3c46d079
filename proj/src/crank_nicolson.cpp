#include <cmath>
#include <string>
#include <vector>

#include "stepwave/error.hpp"
#include "stepwave/field_grid.hpp"
#include "stepwave/oracle.hpp"
#include "stepwave/tuning.hpp"

extern "C" {
void zgttrf_(const int* n, std::complex<double>* dl, std::complex<double>* d,
             std::complex<double>* du, std::complex<double>* du2, int* ipiv, int* info);
void zgttrs_(const char* trans, const int* n, const int* nrhs, const std::complex<double>* dl,
             const std::complex<double>* d, const std::complex<double>* du,
             const std::complex<double>* du2, const int* ipiv, std::complex<double>* b,
             const int* ldb, int* info, std::size_t trans_len);
}

namespace stepwave {

namespace {

// LU factorization of a complex tridiagonal matrix, reused for every step.
class Tridiagonal {
 public:
  Tridiagonal(int n, Complex lower, Complex diag, Complex upper, Complex last_diag)
      : n_(n), dl_(n - 1, lower), d_(n, diag), du_(n - 1, upper), du2_(n - 2), ipiv_(n) {
    d_[n - 1] = last_diag;
    int info = 0;
    zgttrf_(&n_, dl_.data(), d_.data(), du_.data(), du2_.data(), ipiv_.data(), &info);
    if (info != 0) throw NumericalError("tridiagonal factorization failed (info " + std::to_string(info) + ")");
  }

  void solve(std::vector<Complex>& rhs) const {
    const char trans = 'N';
    const int nrhs = 1;
    int info = 0;
    zgttrs_(&trans, &n_, &nrhs, dl_.data(), d_.data(), du_.data(), du2_.data(), ipiv_.data(),
            rhs.data(), &n_, &info, 1);
    if (info != 0) throw NumericalError("tridiagonal solve failed");
  }

 private:
  int n_;
  std::vector<Complex> dl_, d_, du_, du2_;
  std::vector<int> ipiv_;
};

std::vector<Complex> series_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t n = a.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    out[i] = acc;
  }
  return out;
}

bool all_finite(const std::vector<Complex>& v) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace

std::vector<Complex> transparent_kernel(double V, double c, double dt, int n) {
  if (n < 1) throw DomainError("transparent kernel needs n >= 1");
  if (!(c > 0.0) || !(dt > 0.0)) throw DomainError("transparent kernel needs c > 0, dt > 0");
  // a(u) = (V (1 + u) - (2i/dt)(1 - u)) / (c (1 + u)), u = 1/z.
  const Complex i2dt(0.0, 2.0 / dt);
  std::vector<Complex> a(n);
  a[0] = (V - i2dt) / c;
  for (int k = 1; k < n; ++k) a[k] = (k % 2 ? -1.0 : 1.0) * (-2.0 * i2dt) / c;

  // kappa = 1 + a/2 - sqrt(a + a^2/4), root with |kappa_0| < 1.
  std::vector<Complex> f = series_mul(a, a);
  for (int k = 0; k < n; ++k) f[k] = a[k] + 0.25 * f[k];
  std::vector<Complex> g(n);
  g[0] = std::sqrt(f[0]);
  if (std::abs(1.0 + 0.5 * a[0] - g[0]) > 1.0) g[0] = -g[0];
  for (int k = 1; k < n; ++k) {
    Complex acc = 0.0;
    for (int j = 1; j < k; ++j) acc += g[j] * g[k - j];
    g[k] = (f[k] - acc) / (2.0 * g[0]);
  }
  std::vector<Complex> kappa(n);
  for (int k = 0; k < n; ++k) kappa[k] = 0.5 * a[k] - g[k];
  kappa[0] += 1.0;
  return kappa;
}

void preflight(const SourceScenario& s, const GridSpec& g, const CnOptions& opt) {
  if (g.nx < 64) throw PreflightError("grid needs nx >= 64");
  if (!(g.length > 0.0) || !std::isfinite(g.length)) throw PreflightError("grid needs L > 0");
  if (!(g.dt > 0.0) || !std::isfinite(g.dt)) throw PreflightError("grid needs dt > 0");
  if (g.n_steps < 1) throw PreflightError("grid needs n_steps >= 1");
  if (opt.startup_steps < 0 || opt.startup_steps > g.n_steps)
    throw PreflightError("startup_steps must lie in [0, n_steps]");
  if (opt.snapshot_stride < 0) throw PreflightError("snapshot_stride must be >= 0");
  const double dx = g.dx();
  const double ratio = g.dt * s.units().hbar_over_mass() / (dx * dx);
  if (ratio > tuning::cn_dt_over_dx2_limit)
    throw PreflightError("dt * hbar / (m dx^2) = " + std::to_string(ratio) + " exceeds " +
                         std::to_string(tuning::cn_dt_over_dx2_limit));
  if (opt.boundary == FarBoundary::hard_wall) {
    const double reach = tuning::cn_front_speed_factor * group_velocity(s) * g.final_time();
    if (!(g.length > reach))
      throw PreflightError("hard wall at L = " + std::to_string(g.length) +
                           " is inside the front reach " + std::to_string(reach));
  }
}

std::vector<CNState> cn_evolve(const SourceScenario& s, const GridSpec& g, const CnOptions& opt) {
  preflight(s, g, opt);
  const int n = g.nx - 2;  // interior unknowns at nodes 1..nx-2
  const double dx = g.dx();
  const double c = s.units().hbar_over_mass() / (2.0 * dx * dx);
  const double V = s.barrier_frequency();
  const Complex diag = V + 2.0 * c;
  const Complex off = -c;
  const bool transparent = opt.boundary == FarBoundary::transparent;

  const auto source = [&](double t) -> Complex {
    if (t <= 0.0) return 0.0;
    if (opt.source_off_time >= 0.0 && t > opt.source_off_time) return 0.0;
    return opt.source_amplitude * std::polar(1.0, -s.omega0() * t);
  };

  std::vector<Complex> u(n, 0.0), rhs(n);
  std::vector<Complex> history;  // psi_J at CN levels, oldest first
  std::vector<Complex> kappa;
  std::vector<CNState> out;

  const auto record = [&](double t, Complex ghost) {
    CNState st{t, std::vector<Complex>(g.nx)};
    st.psi[0] = source(t);
    std::copy(u.begin(), u.end(), st.psi.begin() + 1);
    st.psi[g.nx - 1] = ghost;
    out.push_back(std::move(st));
  };
  const auto wants = [&](int step) {
    return step == g.n_steps || (opt.snapshot_stride > 0 && step % opt.snapshot_stride == 0);
  };

  // Implicit-Euler half-steps; the far end is still unreached, so it is a wall.
  {
    const double h = 0.5 * g.dt;
    const Complex ih(0.0, h);
    const Tridiagonal m(n, ih * off, 1.0 + ih * diag, ih * off, 1.0 + ih * diag);
    for (int k = 0; k < 2 * opt.startup_steps; ++k) {
      rhs = u;
      rhs[0] -= ih * off * source((k + 1) * h);
      m.solve(rhs);
      u.swap(rhs);
      if (k % 2 == 1 && wants((k + 1) / 2)) record((k + 1) * h, 0.0);
    }
  }

  const int cn_steps = g.n_steps - opt.startup_steps;
  if (transparent) kappa = transparent_kernel(V, c, g.dt, cn_steps + 2);
  const Complex a(0.0, 0.5 * g.dt);
  const Complex last_diag = 1.0 + a * diag + (transparent ? a * off * kappa[0] : Complex(0.0));
  const Tridiagonal m(n, a * off, 1.0 + a * diag, a * off, last_diag);
  const bool midpoint_onset = opt.startup_steps == 0;

  for (int k = 0; k < cn_steps; ++k) {
    const int step = opt.startup_steps + k;
    const double t0 = step * g.dt;
    const double t1 = t0 + g.dt;

    for (int j = 0; j < n; ++j) {
      Complex r = (1.0 - a * diag) * u[j];
      if (j > 0) r -= a * off * u[j - 1];
      if (j + 1 < n) r -= a * off * u[j + 1];
      rhs[j] = r;
    }
    const Complex boundary = midpoint_onset ? 2.0 * source(0.5 * (t0 + t1)) : source(t0) + source(t1);
    rhs[0] -= a * off * boundary;

    if (transparent) {
      history.push_back(u[n - 1]);
      const std::size_t h = history.size();
      Complex ghost_old = 0.0, ghost_new = 0.0;
      for (std::size_t mIdx = 0; mIdx < h; ++mIdx) {
        const Complex past = history[h - 1 - mIdx];
        ghost_old += kappa[mIdx] * past;
        ghost_new += kappa[mIdx + 1] * past;
      }
      rhs[n - 1] -= a * off * (ghost_old + ghost_new);
      m.solve(rhs);
      u.swap(rhs);
      if (wants(step + 1)) record(t1, kappa[0] * u[n - 1] + ghost_new);
    } else {
      m.solve(rhs);
      u.swap(rhs);
      if (wants(step + 1)) record(t1, 0.0);
    }
    if (!all_finite(u)) throw NumericalError("Crank-Nicolson state became non-finite");
  }
  return out;
}

double cn_relative_l2_error(const SourceScenario& s, const GridSpec& g, const CNState& state,
                            double fraction) {
  std::vector<double> xs;
  for (int i = 0; i < g.nx; ++i) {
    const double x = i * g.dx();
    if (x > fraction * g.length) break;
    xs.push_back(x);
  }
  if (xs.size() < 2) throw DomainError("error window holds fewer than two nodes");
  const FieldGrid ref = sample_space_cut(s, state.t, xs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += std::norm(state.psi[i] - ref.samples[i].psi);
    den += std::norm(ref.samples[i].psi);
  }
  return std::sqrt(num / den);
}

}  // namespace stepwave
