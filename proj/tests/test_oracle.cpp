#include <cmath>
#include <random>

#include "doctest.h"
#include "stepwave/error.hpp"
#include "stepwave/forerunner.hpp"
#include "stepwave/oracle.hpp"
#include "stepwave/wavefield.hpp"

using namespace stepwave;

namespace {

const SourceScenario below(UnitSystem::natural(), 1.0, 0.5);
const SourceScenario above(UnitSystem::natural(), 1.0, 2.0);
const SourceScenario free_particle(UnitSystem::natural(), 0.0, 0.5);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// Three levels halving dx and dt on [0, 10] up to T = 2.
std::vector<double> refinement_errors(const SourceScenario& s) {
  std::vector<double> errs;
  int nx = 1024;
  double dt = 0.01;
  for (int level = 0; level < 3; ++level) {
    const GridSpec g{10.0, nx, dt, static_cast<int>(std::lround(2.0 / dt))};
    errs.push_back(cn_relative_l2_error(s, g, cn_evolve(s, g).back()));
    nx = 2 * nx - 1;
    dt /= 2;
  }
  return errs;
}

double interior_norm(const CNState& st) {
  double n = 0.0;
  for (std::size_t i = 1; i + 1 < st.psi.size(); ++i) n += std::norm(st.psi[i]);
  return n;
}

}  // namespace

TEST_CASE("preflight") {
  CHECK_THROWS_AS(preflight(below, {10.0, 32, 0.01, 10}), PreflightError);
  CHECK_THROWS_AS(preflight(below, {10.0, 128, 0.0, 10}), PreflightError);
  CHECK_THROWS_AS(preflight(below, {10.0, 128, 0.01, 0}), PreflightError);
  CHECK_THROWS_AS(preflight(below, {10.0, 4096, 1.0, 10}), PreflightError);  // dt/dx^2 too large
  CnOptions wall;
  wall.boundary = FarBoundary::hard_wall;
  CHECK_THROWS_AS(preflight(below, {10.0, 512, 0.01, 400}, wall), PreflightError);  // 3 v T = 12 > L
  CHECK_NOTHROW(preflight(below, {40.0, 512, 0.01, 400}, wall));
  CHECK_NOTHROW(preflight(below, {10.0, 512, 0.01, 400}));
}

TEST_CASE("zero source leaves the field at zero") {
  CnOptions opt;
  opt.source_amplitude = 0.0;
  opt.snapshot_stride = 10;
  const auto snaps = cn_evolve(below, {10.0, 256, 0.01, 100}, opt);
  CHECK(snaps.size() == 10);
  for (const CNState& st : snaps)
    for (const Complex& z : st.psi) CHECK(z == Complex(0.0, 0.0));
}

TEST_CASE("driven boundary node carries the source exactly") {
  CnOptions opt;
  opt.snapshot_stride = 7;
  for (const CNState& st : cn_evolve(below, {10.0, 256, 0.01, 70}, opt))
    CHECK(st.psi[0] == std::polar(1.0, -below.omega0() * st.t));
}

TEST_CASE("transparent kernel decays and matches a large walled domain") {
  const auto k = transparent_kernel(1.0, 100.0, 0.01, 64);
  CHECK(std::abs(k[0]) < 1.0);
  const GridSpec small{10.0, 513, 0.01, 300};
  const CNState tbc = cn_evolve(below, small).back();
  CnOptions wall;
  wall.boundary = FarBoundary::hard_wall;
  const GridSpec big{40.0, 2049, 0.01, 300};
  const CNState ref = cn_evolve(below, big, wall).back();
  double worst = 0.0;
  for (int i = 0; i < 512; ++i) worst = std::max(worst, std::abs(tbc.psi[i] - ref.psi[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("free propagation against the V = 0 analytic field") {
  const auto e = refinement_errors(free_particle);
  CHECK(e[2] <= 1e-3);
}

TEST_CASE("second-order convergence, both regimes") {
  for (const SourceScenario* s : {&below, &above}) {
    const auto e = refinement_errors(*s);
    MESSAGE("errors " << e[0] << " " << e[1] << " " << e[2]);
    CHECK(e[0] / e[1] >= 3.0);
    CHECK(e[0] / e[1] <= 5.0);
    CHECK(e[1] / e[2] >= 3.0);
    CHECK(e[1] / e[2] <= 5.0);
    CHECK(e[2] <= 1e-3);
  }
}

TEST_CASE("plain midpoint onset is available") {
  CnOptions opt;
  opt.startup_steps = 0;
  const GridSpec g{10.0, 1024, 0.01, 200};
  const double err = cn_relative_l2_error(below, g, cn_evolve(below, g, opt).back());
  CHECK(std::isfinite(err));
  CHECK(err < 0.2);
}

TEST_CASE("interior norm is conserved once the source is off") {
  CnOptions opt;
  opt.boundary = FarBoundary::hard_wall;
  opt.source_off_time = 0.5;
  opt.snapshot_stride = 1;
  const GridSpec g{40.0, 1024, 0.01, 300};
  const auto snaps = cn_evolve(below, g, opt);
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    if (snaps[i - 1].t < 0.5 + 1e-12) continue;
    const double a = interior_norm(snaps[i - 1]), b = interior_norm(snaps[i]);
    CHECK(std::abs(b - a) / a <= 1e-10);
  }
}

TEST_CASE("Talbot inversion") {
  const double q0 = derive_wavenumber(below);
  const double x = 2.0 / q0;
  const double t = traversal_time(below, x);
  CHECK(rel(talbot_invert(x, t, below), psi_below(x, t, below)) <= 1e-6);
  CHECK(rel(talbot_invert(3.0, 2.0, above), psi_above(3.0, 2.0, above)) <= 1e-6);
  CHECK(rel(talbot_invert(3.0, 30.0, above), psi_above(3.0, 30.0, above)) <= 1e-6);
  for (double tt : {0.1, 2.0, 50.0}) {
    CHECK(std::abs(talbot_invert(0.0, tt, below) - std::polar(1.0, -below.omega0() * tt)) <= 1e-8);
    CHECK(std::abs(talbot_invert(0.0, tt, above) - std::polar(1.0, -above.omega0() * tt)) <= 1e-8);
  }
  TalbotOptions raw;
  raw.subtract_pole = false;
  CHECK(rel(talbot_invert(x, t, below, raw), psi_below(x, t, below)) <= 1e-6);
  CHECK_THROWS_AS(talbot_invert(x, 200.0, below, raw), ContourError);
  CHECK_THROWS_AS(talbot_invert(-1.0, 1.0, below), DomainError);
  CHECK_THROWS_AS(talbot_invert(1.0, 0.0, below), DomainError);
}

TEST_CASE("oracle triangle at random probes") {
  const GridSpec g{10.0, 4093, 0.0025, 800};
  const CNState st = cn_evolve(below, g).back();
  const double T = st.t;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> node(1, (g.nx - 1) / 2);
  for (int k = 0; k < 10; ++k) {
    const int i = node(rng);
    const double x = i * g.dx();
    const Complex an = psi_below(x, T, below);
    const Complex tb = talbot_invert(x, T, below);
    const Complex cn = st.psi[i];
    CHECK(rel(cn, an) <= 5e-3);
    CHECK(rel(tb, an) <= 5e-3);
    CHECK(rel(cn, tb) <= 5e-3);
  }
}
