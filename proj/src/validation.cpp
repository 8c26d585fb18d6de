#include "nuqc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "nuqc/experiments.hpp"
#include "nuqc/markers.hpp"
#include "nuqc/qubit_algebra.hpp"

namespace nuqc {
namespace {

CheckResult make_result(std::string name, std::string description, double max_error,
                        double default_tol, std::size_t samples, const ValidationOptions& opt) {
  CheckResult r;
  r.name = std::move(name);
  r.description = std::move(description);
  r.max_error = max_error;
  r.tolerance = opt.tolerance.value_or(default_tol);
  r.samples = samples;
  r.passed = std::isfinite(max_error) && max_error < r.tolerance;
  return r;
}

struct PhaseSample {
  double p;
  double phi;
};

std::vector<PhaseSample> random_phase_samples(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<PhaseSample> out(n);
  for (auto& s : out) {
    s.p = prob(rng);
    s.phi = phase(rng);
  }
  return out;
}

TwoQubitState phased_flavor_state(double p, double phi) {
  return flavor_density_matrix(std::sqrt(p), std::polar(std::sqrt(1.0 - p), phi));
}

}  // namespace

std::vector<double> oracle_probabilities() {
  std::vector<double> ps(200);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ps[i] = 0.005 + 0.99 * static_cast<double>(i) / 199.0;
  }
  return ps;
}

std::vector<QuadraturePoint> quadrature_check_grid() {
  // A 2 MeV packet with a few-eV mass; only the envelope offset and width vary.
  const double p = 2e6;
  const double mass = 2.0;
  const double e = std::sqrt(p * p + mass * mass);
  const double v = p / e;
  const double t = 1e-5;
  const double widths[] = {0.5e-6, 1e-6, 1.25e-6, 3.3e-6, 5e-6};
  const double offsets[] = {-3.0, -1.5, 0.0, 1.0, 2.5};  // in units of sigma
  std::vector<QuadraturePoint> grid;
  for (double w : widths) {
    for (double k : offsets) {
      grid.push_back({{p, e, v, w}, v * t + k * w, t});
    }
  }
  return grid;
}

double quadrature_max_relative_error(const std::vector<QuadraturePoint>& grid) {
  double worst = 0.0;
  for (const auto& q : grid) {
    const auto closed = wavepacket_amplitude_closed(q.packet, q.x, q.t);
    const auto numeric = wavepacket_amplitude_quadrature(q.packet, q.x, q.t);
    worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
  }
  return worst;
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  std::vector<CheckResult> results;

  {
    double worst = 0.0;
    const auto ps = oracle_probabilities();
    for (double p : ps) {
      const TwoQubitState rho = flavor_density_matrix(std::sqrt(p), std::sqrt(1.0 - p));
      worst = std::max(worst, std::abs(naqc_steering(rho) - naqc_from_probability(p)));
    }
    results.push_back(make_result("naqc-oracle",
                                  "steering-game NAQC vs 2+2sqrt(P(1-P)), real amplitudes", worst,
                                  1e-12, ps.size(), options));
  }

  const auto samples = random_phase_samples(options.seed, 500);
  {
    double worst = 0.0;
    for (const auto& s : samples) {
      worst = std::max(worst, std::abs(chsh_m(phased_flavor_state(s.p, s.phi)) -
                                       chsh_from_probability(s.p)));
    }
    results.push_back(make_result("chsh-oracle",
                                  "correlation-matrix M vs 1+4P(1-P), random relative phase",
                                  worst, 1e-12, samples.size(), options));
  }
  {
    double worst = 0.0;
    for (const auto& s : samples) {
      const auto u = correlation_spectrum(phased_flavor_state(s.p, s.phi));
      const double pq = 4.0 * s.p * (1.0 - s.p);
      std::array<double, 3> expected = {1.0, pq, pq};
      std::sort(expected.begin(), expected.end(), std::greater<>());
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(u[i] - expected[i]));
    }
    results.push_back(make_result("chsh-spectrum", "T^T T eigenvalues vs {1, 4PQ, 4PQ}", worst,
                                  1e-10, samples.size(), options));
  }
  {
    const double n = 1.0 / std::sqrt(3.0);
    const double value = sum_coherence_three_bases(QubitState::from_bloch(n, n, n));
    results.push_back(make_result("coherence-bound",
                                  "three-basis l1 coherence of Bloch (1,1,1)/sqrt3 vs sqrt6",
                                  std::abs(value - std::sqrt(6.0)), 1e-12, 1, options));
  }
  {
    const auto grid = quadrature_check_grid();
    results.push_back(make_result("quadrature",
                                  "closed-form Gaussian packet vs momentum quadrature (relative)",
                                  quadrature_max_relative_error(grid), 1e-8, grid.size(),
                                  options));
  }
  {
    double worst = 0.0;
    std::size_t count = 0;
    for (const auto& name : preset_names()) {
      const ExperimentPreset pr = preset(name);
      for (double x : Grid{pr.x_min, pr.x_max, 400, Spacing::Log}.points()) {
        const FlavorAmplitudes a = plane_wave_amplitudes(pr.osc, pr.energy, x);
        const double ps = std::norm(a.survival);
        worst = std::max(worst, std::abs(ps + std::norm(a.transition) - 1.0));
        worst = std::max(worst, std::abs(ps - survival_probability_pw(pr.osc, pr.energy, x)));
        ++count;
      }
    }
    results.push_back(make_result("amplitude-unitarity",
                                  "|a_surv|^2 + |a_trans|^2 = 1 and |a_surv|^2 = P_pw on preset grids",
                                  worst, 1e-12, count, options));
  }
  return results;
}

}  // namespace nuqc
