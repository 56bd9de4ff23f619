#ifndef NHQM_CONFINED_HPP
#define NHQM_CONFINED_HPP

#include <optional>
#include <string>
#include <vector>

#include "nhqm/linalg.hpp"

namespace nhqm {

/// Combined basis indexing on (-T/2, T/2): odd k carries cos(k pi x / T),
/// even k carries sin(k pi x / T); every basis function vanishes at the
/// endpoints and frequency(k) = k pi / T.
double basis_eval(int k, double T, double x);

/// Closed form of (1/T) * integral x cos(j pi x/T) sin(k pi x/T) dx over
/// the box, j odd and k even:
///   c = (T/pi^2) [ sigma+/m+^2 + sigma-/m-^2 ],  m+- = k +- j,
///   sigma+- = sin(m+- pi/2).
/// Throws ParityError when j and k have equal parity (the integral
/// vanishes by symmetry; calling it is a logic bug).
double coupling_integral(int j, int k, double T);

enum class Coupling { Full, NearestNeighbor };

/// The assembled 2N x 2N Galerkin matrix of -D^2 + i mu x: real diagonal
/// D_kk = k^2 pi^2 / T^2 plus i mu C with C real symmetric, coupling only
/// opposite-parity indices. Complex symmetric by construction.
struct ConfinedModel {
  double T = 0.0;
  double mu = 0.0;
  int N = 0;
  Coupling coupling = Coupling::Full;
  ComplexMatrix matrix;
};

ConfinedModel assemble(double T, double mu, int N, Coupling coupling = Coupling::Full);

enum class StateLabel { Real, PairMember };

struct ClassifiedEntry {
  Complex value;
  StateLabel label = StateLabel::Real;
  int partner = -1;              // index of the conjugate partner, -1 if real
  Complex diagonal_deviation;    // eps_n = lambda_n - h_nn (sorted diagonal)
};

struct ClassifiedSpectrum {
  std::vector<ClassifiedEntry> entries;
  std::vector<std::string> warnings;  // unmatched large-|Im| eigenvalues

  int pair_count() const;
  int pair_count_lowest(int k) const;
};

/// Eigenvalues sorted by real part and classified as real or
/// conjugate-pair members. tol_im <= 0 selects the default
/// 1e-9 * ||h||_F.
ClassifiedSpectrum spectrum(const ConfinedModel& model, double tol_im = -1.0);

struct SweepPoint {
  double T = 0.0;
  double mu = 0.0;
  int N = 0;
  std::optional<ClassifiedSpectrum> result;
  std::string error;  // non-empty when the point failed
};

struct SweepResult {
  std::vector<SweepPoint> points;
};

/// One spectrum per grid point of the cartesian product; per-point
/// failures are recorded without aborting the sweep.
SweepResult sweep(const std::vector<double>& T_grid, const std::vector<double>& mu_grid,
                  const std::vector<int>& N_grid, Coupling coupling = Coupling::Full);

struct EvolveResult {
  ComplexVector coeffs;
  bool used_rk4_fallback = false;
};

/// Eigenbasis propagation of the coefficient vector; falls back to
/// adaptive RK4 on i dc/dt = h c when the eigenvector matrix condition
/// estimate exceeds 1e8.
EvolveResult evolve_confined(const ConfinedModel& model, const ComplexVector& coeffs0,
                             double t);

Complex wavefunction_eval(const ConfinedModel& model, const ComplexVector& coeffs, double x);

}  // namespace nhqm

#endif
