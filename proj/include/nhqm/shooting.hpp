#ifndef NHQM_SHOOTING_HPP
#define NHQM_SHOOTING_HPP

#include "nhqm/linalg.hpp"

namespace nhqm {

/// Direct ODE verification of the confined eigenvalues: integrates
/// -psi'' + i mu x psi = E psi from both endpoints and matches at x = 0.
/// Shares no code path with the Galerkin solver.
struct ShootingProblem {
  double T = 0.0;
  double mu = 0.0;
  Complex E;
  double step = 0.0;  // <= 0 selects the default T/4000

  double effective_step() const;
};

/// Wronskian psi_L psi_R' - psi_L' psi_R at the matching point x = 0,
/// zero iff E is an eigenvalue. `scale` is the magnitude the mismatch
/// should be compared against.
struct Mismatch {
  Complex wronskian;
  double scale = 0.0;
};

Mismatch mismatch(const ShootingProblem& problem);

/// Complex secant iteration on the mismatch, seeded from E0.
/// Converges when |mismatch| < 1e-10 * scale; throws NonConvergence after
/// max_iter steps.
Complex refine(const ShootingProblem& problem, Complex E0, int max_iter = 50);

}  // namespace nhqm

#endif
