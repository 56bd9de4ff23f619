#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhqm/confined.hpp"
#include "nhqm/shooting.hpp"

using nhqm::Complex;

TEST_CASE("step defaults and validation") {
  nhqm::ShootingProblem p{12.0, 0.0, Complex(1.0, 0.0), 0.0};
  CHECK(p.effective_step() == doctest::Approx(12.0 / 4000.0));
  p.step = 1.0;  // > T/100
  CHECK_THROWS_AS(nhqm::mismatch(p), std::invalid_argument);
}

TEST_CASE("box eigenvalue at mu = 0") {
  const double T = 12.0;
  const double pi = std::acos(-1.0);
  const double e1 = pi * pi / (T * T);
  const auto hit = nhqm::mismatch({T, 0.0, Complex(e1, 0.0), 0.0});
  CHECK(std::abs(hit.wronskian) < 1e-6);

  const auto miss = nhqm::mismatch({T, 0.0, Complex(2.0 * e1, 0.0), 0.0});
  CHECK(std::abs(miss.wronskian) > 1e-3 * miss.scale);
}

TEST_CASE("mismatch is small near the Galerkin pair eigenvalue") {
  const auto spec = nhqm::spectrum(nhqm::assemble(12.0, 1.0, 40));
  const Complex lambda1 = spec.entries[0].value;
  const auto at_seed = nhqm::mismatch({12.0, 1.0, lambda1, 0.0});
  CHECK(std::abs(at_seed.wronskian) < 1e-4 * at_seed.scale);
  // bounded away from zero off the eigenvalue
  const auto off = nhqm::mismatch({12.0, 1.0, lambda1 + Complex(0.05, 0.0), 0.0});
  CHECK(std::abs(off.wronskian) > 10.0 * std::abs(at_seed.wronskian));
}

TEST_CASE("refine returns an exact root unchanged") {
  const double T = 10.0;
  const double pi = std::acos(-1.0);
  const Complex e1(pi * pi / (T * T), 0.0);
  const Complex refined = nhqm::refine({T, 0.0, e1, 0.0}, e1);
  CHECK(std::abs(refined - e1) < 1e-10);
}

TEST_CASE("Galerkin seeds refine in place") {
  const auto spec = nhqm::spectrum(nhqm::assemble(12.0, 1.0, 40));
  for (int n = 0; n < 4; ++n) {
    const Complex seed = spec.entries[n].value;
    const Complex refined = nhqm::refine({12.0, 1.0, seed, 0.0}, seed);
    CHECK(std::abs(refined - seed) < 1e-6);
    const auto check = nhqm::mismatch({12.0, 1.0, refined, 0.0});
    CHECK(std::abs(check.wronskian) < 1e-10 * check.scale);
  }
}

TEST_CASE("conjugate seeds refine to conjugate roots") {
  const auto spec = nhqm::spectrum(nhqm::assemble(12.0, 1.0, 40));
  REQUIRE(spec.entries[0].label == nhqm::StateLabel::PairMember);
  const Complex seed = spec.entries[0].value;
  const Complex root = nhqm::refine({12.0, 1.0, seed, 0.0}, seed);
  const Complex conj_root = nhqm::refine({12.0, 1.0, std::conj(seed), 0.0}, std::conj(seed));
  CHECK(std::abs(conj_root - std::conj(root)) < 1e-9);
}

TEST_CASE("step halving leaves the refined eigenvalue unchanged") {
  const auto spec = nhqm::spectrum(nhqm::assemble(12.0, 1.0, 40));
  const Complex seed = spec.entries[6].value;  // first unpaired real state
  const Complex coarse = nhqm::refine({12.0, 1.0, seed, 12.0 / 4000.0}, seed);
  const Complex fine = nhqm::refine({12.0, 1.0, seed, 12.0 / 8000.0}, seed);
  CHECK(std::abs(coarse - fine) < 1e-8);
}

TEST_CASE("hopeless seed raises NonConvergence") {
  CHECK_THROWS_AS(nhqm::refine({12.0, 1.0, Complex(0, 0), 0.0}, Complex(1e6, 1e6), 5),
                  nhqm::NonConvergence);
}
