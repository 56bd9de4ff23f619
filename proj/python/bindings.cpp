#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nhqm/asymptotics.hpp"
#include "nhqm/confined.hpp"
#include "nhqm/shooting.hpp"
#include "nhqm/two_level.hpp"

namespace py = pybind11;

namespace {

nhqm::Coupling coupling_from_name(const std::string& name) {
  if (name == "full") return nhqm::Coupling::Full;
  if (name == "nearest") return nhqm::Coupling::NearestNeighbor;
  throw py::value_error("coupling must be 'full' or 'nearest'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "non-Hermitian model toolkit: 2x2 PT-symmetric dynamics and the "
            "confined -D^2 + i mu x spectral problem";

  py::register_exception<nhqm::NonConvergence>(m, "NonConvergence");
  py::register_exception<nhqm::SingularMatrix>(m, "SingularMatrix");
  py::register_exception<nhqm::DomainError>(m, "DomainError");
  py::register_exception<nhqm::ParityError>(m, "ParityError");
  py::register_exception<nhqm::ExceptionalInput>(m, "ExceptionalInput");

  // ---- linalg --------------------------------------------------------
  py::class_<nhqm::SpectralDecomposition>(m, "SpectralDecomposition")
      .def_readonly("eigenvalues", &nhqm::SpectralDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &nhqm::SpectralDecomposition::eigenvectors)
      .def_readonly("residuals", &nhqm::SpectralDecomposition::residuals);
  m.def("eig", &nhqm::eig, py::arg("matrix"));
  m.def("solve_linear",
        [](const nhqm::ComplexMatrix& mat, const nhqm::ComplexVector& rhs) {
          const auto result = nhqm::solve_linear(mat, rhs);
          return py::make_tuple(result.x, result.condition_estimate);
        },
        py::arg("matrix"), py::arg("rhs"));

  // ---- two-level -------------------------------------------------------
  m.def("two_level_hamiltonian",
        [](double mu) { return nhqm::make_two_level(mu).hamiltonian; }, py::arg("mu"));
  m.def("two_level_regime",
        [](double mu) {
          switch (nhqm::make_two_level(mu).regime) {
            case nhqm::Regime::RealSpectrum: return "real";
            case nhqm::Regime::ComplexSpectrum: return "complex";
            default: return "exceptional";
          }
        },
        py::arg("mu"));
  m.def("two_level_eigenpairs",
        [](double mu) {
          const auto pairs = nhqm::eigenpairs(nhqm::make_two_level(mu));
          py::dict out;
          if (const auto* sys = std::get_if<nhqm::EigenSystem2>(&pairs)) {
            out["exceptional"] = false;
            out["lambda1"] = sys->lambda1;
            out["lambda2"] = sys->lambda2;
            out["u1"] = sys->u1;
            out["u2"] = sys->u2;
          } else {
            const auto& rep = std::get<nhqm::ExceptionalReport>(pairs);
            out["exceptional"] = true;
            out["lambda1"] = rep.lambda;
            out["lambda2"] = rep.lambda;
            out["u1"] = rep.u1;
            out["u2"] = rep.u2;
          }
          return out;
        },
        py::arg("mu"));
  m.def("two_level_evolve",
        [](double mu, const nhqm::Vector2c& psi0, double t) {
          return nhqm::evolve(nhqm::make_two_level(mu), psi0, t);
        },
        py::arg("mu"), py::arg("psi0"), py::arg("t"));
  m.def("defective_evolve", &nhqm::defective_evolve, py::arg("psi0"), py::arg("t"),
        py::arg("sign") = 1);
  m.def("metric_factors",
        [](double mu, double tau, double t) {
          const auto f = nhqm::metric_factors(nhqm::make_two_level(mu), tau, t);
          return py::make_tuple(f.r, f.s);
        },
        py::arg("mu"), py::arg("tau"), py::arg("t"));
  m.def("transformed_hamiltonian",
        [](double mu, double tau, double t) {
          return nhqm::transformed_hamiltonian(nhqm::make_two_level(mu), tau, t);
        },
        py::arg("mu"), py::arg("tau"), py::arg("t"));
  m.def("metric_inner_product",
        [](const nhqm::Vector2c& phi1, const nhqm::Vector2c& phi2, double mu, double tau,
           double t) {
          return nhqm::metric_inner_product(phi1, phi2, nhqm::make_two_level(mu), tau, t);
        },
        py::arg("phi1"), py::arg("phi2"), py::arg("mu"), py::arg("tau"), py::arg("t"));
  m.def("fixed_basis_system", &nhqm::fixed_basis_system, py::arg("mu"));

  // ---- confined --------------------------------------------------------
  py::class_<nhqm::ConfinedModel>(m, "ConfinedModel")
      .def_readonly("T", &nhqm::ConfinedModel::T)
      .def_readonly("mu", &nhqm::ConfinedModel::mu)
      .def_readonly("N", &nhqm::ConfinedModel::N)
      .def_readonly("matrix", &nhqm::ConfinedModel::matrix);
  m.def("basis_eval", &nhqm::basis_eval, py::arg("k"), py::arg("T"), py::arg("x"));
  m.def("coupling_integral", &nhqm::coupling_integral, py::arg("j"), py::arg("k"),
        py::arg("T"));
  m.def("assemble",
        [](double T, double mu, int N, const std::string& coupling) {
          return nhqm::assemble(T, mu, N, coupling_from_name(coupling));
        },
        py::arg("T"), py::arg("mu"), py::arg("N"), py::arg("coupling") = "full");
  m.def("spectrum",
        [](const nhqm::ConfinedModel& model, double tol_im) {
          const auto cs = nhqm::spectrum(model, tol_im);
          py::list entries;
          for (const auto& e : cs.entries) {
            py::dict d;
            d["value"] = e.value;
            d["label"] = e.label == nhqm::StateLabel::Real ? "real" : "pair";
            d["partner"] = e.partner;
            d["eps"] = e.diagonal_deviation;
            entries.append(std::move(d));
          }
          return entries;
        },
        py::arg("model"), py::arg("tol_im") = -1.0);
  m.def("evolve_confined",
        [](const nhqm::ConfinedModel& model, const nhqm::ComplexVector& coeffs0, double t) {
          const auto result = nhqm::evolve_confined(model, coeffs0, t);
          return py::make_tuple(result.coeffs, result.used_rk4_fallback);
        },
        py::arg("model"), py::arg("coeffs0"), py::arg("t"));
  m.def("wavefunction_eval", &nhqm::wavefunction_eval, py::arg("model"), py::arg("coeffs"),
        py::arg("x"));

  // ---- shooting ----------------------------------------------------------
  m.def("shooting_mismatch",
        [](double T, double mu, nhqm::Complex E, double step) {
          const auto result = nhqm::mismatch({T, mu, E, step});
          return py::make_tuple(result.wronskian, result.scale);
        },
        py::arg("T"), py::arg("mu"), py::arg("E"), py::arg("step") = 0.0);
  m.def("shooting_refine",
        [](double T, double mu, nhqm::Complex E0, double step, int max_iter) {
          return nhqm::refine({T, mu, E0, step}, E0, max_iter);
        },
        py::arg("T"), py::arg("mu"), py::arg("E0"), py::arg("step") = 0.0,
        py::arg("max_iter") = 50);

  // ---- asymptotics ---------------------------------------------------------
  py::class_<nhqm::TailExpansion>(m, "TailExpansion")
      .def_readonly("m", &nhqm::TailExpansion::m)
      .def_readonly("p", &nhqm::TailExpansion::p)
      .def_readonly("b", &nhqm::TailExpansion::b)
      .def_readonly("q", &nhqm::TailExpansion::q)
      .def("series_terms", &nhqm::TailExpansion::series_terms, py::arg("order"));
  m.def("tail_parameters", &nhqm::tail_parameters, py::arg("m"));
  m.def("asymptotic_psi",
        [](const nhqm::TailExpansion& tail, double x, const std::string& side) {
          return nhqm::asymptotic_psi(
              tail, x, side == "negative" ? nhqm::Side::Negative : nhqm::Side::Positive);
        },
        py::arg("tail"), py::arg("x"), py::arg("side") = "positive");
  m.def("residual_check", &nhqm::residual_check, py::arg("tail"), py::arg("x"),
        py::arg("order") = 0);
  m.def("consistency_flag", &nhqm::consistency_flag, py::arg("m"));
}
