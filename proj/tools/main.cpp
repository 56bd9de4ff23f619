#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nhqm/asymptotics.hpp"
#include "nhqm/confined.hpp"
#include "nhqm/io.hpp"
#include "nhqm/shooting.hpp"
#include "nhqm/tables.hpp"
#include "nhqm/two_level.hpp"

namespace {

using nhqm::Complex;
using nlohmann::json;

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "output file path (default stdout)");
}

void write_output(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output path " + opts.out_path);
  file << text;
}

std::vector<Complex> parse_complex_list(const std::string& csv) {
  std::vector<double> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
  if (parts.empty() || parts.size() % 2 != 0) {
    throw CLI::ValidationError("--psi0", "expected re,im[,re,im...] pairs");
  }
  std::vector<Complex> values;
  for (size_t i = 0; i < parts.size(); i += 2) values.emplace_back(parts[i], parts[i + 1]);
  return values;
}

json vector_json(const nhqm::ComplexVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back({{"re", v[i].real()}, {"im", v[i].imag()}});
  }
  return arr;
}

std::string vector_csv(const nhqm::ComplexVector& v) {
  std::ostringstream out;
  out << "index,re,im\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << i << ',' << nhqm::format_sig9(v[i].real()) << ','
        << nhqm::format_sig9(v[i].imag()) << '\n';
  }
  return out.str();
}

std::string matrix_csv(const nhqm::ComplexMatrix& m) {
  std::ostringstream out;
  out << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) == Complex(0.0, 0.0)) continue;
      out << r << ',' << c << ',' << nhqm::format_sig9(m(r, c).real()) << ','
          << nhqm::format_sig9(m(r, c).imag()) << '\n';
    }
  }
  return out.str();
}

json matrix_json(const nhqm::ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const OutputOptions& opts, const std::string& csv, json meta, json data) {
  if (opts.format == "json") {
    write_output(opts, nhqm::with_meta(std::move(meta), std::move(data)).dump(2) + "\n");
  } else {
    write_output(opts, csv);
  }
}

// Default coupling mode: Full reproduces Table 1 (see the acceptance
// suite's table checks); NearestNeighbor is the literal nearest-index
// truncation, kept selectable for comparison.
nhqm::Coupling parse_coupling(const std::string& name) {
  return name == "nearest" ? nhqm::Coupling::NearestNeighbor : nhqm::Coupling::Full;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  return values;
}

int run(int argc, char** argv) {
  CLI::App app{"non-Hermitian model toolkit: 2x2 PT-symmetric matrix dynamics and "
               "the confined -D^2 + i mu x spectral problem"};
  app.require_subcommand(1);
  long seed = 0;
  app.add_option("--seed", seed, "seed echoed into output metadata");

  // ---- two-level -----------------------------------------------------
  auto* two_level = app.add_subcommand("two-level", "2x2 model operations");
  two_level->require_subcommand(1);
  double mu = 0.0, tau = 1.0, t = 0.0;
  std::string psi0_text = "1,0,0,0";

  OutputOptions tl_out;
  auto* tl_eig = two_level->add_subcommand("eig", "closed-form eigenpairs");
  tl_eig->add_option("--mu", mu)->required();
  add_output_flags(tl_eig, tl_out);

  auto* tl_evolve = two_level->add_subcommand("evolve", "propagate psi0");
  tl_evolve->add_option("--mu", mu)->required();
  tl_evolve->add_option("--psi0", psi0_text)->required();
  tl_evolve->add_option("--t", t)->required();
  add_output_flags(tl_evolve, tl_out);

  auto* tl_metric = two_level->add_subcommand("metric", "metric factors and transformed operator");
  tl_metric->add_option("--mu", mu)->required();
  tl_metric->add_option("--tau", tau)->required();
  tl_metric->add_option("--t", t)->required();
  add_output_flags(tl_metric, tl_out);

  auto* tl_fixed = two_level->add_subcommand("fixed-basis", "coefficient matrix M(mu)");
  tl_fixed->add_option("--mu", mu)->required();
  add_output_flags(tl_fixed, tl_out);

  // ---- confined ------------------------------------------------------
  auto* confined = app.add_subcommand("confined", "confined -D^2 + i mu x operations");
  confined->require_subcommand(1);
  double T = 12.0, x = 0.0, tol_im = -1.0;
  int N = 40;
  std::string coupling_name = "full";

  OutputOptions cf_out;
  auto* cf_assemble = confined->add_subcommand("assemble", "Galerkin matrix");
  auto* cf_spectrum = confined->add_subcommand("spectrum", "classified spectrum");
  auto* cf_evolve = confined->add_subcommand("evolve", "propagate a coefficient vector");
  auto* cf_wave = confined->add_subcommand("wavefunction", "evaluate sum of basis functions");
  for (auto* cmd : {cf_assemble, cf_spectrum, cf_evolve, cf_wave}) {
    cmd->add_option("--T", T)->required();
    cmd->add_option("--mu", mu)->required();
    cmd->add_option("--N", N)->required();
    cmd->add_option("--coupling", coupling_name)->check(CLI::IsMember({"full", "nearest"}));
    add_output_flags(cmd, cf_out);
  }
  cf_spectrum->add_option("--tol-im", tol_im);
  cf_evolve->add_option("--psi0", psi0_text)->required();
  cf_evolve->add_option("--t", t)->required();
  cf_wave->add_option("--psi0", psi0_text)->required();
  cf_wave->add_option("--x", x)->required();

  // ---- sweep ---------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "spectra over parameter grids");
  std::string T_text = "12", mu_text = "1", N_text = "40";
  OutputOptions sw_out;
  sweep_cmd->add_option("--T", T_text, "comma-separated T grid");
  sweep_cmd->add_option("--mu", mu_text, "comma-separated mu grid");
  sweep_cmd->add_option("--N", N_text, "comma-separated N grid");
  sweep_cmd->add_option("--coupling", coupling_name)->check(CLI::IsMember({"full", "nearest"}));
  add_output_flags(sweep_cmd, sw_out);

  // ---- table ---------------------------------------------------------
  auto* table_cmd = app.add_subcommand("table", "reproduce a published table");
  int table_number = 1;
  OutputOptions tb_out;
  table_cmd->add_option("number", table_number, "table number")->required()->check(CLI::Range(1, 3));
  table_cmd->add_option("--coupling", coupling_name)->check(CLI::IsMember({"full", "nearest"}));
  add_output_flags(table_cmd, tb_out);

  // ---- shoot ---------------------------------------------------------
  auto* shoot_cmd = app.add_subcommand("shoot", "ODE shooting verification");
  std::string E_text = "0,0";
  double step = 0.0;
  bool do_refine = false;
  OutputOptions sh_out;
  shoot_cmd->add_option("--T", T)->required();
  shoot_cmd->add_option("--mu", mu)->required();
  shoot_cmd->add_option("--E", E_text, "trial eigenvalue re,im")->required();
  shoot_cmd->add_option("--step", step);
  shoot_cmd->add_flag("--refine", do_refine, "secant-refine the trial eigenvalue");
  add_output_flags(shoot_cmd, sh_out);

  // ---- asymptotics ---------------------------------------------------
  auto* asym_cmd = app.add_subcommand("asymptotics", "tail parameters for odd m");
  std::string m_text = "1,3,5,7,9";
  OutputOptions as_out;
  asym_cmd->add_option("--m", m_text, "comma-separated odd m values");
  add_output_flags(asym_cmd, as_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  json meta = {{"seed", seed}};

  if (tl_eig->parsed() || tl_evolve->parsed() || tl_metric->parsed() || tl_fixed->parsed()) {
    const nhqm::TwoLevelModel model = nhqm::make_two_level(mu);
    meta["mu"] = mu;
    if (tl_eig->parsed()) {
      const auto pairs = nhqm::eigenpairs(model);
      std::ostringstream csv;
      csv << "which,lambda_re,lambda_im,u1_re,u1_im,u2_re,u2_im\n";
      json data;
      auto row = [&](const char* which, Complex lambda, const nhqm::Vector2c& u) {
        csv << which << ',' << nhqm::format_sig9(lambda.real()) << ','
            << nhqm::format_sig9(lambda.imag()) << ',' << nhqm::format_sig9(u[0].real())
            << ',' << nhqm::format_sig9(u[0].imag()) << ',' << nhqm::format_sig9(u[1].real())
            << ',' << nhqm::format_sig9(u[1].imag()) << '\n';
        data[which] = {{"lambda", {{"re", lambda.real()}, {"im", lambda.imag()}}},
                       {"vector", vector_json(u)}};
      };
      if (const auto* sys = std::get_if<nhqm::EigenSystem2>(&pairs)) {
        row("state1", sys->lambda1, sys->u1);
        row("state2", sys->lambda2, sys->u2);
      } else {
        const auto& rep = std::get<nhqm::ExceptionalReport>(pairs);
        row("eigenvector", rep.lambda, rep.u1);
        row("auxiliary", rep.lambda, rep.u2);
        data["exceptional"] = true;
      }
      emit(tl_out, csv.str(), meta, data);
    } else if (tl_evolve->parsed()) {
      auto psi0_list = parse_complex_list(psi0_text);
      if (psi0_list.size() > 2) throw CLI::ValidationError("--psi0", "expected 2 components");
      psi0_list.resize(2, Complex(0.0, 0.0));  // missing components are zero
      nhqm::Vector2c psi0(psi0_list[0], psi0_list[1]);
      const nhqm::Vector2c psi = nhqm::evolve(model, psi0, t);
      meta["t"] = t;
      emit(tl_out, vector_csv(psi), meta, vector_json(psi));
    } else if (tl_metric->parsed()) {
      const nhqm::MetricFactors f = nhqm::metric_factors(model, tau, t);
      const nhqm::Matrix2c h1 = nhqm::transformed_hamiltonian(model, tau, t);
      meta["tau"] = tau;
      meta["t"] = t;
      std::ostringstream csv;
      csv << "r,s,h11_re,h11_im,h22_re,h22_im\n"
          << nhqm::format_sig9(f.r) << ',' << nhqm::format_sig9(f.s) << ','
          << nhqm::format_sig9(h1(0, 0).real()) << ',' << nhqm::format_sig9(h1(0, 0).imag())
          << ',' << nhqm::format_sig9(h1(1, 1).real()) << ','
          << nhqm::format_sig9(h1(1, 1).imag()) << '\n';
      emit(tl_out, csv.str(), meta,
           json{{"r", f.r}, {"s", f.s}, {"transformed", matrix_json(h1)}});
    } else {
      const nhqm::Matrix2c m = nhqm::fixed_basis_system(mu);
      emit(tl_out, matrix_csv(m), meta, matrix_json(m));
    }
    return 0;
  }

  if (confined->parsed()) {
    const nhqm::Coupling coupling = parse_coupling(coupling_name);
    const nhqm::ConfinedModel model = nhqm::assemble(T, mu, N, coupling);
    meta.update(json{{"T", T}, {"mu", mu}, {"N", N}, {"coupling", coupling_name}});
    if (cf_assemble->parsed()) {
      emit(cf_out, matrix_csv(model.matrix), meta, matrix_json(model.matrix));
    } else if (cf_spectrum->parsed()) {
      const nhqm::ClassifiedSpectrum cs = nhqm::spectrum(model, tol_im);
      emit(cf_out, nhqm::spectrum_csv(cs), meta, nhqm::spectrum_json(cs));
    } else if (cf_evolve->parsed()) {
      const auto psi0_list = parse_complex_list(psi0_text);
      nhqm::ComplexVector c0 = nhqm::ComplexVector::Zero(2 * N);
      for (size_t i = 0; i < psi0_list.size() && i < static_cast<size_t>(2 * N); ++i) {
        c0[static_cast<Eigen::Index>(i)] = psi0_list[i];
      }
      const nhqm::EvolveResult result = nhqm::evolve_confined(model, c0, t);
      meta["t"] = t;
      meta["rk4_fallback"] = result.used_rk4_fallback;
      emit(cf_out, vector_csv(result.coeffs), meta, vector_json(result.coeffs));
    } else {
      const auto psi0_list = parse_complex_list(psi0_text);
      nhqm::ComplexVector c0 = nhqm::ComplexVector::Zero(2 * N);
      for (size_t i = 0; i < psi0_list.size() && i < static_cast<size_t>(2 * N); ++i) {
        c0[static_cast<Eigen::Index>(i)] = psi0_list[i];
      }
      const Complex value = nhqm::wavefunction_eval(model, c0, x);
      meta["x"] = x;
      std::ostringstream csv;
      csv << "x,re,im\n"
          << nhqm::format_sig9(x) << ',' << nhqm::format_sig9(value.real()) << ','
          << nhqm::format_sig9(value.imag()) << '\n';
      emit(cf_out, csv.str(), meta, json{{"re", value.real()}, {"im", value.imag()}});
    }
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const auto T_grid = parse_grid(T_text);
    const auto mu_grid = parse_grid(mu_text);
    std::vector<int> N_grid;
    for (double v : parse_grid(N_text)) N_grid.push_back(static_cast<int>(v));
    const nhqm::SweepResult result =
        nhqm::sweep(T_grid, mu_grid, N_grid, parse_coupling(coupling_name));
    meta.update(json{{"T", T_text}, {"mu", mu_text}, {"N", N_text}, {"coupling", coupling_name}});
    emit(sw_out, nhqm::sweep_csv(result), meta, nhqm::sweep_json(result));
    return 0;
  }

  if (table_cmd->parsed()) {
    const nhqm::Coupling coupling = parse_coupling(coupling_name);
    meta.update(json{{"table", table_number}, {"coupling", coupling_name}});
    std::ostringstream csv;
    json data;
    if (table_number == 1) {
      const nhqm::Table1 table = nhqm::compute_table1(coupling);
      csv << "state,N10,N12,N20,N40\n";
      for (int i = 0; i < 10; ++i) {
        csv << (i + 1);
        for (size_t col = 0; col < 4; ++col) {
          csv << ',' << nhqm::format_sig9(table.real_parts[col][static_cast<size_t>(i)]);
        }
        csv << '\n';
      }
      for (size_t col = 0; col < 4; ++col) {
        data["columns"].push_back({{"N", nhqm::Table1::Ns[col]},
                                   {"re", table.real_parts[col]},
                                   {"pairs10", table.pairs10[col]}});
      }
    } else if (table_number == 2) {
      csv << "T,N,state,E_re,E_im\n";
      for (const auto& row : nhqm::compute_table2(coupling)) {
        csv << nhqm::format_sig9(row.T) << ',' << row.N << ',' << row.state << ','
            << nhqm::format_sig9(row.value.real()) << ','
            << nhqm::format_sig9(row.value.imag()) << '\n';
        data["rows"].push_back({{"T", row.T},
                                {"N", row.N},
                                {"state", row.state},
                                {"re", row.value.real()},
                                {"im", row.value.imag()}});
      }
    } else {
      const nhqm::Table3 table = nhqm::compute_table3(coupling);
      csv << "state,T12_mu1,T13_mu1,T12_mu1.5\n";
      for (int i = 0; i < 10; ++i) {
        csv << (i + 1);
        for (size_t col = 0; col < 3; ++col) {
          csv << ',' << nhqm::format_sig9(table.real_parts[col][static_cast<size_t>(i)]);
        }
        csv << '\n';
      }
      for (size_t col = 0; col < 3; ++col) {
        data["columns"].push_back({{"T", nhqm::Table3::Ts[col]},
                                   {"mu", nhqm::Table3::mus[col]},
                                   {"re", table.real_parts[col]},
                                   {"pairs10", table.pairs10[col]}});
      }
    }
    emit(tb_out, csv.str(), meta, data);
    return 0;
  }

  if (shoot_cmd->parsed()) {
    const auto E_list = parse_complex_list(E_text);
    nhqm::ShootingProblem problem{T, mu, E_list[0], step};
    meta.update(json{{"T", T}, {"mu", mu}, {"E_re", E_list[0].real()}, {"E_im", E_list[0].imag()}});
    const nhqm::Mismatch m = nhqm::mismatch(problem);
    std::ostringstream csv;
    json data = {{"mismatch_re", m.wronskian.real()},
                 {"mismatch_im", m.wronskian.imag()},
                 {"scale", m.scale}};
    csv << "mismatch_re,mismatch_im,scale";
    std::string values = nhqm::format_sig9(m.wronskian.real()) + "," +
                         nhqm::format_sig9(m.wronskian.imag()) + "," +
                         nhqm::format_sig9(m.scale);
    if (do_refine) {
      const Complex refined = nhqm::refine(problem, E_list[0]);
      csv << ",refined_re,refined_im";
      values += "," + nhqm::format_sig9(refined.real()) + "," + nhqm::format_sig9(refined.imag());
      data["refined"] = {{"re", refined.real()}, {"im", refined.imag()}};
    }
    csv << '\n' << values << '\n';
    emit(sh_out, csv.str(), meta, data);
    return 0;
  }

  if (asym_cmd->parsed()) {
    std::ostringstream csv;
    csv << "m,p,b_re,b_im,q,consistent\n";
    json data = json::array();
    for (double mv : parse_grid(m_text)) {
      const int m = static_cast<int>(mv);
      const nhqm::TailExpansion tail = nhqm::tail_parameters(m);
      const bool ok = nhqm::consistency_flag(m);
      csv << m << ',' << nhqm::format_sig9(tail.p) << ',' << nhqm::format_sig9(tail.b.real())
          << ',' << nhqm::format_sig9(tail.b.imag()) << ',' << nhqm::format_sig9(tail.q)
          << ',' << (ok ? "true" : "false") << '\n';
      data.push_back({{"m", m},
                      {"p", tail.p},
                      {"b", {{"re", tail.b.real()}, {"im", tail.b.imag()}}},
                      {"q", tail.q},
                      {"consistent", ok}});
    }
    meta["m"] = m_text;
    emit(as_out, csv.str(), meta, data);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "usage"}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "numerical"}}.dump() << '\n';
    return 1;
  }
}
