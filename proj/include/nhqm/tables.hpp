#ifndef NHQM_TABLES_HPP
#define NHQM_TABLES_HPP

#include <array>
#include <vector>

#include "nhqm/confined.hpp"

namespace nhqm {

// The published table layouts: lowest-state real parts of the confined
// spectrum for the parameter sets of the three tables.

/// T = 12, mu = 1, N in {10, 12, 20, 40}; ten lowest real parts per column.
struct Table1 {
  static constexpr std::array<int, 4> Ns{10, 12, 20, 40};
  std::array<std::array<double, 10>, 4> real_parts{};
  std::array<int, 4> pairs10{};
};

/// (T, N) rows at mu = 1 with per-state energies.
struct Table2Row {
  double T;
  int N;
  int state;  // 1-based
  Complex value;
};

/// N = 40 columns (T=12, mu=1), (T=13, mu=1), (T=12, mu=1.5).
struct Table3 {
  static constexpr std::array<double, 3> Ts{12.0, 13.0, 12.0};
  static constexpr std::array<double, 3> mus{1.0, 1.0, 1.5};
  std::array<std::array<double, 10>, 3> real_parts{};
  std::array<int, 3> pairs10{};
};

Table1 compute_table1(Coupling coupling = Coupling::Full);
std::vector<Table2Row> compute_table2(Coupling coupling = Coupling::Full);
Table3 compute_table3(Coupling coupling = Coupling::Full);

}  // namespace nhqm

#endif
