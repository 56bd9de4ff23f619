#include "nhqm/tables.hpp"

namespace nhqm {

Table1 compute_table1(Coupling coupling) {
  Table1 table;
  for (size_t col = 0; col < Table1::Ns.size(); ++col) {
    const ClassifiedSpectrum cs = spectrum(assemble(12.0, 1.0, Table1::Ns[col], coupling));
    for (int i = 0; i < 10; ++i) {
      table.real_parts[col][static_cast<size_t>(i)] = cs.entries[static_cast<size_t>(i)].value.real();
    }
    table.pairs10[col] = cs.pair_count_lowest(10);
  }
  return table;
}

std::vector<Table2Row> compute_table2(Coupling coupling) {
  // (T, N, number of listed states) per published row group.
  static constexpr struct { double T; int N; int states; } groups[] = {
      {6.0, 2, 3}, {6.0, 20, 3}, {4.63, 40, 2}, {4.6182, 40, 2}};
  std::vector<Table2Row> rows;
  for (const auto& g : groups) {
    const ClassifiedSpectrum cs = spectrum(assemble(g.T, 1.0, g.N, coupling));
    for (int s = 0; s < g.states; ++s) {
      rows.push_back({g.T, g.N, s + 1, cs.entries[static_cast<size_t>(s)].value});
    }
  }
  return rows;
}

Table3 compute_table3(Coupling coupling) {
  Table3 table;
  for (size_t col = 0; col < 3; ++col) {
    const ClassifiedSpectrum cs =
        spectrum(assemble(Table3::Ts[col], Table3::mus[col], 40, coupling));
    for (int i = 0; i < 10; ++i) {
      table.real_parts[col][static_cast<size_t>(i)] = cs.entries[static_cast<size_t>(i)].value.real();
    }
    table.pairs10[col] = cs.pair_count_lowest(10);
  }
  return table;
}

}  // namespace nhqm
