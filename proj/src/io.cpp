#include "nhqm/io.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nhqm {

std::string format_sig9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

namespace {

const char* label_name(StateLabel label) {
  return label == StateLabel::Real ? "real" : "pair";
}

}  // namespace

std::string spectrum_csv(const ClassifiedSpectrum& spectrum) {
  std::ostringstream out;
  out << "index,re,im,label,partner,eps_re,eps_im\n";
  for (size_t i = 0; i < spectrum.entries.size(); ++i) {
    const auto& e = spectrum.entries[i];
    out << i << ',' << format_sig9(e.value.real()) << ',' << format_sig9(e.value.imag())
        << ',' << label_name(e.label) << ',' << e.partner << ','
        << format_sig9(e.diagonal_deviation.real()) << ','
        << format_sig9(e.diagonal_deviation.imag()) << '\n';
  }
  return out.str();
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "T,mu,N,pairs10,state,re,im,label,error\n";
  for (const auto& point : sweep.points) {
    const std::string prefix = format_sig9(point.T) + "," + format_sig9(point.mu) + "," +
                               std::to_string(point.N);
    if (!point.result) {
      out << prefix << ",,,,," << point.error << '\n';
      continue;
    }
    const int pairs = point.result->pair_count_lowest(10);
    for (size_t i = 0; i < point.result->entries.size(); ++i) {
      const auto& e = point.result->entries[i];
      out << prefix << ',' << pairs << ',' << i << ',' << format_sig9(e.value.real())
          << ',' << format_sig9(e.value.imag()) << ',' << label_name(e.label) << ",\n";
    }
  }
  return out.str();
}

nlohmann::json spectrum_json(const ClassifiedSpectrum& spectrum) {
  nlohmann::json entries = nlohmann::json::array();
  for (size_t i = 0; i < spectrum.entries.size(); ++i) {
    const auto& e = spectrum.entries[i];
    entries.push_back({{"index", i},
                       {"re", e.value.real()},
                       {"im", e.value.imag()},
                       {"label", label_name(e.label)},
                       {"partner", e.partner},
                       {"eps_re", e.diagonal_deviation.real()},
                       {"eps_im", e.diagonal_deviation.imag()}});
  }
  return {{"entries", entries}, {"warnings", spectrum.warnings}};
}

nlohmann::json sweep_json(const SweepResult& sweep) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& point : sweep.points) {
    nlohmann::json record = {{"T", point.T}, {"mu", point.mu}, {"N", point.N}};
    if (point.result) {
      record["spectrum"] = spectrum_json(*point.result);
      record["pairs10"] = point.result->pair_count_lowest(10);
    } else {
      record["error"] = point.error;
    }
    points.push_back(std::move(record));
  }
  return {{"points", points}};
}

nlohmann::json with_meta(nlohmann::json config, nlohmann::json data) {
  config["version"] = "1.0.0";
  return {{"meta", std::move(config)}, {"data", std::move(data)}};
}

}  // namespace nhqm
