#ifndef NHQM_IO_HPP
#define NHQM_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "nhqm/confined.hpp"

namespace nhqm {

/// Fixed decimal formatting with 9 significant digits, matching the
/// precision of the published tables.
std::string format_sig9(double value);

/// columns: index, re, im, label, partner, eps_re, eps_im
std::string spectrum_csv(const ClassifiedSpectrum& spectrum);

/// long format: T, mu, N, pairs10, state, re, im, label (failed points
/// emit a single row with an error column)
std::string sweep_csv(const SweepResult& sweep);

nlohmann::json spectrum_json(const ClassifiedSpectrum& spectrum);
nlohmann::json sweep_json(const SweepResult& sweep);

/// Wraps payload as {"meta": {config echo, version}, "data": payload}.
nlohmann::json with_meta(nlohmann::json config, nlohmann::json data);

}  // namespace nhqm

#endif
