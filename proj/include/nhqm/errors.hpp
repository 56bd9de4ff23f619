#ifndef NHQM_ERRORS_HPP
#define NHQM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nhqm {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ParityError : std::logic_error {
  explicit ParityError(const std::string& what) : std::logic_error(what) {}
};

struct ExceptionalInput : std::invalid_argument {
  explicit ExceptionalInput(const std::string& what) : std::invalid_argument(what) {}
};

struct OverflowGuard : std::runtime_error {
  explicit OverflowGuard(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nhqm

#endif
