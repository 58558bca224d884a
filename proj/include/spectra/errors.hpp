#ifndef SPECTRA_ERRORS_HPP
#define SPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

// Bad arguments. `reason` is a stable machine-readable code (snake_case).
class InvalidInput : public std::invalid_argument {
 public:
  InvalidInput(std::string reason, const std::string& message)
      : std::invalid_argument(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

// A deduction reached a contradiction: some subspace was forced into a
// span of strictly smaller dimension. `trace` lists the rule applications
// that led there, oldest first.
class Inconsistent : public std::runtime_error {
 public:
  Inconsistent(const std::string& message, std::vector<std::string> trace)
      : std::runtime_error(message), trace_(std::move(trace)) {}

  const std::vector<std::string>& trace() const noexcept { return trace_; }

 private:
  std::vector<std::string> trace_;
};

}  // namespace spectra

#endif  // SPECTRA_ERRORS_HPP
