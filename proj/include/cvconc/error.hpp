#pragma once

#include <stdexcept>
#include <string>

namespace cvconc {

/// Process exit codes shared by every CLI command.
enum class ExitCode : int {
  kOk = 0,
  kInput = 1,         // malformed input or unphysical parameters
  kStateValidity = 2, // state violates its own invariants (normalization)
  kVerification = 3,  // internal-consistency or identity check failed
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Bad arguments, shape mismatches, unphysical parameters.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what, ExitCode::kInput) {}
};

/// A state that fails its normalization or structural invariants.
class StateError : public Error {
 public:
  explicit StateError(const std::string& what) : Error(what, ExitCode::kStateValidity) {}
};

/// Non-finite values, eigensolver failures, out-of-range spectral quantities.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what, ExitCode::kVerification) {}
};

/// A degenerate state for which a requested construction does not exist.
class DegenerateStateError : public Error {
 public:
  explicit DegenerateStateError(const std::string& what) : Error(what, ExitCode::kStateValidity) {}
};

}  // namespace cvconc
