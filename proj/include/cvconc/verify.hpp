#pragma once

#include <string>
#include <vector>

#include "cvconc/concurrence.hpp"
#include "cvconc/error.hpp"
#include "cvconc/state.hpp"

namespace cvconc {

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<std::string> skipped;  // checks not run, with the reason
  double e2 = 0.0;
  Verdict verdict = Verdict::kEntangled;

  bool passed() const;
  /// kStateValidity when normalization failed, kVerification on any other
  /// failure, kOk otherwise.
  ExitCode exit_code() const;
};

/// Runs every identity check on one state. A state that fails the
/// normalization check gets a report holding only that check.
VerificationReport verify_state(const GridState& state, const Bipartition& bipartition,
                                double threshold = kDefaultSeparabilityThreshold);

}  // namespace cvconc
