#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvconc/concurrence.hpp"
#include "cvconc/state.hpp"

namespace cvconc {

/// Which of the two closed-form families a two-mode Gaussian belongs to.
enum class CouplingBranch { kReal, kImaginary };
std::string to_string(CouplingBranch b);
CouplingBranch parse_branch(const std::string& name);

/// psi = N exp(-(a x1^2 + b x2^2 + c x1 x2)/2) with c real (branch kReal) or
/// c = i m (branch kImaginary). `coupling` holds c or m respectively.
struct TwoModeGaussianSpec {
  double a = 1.0;
  double b = 1.0;
  double coupling = 0.0;
  CouplingBranch branch = CouplingBranch::kReal;

  cplx c() const { return branch == CouplingBranch::kReal ? cplx(coupling, 0.0) : cplx(0.0, coupling); }
  /// True when the wavefunction is normalizable (|c| < 2 sqrt(ab) on the real branch).
  bool physical() const;
  /// Throws InputError for a, b <= 0 or a non-normalizable real coupling.
  void validate() const;

  /// Classifies a complex c; mixed-phase couplings are rejected.
  static TwoModeGaussianSpec from_complex(double a, double b, cplx c);
  GaussianPureState state() const;
};

/// Real branch: 2 [1 - sqrt(4ab - c^2) / (2 sqrt(ab))].
/// Imaginary branch: 2 [1 - 2 sqrt(ab) / sqrt(4ab + m^2)].
double closed_form_concurrence(const TwoModeGaussianSpec& spec);

/// Real branch: [2 pi / sqrt(4ab - c^2)]^(-1/2); imaginary: [pi / sqrt(ab)]^(-1/2).
double closed_form_normalization(const TwoModeGaussianSpec& spec);

struct CrossBlockWitness {
  std::size_t row = 0;  // member of M
  std::size_t col = 0;  // member of the complement
  double magnitude = 0.0;
};

struct GaussianSeparability {
  Verdict verdict = Verdict::kSeparable;
  std::optional<CrossBlockWitness> witness;
};

inline constexpr double kCrossBlockTolerance = 1e-12;

/// Separable iff every precision-matrix entry coupling M to its complement
/// has magnitude <= 1e-12.
GaussianSeparability gaussian_separability(const Eigen::MatrixXcd& precision,
                                           const Bipartition& bipartition);

struct SweepRow {
  double c = 0.0;
  double e2 = 0.0;    // NaN when unphysical
  double norm = 0.0;  // NaN when unphysical
  bool physical = true;
};

std::vector<SweepRow> sweep_concurrence(double a, double b, CouplingBranch branch,
                                        std::span<const double> c_values);

/// `steps` evenly spaced values from c_min to c_max inclusive; steps == 1
/// yields just c_min.
std::vector<double> linspace(double c_min, double c_max, int steps);

}  // namespace cvconc
