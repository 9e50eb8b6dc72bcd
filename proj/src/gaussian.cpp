#include "cvconc/gaussian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cvconc/error.hpp"

namespace cvconc {

std::string to_string(CouplingBranch b) { return b == CouplingBranch::kReal ? "real" : "imag"; }

CouplingBranch parse_branch(const std::string& name) {
  if (name == "real") return CouplingBranch::kReal;
  if (name == "imag" || name == "imaginary") return CouplingBranch::kImaginary;
  throw InputError("unknown branch '" + name + "' (expected real or imag)");
}

bool TwoModeGaussianSpec::physical() const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(coupling)) return false;
  if (branch == CouplingBranch::kReal) return std::abs(coupling) < 2.0 * std::sqrt(a * b);
  return true;
}

void TwoModeGaussianSpec::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) throw InputError("two-mode Gaussian needs a > 0 and b > 0");
  if (!std::isfinite(coupling)) throw InputError("coupling must be finite");
  if (!physical()) {
    std::ostringstream os;
    os << "non-normalizable state: real coupling requires |c| < 2 sqrt(ab) = "
       << 2.0 * std::sqrt(a * b) << ", got c = " << coupling;
    throw InputError(os.str());
  }
}

TwoModeGaussianSpec TwoModeGaussianSpec::from_complex(double a, double b, cplx c) {
  TwoModeGaussianSpec spec{a, b, 0.0, CouplingBranch::kReal};
  if (c.imag() == 0.0) {
    spec.coupling = c.real();
  } else if (c.real() == 0.0) {
    spec.branch = CouplingBranch::kImaginary;
    spec.coupling = c.imag();
  } else {
    throw InputError("closed forms cover purely real or purely imaginary c only");
  }
  spec.validate();
  return spec;
}

GaussianPureState TwoModeGaussianSpec::state() const {
  validate();
  return GaussianPureState::two_mode(a, b, c());
}

double closed_form_concurrence(const TwoModeGaussianSpec& spec) {
  spec.validate();
  const double a = spec.a, b = spec.b;
  if (spec.branch == CouplingBranch::kReal) {
    const double c = spec.coupling;
    return 2.0 * (1.0 - std::sqrt(4.0 * a * b - c * c) / (2.0 * std::sqrt(a * b)));
  }
  const double m = spec.coupling;
  return 2.0 * (1.0 - 2.0 * std::sqrt(a * b) / std::sqrt(4.0 * a * b + m * m));
}

double closed_form_normalization(const TwoModeGaussianSpec& spec) {
  spec.validate();
  const double a = spec.a, b = spec.b;
  if (spec.branch == CouplingBranch::kReal) {
    const double c = spec.coupling;
    return std::pow(2.0 * std::numbers::pi / std::sqrt(4.0 * a * b - c * c), -0.5);
  }
  return std::pow(std::numbers::pi / std::sqrt(a * b), -0.5);
}

GaussianSeparability gaussian_separability(const Eigen::MatrixXcd& precision,
                                           const Bipartition& bipartition) {
  // Validates symmetry and positive-definiteness of the real part.
  const GaussianPureState state(precision);
  if (bipartition.n() != state.dims())
    throw InputError("bipartition size does not match the precision matrix");
  GaussianSeparability out;
  const auto rest = bipartition.complement();
  for (auto k : bipartition.members())
    for (auto j : rest) {
      const double mag = std::max(std::abs(precision(k, j)), std::abs(precision(j, k)));
      if (mag > kCrossBlockTolerance && (!out.witness || mag > out.witness->magnitude))
        out.witness = CrossBlockWitness{k, j, mag};
    }
  out.verdict = out.witness ? Verdict::kEntangled : Verdict::kSeparable;
  return out;
}

std::vector<SweepRow> sweep_concurrence(double a, double b, CouplingBranch branch,
                                        std::span<const double> c_values) {
  std::vector<SweepRow> rows;
  rows.reserve(c_values.size());
  for (double c : c_values) {
    const TwoModeGaussianSpec spec{a, b, c, branch};
    SweepRow row{c};
    if (spec.physical()) {
      row.e2 = closed_form_concurrence(spec);
      row.norm = closed_form_normalization(spec);
    } else {
      row.physical = false;
      row.e2 = std::numeric_limits<double>::quiet_NaN();
      row.norm = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> linspace(double c_min, double c_max, int steps) {
  if (steps < 1) throw InputError("sweep needs at least one step");
  if (!std::isfinite(c_min) || !std::isfinite(c_max)) throw InputError("sweep range must be finite");
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = c_min;
    return out;
  }
  const double h = (c_max - c_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[i] = c_min + i * h;
  out.back() = c_max;
  return out;
}

}  // namespace cvconc
