#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvconc/state.hpp"
#include "cvconc/wedge.hpp"

namespace cvconc {

/// E^2 as the full quadruple sum of squared wedge coefficients.
double concurrence_route_A(const GridState& state, const Bipartition& bipartition);
/// E^2 = 2 [1 - sum |K(y', y)|^2] with K the slice-overlap kernel.
double concurrence_route_B(const GridState& state, const Bipartition& bipartition);
/// E^2 = 2 [1 - Re <Phi, Phi o Lambda>] on the doubled grid.
double concurrence_route_Lambda(const GridState& state, const Bipartition& bipartition);

/// f in the measure family. Only presets with f(0) = 0 and f strictly
/// increasing on [0, inf) are representable.
class MeasureFunction {
 public:
  enum class Kind { kIdentity, kTwoXSquared, kPower };

  static MeasureFunction identity() { return MeasureFunction(Kind::kIdentity, 1.0); }
  static MeasureFunction two_x_squared() { return MeasureFunction(Kind::kTwoXSquared, 2.0); }
  /// x^alpha, alpha > 0.
  static MeasureFunction power(double alpha);
  /// "identity", "two_x_squared", or "power:<alpha>".
  static MeasureFunction parse(const std::string& name);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double operator()(double x) const;

 private:
  MeasureFunction(Kind k, double a) : kind_(k), alpha_(a) {}
  Kind kind_;
  double alpha_;
};

/// [ sum_{y, y'} f(|slice_y' ^ slice_y|_p) w_y w_y' ]^(1/q).
double family_measure(const GridState& state, const Bipartition& bipartition,
                      const MeasureFunction& f, PNorm p, double q);

enum class Verdict { kSeparable, kEntangled };
std::string to_string(Verdict v);

struct EntanglementWitness {
  std::vector<double> y_first, y_second;  // M-block coordinates of the slice pair
  std::vector<double> x_first, x_second;  // complement coordinates of the basis pair
  double weighted_sq = 0.0;               // |coefficient|^2 times the four weights
};

struct SeparableFactors {
  GridState m_state;     // axes of M, in increasing axis order
  GridState rest_state;  // axes of the complement
  double reconstruction_error = 0.0;  // max |phi - phi_M (x) phi_Mbar|
};

struct SeparabilityCertificate {
  Verdict verdict = Verdict::kEntangled;
  double threshold = 0.0;
  std::optional<EntanglementWitness> witness;
  std::optional<SeparableFactors> factors;
};

inline constexpr double kDefaultSeparabilityThreshold = 1e-8;

/// Separable when every weighted squared wedge coefficient is <= threshold;
/// then factors are built from the slice of largest norm. Throws
/// DegenerateStateError when every slice vanishes.
SeparabilityCertificate decide_separability(const GridState& state, const Bipartition& bipartition,
                                            double threshold = kDefaultSeparabilityThreshold);

/// Inverse of factoring: interleaves the axes of the two parts back into the
/// order given by the bipartition.
GridState tensor_product(const GridState& m_part, const GridState& rest_part,
                         const Bipartition& bipartition);

enum class Route { kA, kB, kC, kLambda, kD, kE };
std::string to_string(Route r);
Route parse_route(const std::string& name);

struct RouteValue {
  Route route;
  double value;
};

struct ConcurrenceReport {
  std::vector<RouteValue> routes;
  double max_pairwise_gap = 0.0;
  Verdict verdict = Verdict::kEntangled;
  double threshold = kDefaultSeparabilityThreshold;
  std::optional<EntanglementWitness> witness;

  // Present when the state came from a discretized Gaussian.
  std::optional<double> mass_defect;
  bool truncated = false;
  std::optional<double> condition;
  bool ill_conditioned = false;

  std::optional<double> value(Route r) const;
};

/// Routes A, B, C and Lambda.
std::vector<Route> default_routes();

ConcurrenceReport concurrence_report(const GridState& state, const Bipartition& bipartition,
                                     const std::vector<Route>& routes = default_routes(),
                                     double threshold = kDefaultSeparabilityThreshold);

/// Discretize on `rule`, then every default route plus diagnostics.
ConcurrenceReport concurrence_gaussian_numeric(const GaussianPureState& state,
                                               const Bipartition& bipartition,
                                               const ProductRule& rule,
                                               double threshold = kDefaultSeparabilityThreshold);

}  // namespace cvconc
