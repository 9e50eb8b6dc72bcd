#include "cvconc/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvconc/block.hpp"
#include "cvconc/error.hpp"
#include "cvconc/kernels.hpp"
#include "cvconc/spectral.hpp"
#include "cvconc/transpose.hpp"

namespace cvconc {

double concurrence_route_A(const GridState& state, const Bipartition& bipartition) {
  const auto s = split(state, bipartition);
  return kernels::wedge_quartic_sum(BlockView::of(s));
}

double concurrence_route_B(const GridState& state, const Bipartition& bipartition) {
  const auto s = split(state, bipartition);
  return 2.0 * (1.0 - kernels::overlap_purity(BlockView::of(s)));
}

double concurrence_route_Lambda(const GridState& state, const Bipartition& bipartition) {
  const auto s = split(state, bipartition);
  const LambdaPermutation perm(s);
  const cplx overlap =
      kernels::lambda_overlap(state.amplitudes().data(), state.weights().data(), perm);
  return 2.0 * (1.0 - overlap.real());
}

MeasureFunction MeasureFunction::power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InputError("power measure function needs a finite exponent > 0");
  return MeasureFunction(Kind::kPower, alpha);
}

MeasureFunction MeasureFunction::parse(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "two_x_squared") return two_x_squared();
  const std::string prefix = "power:";
  if (name.rfind(prefix, 0) == 0) {
    try {
      return power(std::stod(name.substr(prefix.size())));
    } catch (const std::logic_error&) {
      throw InputError("malformed power exponent in '" + name + "'");
    }
  }
  throw InputError("unknown measure function '" + name +
                   "' (expected identity, two_x_squared or power:<alpha>)");
}

double MeasureFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::kIdentity: return x;
    case Kind::kTwoXSquared: return 2.0 * x * x;
    case Kind::kPower: return std::pow(x, alpha_);
  }
  return x;
}

double family_measure(const GridState& state, const Bipartition& bipartition,
                      const MeasureFunction& f, PNorm p, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw InputError("family measure needs q > 0");
  const auto s = split(state, bipartition);
  std::vector<double> partial(s.rows, 0.0);
  const auto rows = static_cast<long long>(s.rows);
#pragma omp parallel for schedule(dynamic)
  for (long long yp = 0; yp < rows; ++yp) {
    const std::span<const cplx> a(s.amp.data() + yp * s.cols, s.cols);
    double acc = 0.0;
    for (std::size_t y = 0; y < s.rows; ++y) {
      const std::span<const cplx> b(s.amp.data() + y * s.cols, s.cols);
      const auto bv = wedge(a, b, s.col_w);
      acc += f(bivector_p_norm(bv, p)) * s.row_w[y];
    }
    partial[yp] = acc * s.row_w[yp];
  }
  const double total = pairwise_sum(std::span<const double>(partial));
  return std::pow(std::max(total, 0.0), 1.0 / q);
}

std::string to_string(Verdict v) { return v == Verdict::kSeparable ? "separable" : "entangled"; }

GridState tensor_product(const GridState& m_part, const GridState& rest_part,
                         const Bipartition& bipartition) {
  const auto members = bipartition.members();
  const auto rest = bipartition.complement();
  if (m_part.dims() != members.size() || rest_part.dims() != rest.size())
    throw InputError("factor dimensions do not match the bipartition");
  std::vector<AxisRule> axes(bipartition.n());
  for (std::size_t k = 0; k < members.size(); ++k) axes[members[k]] = m_part.rule().axis(k);
  for (std::size_t k = 0; k < rest.size(); ++k) axes[rest[k]] = rest_part.rule().axis(k);
  ProductRule rule(std::move(axes));
  std::vector<cplx> amps(rule.total_nodes());
  std::vector<std::size_t> mi(members.size()), ri(rest.size());
  for (std::size_t lin = 0; lin < amps.size(); ++lin) {
    const auto idx = rule.unravel(lin);
    for (std::size_t k = 0; k < members.size(); ++k) mi[k] = idx[members[k]];
    for (std::size_t k = 0; k < rest.size(); ++k) ri[k] = idx[rest[k]];
    amps[lin] = evaluate_grid(m_part, mi) * evaluate_grid(rest_part, ri);
  }
  return GridState::unchecked(std::move(rule), std::move(amps));
}

SeparabilityCertificate decide_separability(const GridState& state, const Bipartition& bipartition,
                                            double threshold) {
  const auto s = split(state, bipartition);

  std::vector<double> slice_norm(s.rows, 0.0);
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c) slice_norm[r] += std::norm(s.at(r, c)) * s.col_w[c];
  const auto ref_it = std::max_element(slice_norm.begin(), slice_norm.end());
  if (!(*ref_it > 0.0)) throw DegenerateStateError("every slice of the state vanishes");

  SeparabilityCertificate cert;
  cert.threshold = threshold;
  const auto best = kernels::max_wedge_coefficient(BlockView::of(s));
  if (best.weighted_sq > threshold) {
    cert.verdict = Verdict::kEntangled;
    cert.witness = EntanglementWitness{s.row_rule.coordinates(best.row_a),
                                       s.row_rule.coordinates(best.row_b),
                                       s.col_rule.coordinates(best.col_a),
                                       s.col_rule.coordinates(best.col_b), best.weighted_sq};
    return cert;
  }

  cert.verdict = Verdict::kSeparable;
  const std::size_t ref = static_cast<std::size_t>(ref_it - slice_norm.begin());
  const double ref_norm = std::sqrt(*ref_it);
  std::vector<cplx> m_amp(s.rows), rest_amp(s.cols);
  for (std::size_t r = 0; r < s.rows; ++r) {
    cplx overlap = 0.0;
    for (std::size_t c = 0; c < s.cols; ++c)
      overlap += std::conj(s.at(ref, c)) * s.at(r, c) * s.col_w[c];
    m_amp[r] = overlap / ref_norm;
  }
  for (std::size_t c = 0; c < s.cols; ++c) rest_amp[c] = s.at(ref, c) / ref_norm;

  auto m_state = GridState::normalized(s.row_rule, std::move(m_amp));
  auto rest_state = GridState::normalized(s.col_rule, std::move(rest_amp));
  double err = 0.0;
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c)
      err = std::max(err, std::abs(s.at(r, c) - m_state.amplitudes()[r] * rest_state.amplitudes()[c]));
  cert.factors = SeparableFactors{std::move(m_state), std::move(rest_state), err};
  return cert;
}

std::string to_string(Route r) {
  switch (r) {
    case Route::kA: return "A";
    case Route::kB: return "B";
    case Route::kC: return "C";
    case Route::kLambda: return "Lambda";
    case Route::kD: return "D";
    case Route::kE: return "E";
  }
  return "?";
}

Route parse_route(const std::string& name) {
  if (name == "A") return Route::kA;
  if (name == "B") return Route::kB;
  if (name == "C") return Route::kC;
  if (name == "L" || name == "Lambda") return Route::kLambda;
  if (name == "D") return Route::kD;
  if (name == "E") return Route::kE;
  throw InputError("unknown route '" + name + "' (expected A, B, C, Lambda, D or E)");
}

std::optional<double> ConcurrenceReport::value(Route r) const {
  for (const auto& rv : routes)
    if (rv.route == r) return rv.value;
  return std::nullopt;
}

std::vector<Route> default_routes() { return {Route::kA, Route::kB, Route::kC, Route::kLambda}; }

namespace {

double compute_route(Route r, const GridState& state, const Bipartition& bip) {
  switch (r) {
    case Route::kA: return concurrence_route_A(state, bip);
    case Route::kB: return concurrence_route_B(state, bip);
    case Route::kC: return concurrence_route_C(state, bip);
    case Route::kLambda: return concurrence_route_Lambda(state, bip);
    case Route::kD: return concurrence_route_D(state, bip);
    case Route::kE: return concurrence_route_E(state, bip);
  }
  throw InputError("unknown route");
}

}  // namespace

ConcurrenceReport concurrence_report(const GridState& state, const Bipartition& bipartition,
                                     const std::vector<Route>& routes, double threshold) {
  if (routes.empty()) throw InputError("at least one route must be requested");
  ConcurrenceReport report;
  report.threshold = threshold;
  for (auto r : routes) {
    const bool dup = std::any_of(report.routes.begin(), report.routes.end(),
                                 [r](const RouteValue& v) { return v.route == r; });
    if (!dup) report.routes.push_back({r, compute_route(r, state, bipartition)});
  }
  for (std::size_t i = 0; i < report.routes.size(); ++i)
    for (std::size_t j = i + 1; j < report.routes.size(); ++j)
      report.max_pairwise_gap = std::max(
          report.max_pairwise_gap, std::abs(report.routes[i].value - report.routes[j].value));
  const auto cert = decide_separability(state, bipartition, threshold);
  report.verdict = cert.verdict;
  report.witness = cert.witness;
  return report;
}

ConcurrenceReport concurrence_gaussian_numeric(const GaussianPureState& state,
                                               const Bipartition& bipartition,
                                               const ProductRule& rule, double threshold) {
  const auto d = discretize(state, rule);
  auto report = concurrence_report(d.state, bipartition, default_routes(), threshold);
  report.mass_defect = d.mass_defect;
  report.truncated = d.truncated;
  report.condition = d.condition;
  report.ill_conditioned = d.ill_conditioned;
  return report;
}

}  // namespace cvconc
