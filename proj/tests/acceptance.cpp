// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "cvconc/concurrence.hpp"
#include "cvconc/gaussian.hpp"
#include "cvconc/io.hpp"
#include "cvconc/spectral.hpp"
#include "cvconc/transpose.hpp"
#include "cvconc/wedge.hpp"
#include "cvconc/wigner.hpp"

namespace {

using namespace cvconc;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < time_limit_s;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d  %-34s %s; %.3f s (limit %.0f s)%s\n", ok ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs, time_limit_s, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel_err(double got, double want) {
  if (got == want) return 0.0;
  return std::abs(got - want) / std::abs(want);
}

// Reads the CSV produced for a sweep back into doubles.
std::vector<SweepRow> reparse(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    SweepRow r;
    char comma;
    std::istringstream ls(line);
    ls >> r.c >> comma >> r.e2 >> comma >> r.norm;
    rows.push_back(r);
  }
  return rows;
}

Outcome real_branch_sweep() {
  const auto cs = linspace(-1.999, 1.999, 4001);
  const auto rows = reparse(io::sweep_csv(sweep_concurrence(1, 1, CouplingBranch::kReal, cs)));
  std::vector<double> negated;
  for (double c : cs) negated.push_back(-c);
  const auto mirror = sweep_concurrence(1, 1, CouplingBranch::kReal, negated);
  double worst = 0;
  bool even = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double c = rows[i].c;
    const double e2 = 2.0 * (1.0 - std::sqrt(4.0 - c * c) / 2.0);
    const double n2 = std::pow(2.0 * std::numbers::pi / std::sqrt(4.0 - c * c), -0.5);
    worst = std::max({worst, rel_err(rows[i].e2, e2), rel_err(rows[i].norm, n2)});
    even = even && rows[i].e2 == mirror[i].e2;
  }
  const double mid = rows[rows.size() / 2].e2;
  const double edge = 2.0 - 1e-12;
  const double e_edge = closed_form_concurrence({1, 1, edge, CouplingBranch::kReal});
  const double n_edge = closed_form_normalization({1, 1, -edge, CouplingBranch::kReal});
  const bool pins = mid == 0.0 && even && e_edge > 2.0 - 1e-5 && n_edge < 2e-3;
  return {worst <= 1e-15 && pins,
          fmt("max rel err %.2e (tol 1e-15)", worst) + fmt(", E2(0)=%g", mid) +
              fmt(", E2(2-)=%.6f", e_edge) + fmt(", N(2-)=%.2e", n_edge) + (even ? ", even" : ", NOT even")};
}

Outcome imaginary_branch_sweep() {
  const auto ms = linspace(-10, 10, 401);
  const auto rows = reparse(io::sweep_csv(sweep_concurrence(1, 1, CouplingBranch::kImaginary, ms)));
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, rel_err(r.e2, 2.0 * (1.0 - 2.0 / std::sqrt(4.0 + r.c * r.c))));
  const double at10 = rows.back().e2, at_m10 = rows.front().e2;
  const bool pin = std::abs(at10 - 1.6078) < 5e-5 && at10 == at_m10;
  return {worst <= 1e-15 && pin, fmt("max rel err %.2e (tol 1e-15)", worst) + fmt(", E2(+-10)=%.6f", at10)};
}

Outcome grid_vs_closed_form() {
  const auto st = GaussianPureState::two_mode(1, 1, 1.0);
  const double exact = 2.0 - std::sqrt(3.0);
  const std::vector<GridAxis> box(2, GridAxis{-8.0, 8.0, 64});
  const auto mid = discretize(st, box);
  const double e_mid = concurrence_route_B(mid.state, Bipartition(2, {0}));
  const auto gh = discretize(st, hermite_rule_for(st, 64));
  const double e_gh = concurrence_route_B(gh.state, Bipartition(2, {0}));
  const double d_mid = std::abs(e_mid - exact), d_gh = std::abs(e_gh - exact);
  return {d_mid <= 2e-3 && d_gh <= 1e-6,
          fmt("midpoint |err| %.2e (tol 2e-3)", d_mid) + fmt(", Gauss-Hermite |err| %.2e (tol 1e-6)", d_gh)};
}

const Bipartition kFirst(2, {0});

const std::vector<GridState>& corpus() {
  static const auto c = testing::two_axis_corpus(20240601, 200);
  return c;
}

Outcome route_equivalence() {
  double worst = 0;
  for (const auto& s : corpus()) {
    const auto rep = concurrence_report(s, kFirst,
                                        {Route::kA, Route::kB, Route::kC, Route::kLambda, Route::kD, Route::kE});
    worst = std::max(worst, rep.max_pairwise_gap);
  }
  return {worst < 1e-10, fmt("max pairwise gap %.2e over 200 states, 6 routes (tol 1e-10)", worst)};
}

Outcome lagrange() {
  testing::Rng rng(77);
  std::uniform_int_distribution<int> len(2, 200);
  std::uniform_real_distribution<double> wd(0.05, 2.0);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = len(rng);
    const auto f = testing::random_complex(rng, n), g = testing::random_complex(rng, n);
    std::vector<double> w(n);
    for (auto& x : w) x = wd(rng);
    double ff = 0, gg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ff += std::norm(f[i]) * w[i];
      gg += std::norm(g[i]) * w[i];
    }
    worst = std::max(worst, std::abs(lagrange_identity_gap(f, g, w)) / (ff * gg));
  }
  return {worst < 1e-12, fmt("max relative gap %.2e over 1000 pairs (tol 1e-12)", worst)};
}

Outcome operator_identities() {
  double tr = 0, tr2 = 0, fac = 0;
  for (const auto& s : corpus()) {
    const auto pt = build_rho_pt(s, kFirst);
    tr = std::max(tr, std::abs(pt.trace() - 1.0));
    tr2 = std::max(tr2, std::abs(pt.matrix.cwiseProduct(pt.matrix.transpose()).sum() - 1.0));
    fac = std::max(fac, pt_square_factorization_gap(s, kFirst));
  }
  return {tr <= 1e-10 && tr2 <= 1e-10 && fac < 1e-10,
          fmt("|Tr PT - 1| %.2e", tr) + fmt(", |Tr PT^2 - 1| %.2e", tr2) + fmt(", factorization %.2e (tol 1e-10)", fac)};
}

Outcome ppt_equivalence() {
  int sep = 0, ent = 0, bad = 0;
  double worst_sep = 0, weakest_ent = -1;
  for (const auto& s : corpus()) {
    const double e2 = concurrence_route_B(s, kFirst);
    if (e2 >= 1e-10 && e2 <= 1e-3) continue;
    const double lmin = ppt_min_eigenvalue(s, kFirst);
    if (e2 < 1e-10) {
      ++sep;
      worst_sep = std::min(worst_sep, lmin);
      bad += lmin < -1e-8;
    } else {
      ++ent;
      weakest_ent = std::max(weakest_ent, lmin);
      bad += lmin >= -1e-6;
    }
  }
  // Timing pin for a single eigensolve at 24 points per axis.
  testing::Rng rng(5);
  const auto big = testing::random_state(rng, {24, 24});
  const auto t0 = Clock::now();
  ppt_min_eigenvalue(big, kFirst);
  const double t = std::chrono::duration<double>(Clock::now() - t0).count();
  return {bad == 0 && t < 60.0,
          std::to_string(sep) + " separable (min eig >= " + fmt("%.2e)", worst_sep) + ", " + std::to_string(ent) +
              " entangled (max min-eig " + fmt("%.2e)", weakest_ent) + fmt(", 24x24 eigensolve %.3f s", t)};
}

Outcome entropy_bound() {
  double worst = -1, sep_max = 0;
  for (const auto& s : corpus()) {
    const double e2 = concurrence_route_B(s, kFirst);
    const double S = von_neumann_entropy(reduce(s, kFirst));
    worst = std::max(worst, e2 / 2.0 - S);
    if (decide_separability(s, kFirst).verdict == Verdict::kSeparable) sep_max = std::max(sep_max, S);
  }
  const auto st = GaussianPureState::two_mode(1, 1, 1.0);
  const std::vector<GridAxis> box(2, GridAxis{-8.0, 8.0, 64});
  const double sg = von_neumann_entropy(reduce(discretize(st, box).state, kFirst));
  return {worst <= 1e-9 && sep_max < 1e-9 && sg > 0.13397,
          fmt("max(E2/2 - S) %.2e (tol 1e-9)", worst) + fmt(", separable max S %.2e", sep_max) +
              fmt(", Gaussian(1,1,1) S = %.5f > 0.13397", sg)};
}

Outcome hs_identity() {
  double worst = 0;
  for (const auto& s : corpus()) worst = std::max(worst, hs_identity_gap(s, kFirst));
  return {worst < 1e-10, fmt("max |D + 2P - 2| %.2e (tol 1e-10)", worst)};
}

Outcome wigner_checks() {
  const auto sep = GaussianPureState::two_mode(1, 1, 0.0);
  const auto ent = GaussianPureState::two_mode(1, 1, 1.0);
  double norm_err = 0;
  for (const auto* st : {&sep, &ent}) norm_err = std::max(norm_err, std::abs(wigner_normalization(*st, 24) - 1.0));
  testing::Rng rng(10);
  std::normal_distribution<double> g;
  std::vector<PhaseSpacePoint> pts(1000);
  for (auto& p : pts) {
    p.X = {g(rng), g(rng), g(rng), g(rng)};
    p.P = {g(rng), g(rng), g(rng), g(rng)};
  }
  const double gap0 = wigner_invariance_gap(sep, kFirst, pts);
  const double gap1 = wigner_invariance_gap(ent, kFirst, pts);
  const auto fm = wigner_fourth_moment(ent, kFirst, 24);
  const double d4 = std::abs(fm.concurrence - (2.0 - std::sqrt(3.0)));
  return {norm_err <= 1e-8 && gap0 < 1e-10 && gap1 > 1e-4 && d4 <= 1e-3,
          fmt("|int W - 1| %.1e", norm_err) + fmt(", gap(c=0) %.1e", gap0) + fmt(", gap(c=1) %.2e", gap1) +
              fmt(", phase-space E2 |err| %.1e (tol 1e-3)", d4)};
}

Outcome factorization() {
  testing::Rng rng(11);
  std::uniform_int_distribution<int> pts(3, 9);
  double worst = 0;
  int separable = 0;
  for (int t = 0; t < 20; ++t) {
    const bool three = t % 2;
    const std::vector<int> p = three ? std::vector<int>{pts(rng), pts(rng), pts(rng)}
                                     : std::vector<int>{pts(rng), pts(rng)};
    const Bipartition bip = three ? (t % 4 == 1 ? Bipartition(3, {0, 2}) : Bipartition(3, {1}))
                                  : Bipartition(2, {t % 4 == 0 ? 0u : 1u});
    const auto s = testing::random_product_state(rng, p, bip);
    const auto cert = decide_separability(s, bip);
    if (cert.verdict != Verdict::kSeparable) continue;
    ++separable;
    const auto back = tensor_product(cert.factors->m_state, cert.factors->rest_state, bip);
    for (std::size_t i = 0; i < s.size(); ++i)
      worst = std::max(worst, std::abs(back.amplitudes()[i] - s.amplitudes()[i]));
  }
  return {separable == 20 && worst < 1e-9,
          std::to_string(separable) + "/20 certified separable" + fmt(", max reconstruction error %.2e (tol 1e-9)", worst)};
}

}  // namespace

int main() {
  criterion(1, "real-branch closed form", 1, real_branch_sweep);
  criterion(2, "imaginary-branch closed form", 1, imaginary_branch_sweep);
  criterion(3, "grid vs closed form", 10, grid_vs_closed_form);
  criterion(4, "route equivalence", 120, route_equivalence);
  criterion(5, "Lagrange identity", 5, lagrange);
  criterion(6, "operator identities", 120, operator_identities);
  criterion(7, "PPT equivalence", 120, ppt_equivalence);
  criterion(8, "entropy bound", 120, entropy_bound);
  criterion(9, "Hilbert-Schmidt identity", 120, hs_identity);
  criterion(10, "Wigner checks", 60, wigner_checks);
  criterion(11, "separability factorization", 60, factorization);
  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
