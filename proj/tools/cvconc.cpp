#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvconc/concurrence.hpp"
#include "cvconc/error.hpp"
#include "cvconc/gaussian.hpp"
#include "cvconc/io.hpp"
#include "cvconc/parallel.hpp"
#include "cvconc/verify.hpp"

namespace {

using namespace cvconc;
using io::json;

constexpr double kRouteDisagreement = 1e-6;

struct GridOptions {
  int points = 48;
  double box = 6.0;
  std::string rule = "midpoint";
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--grid", g.points, "points per axis when discretizing a Gaussian")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--box", g.box, "half-width of the midpoint box")->check(CLI::PositiveNumber);
  cmd->add_option("--rule", g.rule, "quadrature for Gaussian input")
      ->check(CLI::IsMember({"midpoint", "hermite"}));
}

struct Loaded {
  GridState state;
  std::optional<Discretization> source;  // set when the file held a Gaussian
};

Loaded load(const std::string& path, const GridOptions& g, bool check_norm) {
  auto any = io::read_state_file(path, check_norm);
  if (auto* grid = std::get_if<GridState>(&any)) return {std::move(*grid), std::nullopt};
  const auto& gauss = std::get<GaussianPureState>(any);
  ProductRule rule = g.rule == "hermite"
                         ? hermite_rule_for(gauss, g.points)
                         : midpoint_rule(std::vector<GridAxis>(gauss.dims(), GridAxis{-g.box, g.box, g.points}));
  Discretization d = discretize(gauss, rule);
  GridState s = d.state;
  return {std::move(s), std::move(d)};
}

Bipartition parse_bipartition(const GridState& s, const std::string& spec) {
  return Bipartition(s.dims(), io::parse_index_list(spec));
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_gaussian(double a, double b, double c, const std::string& branch) {
  TwoModeGaussianSpec spec{a, b, c, parse_branch(branch)};
  spec.validate();
  const auto sep = gaussian_separability(spec.state().precision(), Bipartition(2, {0}));
  print({{"a", a},
         {"b", b},
         {"c", c},
         {"branch", to_string(spec.branch)},
         {"E2", closed_form_concurrence(spec)},
         {"norm", closed_form_normalization(spec)},
         {"verdict", to_string(sep.verdict)}});
  return 0;
}

int cmd_sweep(double a, double b, const std::string& branch, double cmin, double cmax, int steps,
              const std::string& out) {
  const CouplingBranch br = parse_branch(branch);
  const auto cs = linspace(cmin, cmax, steps);
  for (double c : cs) TwoModeGaussianSpec{a, b, c, br}.validate();
  const std::string csv = io::sweep_csv(sweep_concurrence(a, b, br, cs));
  if (out.empty() || out == "-")
    std::cout << csv;
  else
    io::write_text_file(out, csv);
  return 0;
}

std::vector<Route> parse_routes(const std::string& text) {
  std::vector<Route> routes;
  std::string item;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!item.empty()) routes.push_back(parse_route(item));
      item.clear();
    } else {
      item += ch;
    }
  }
  if (routes.empty()) throw InputError("no routes requested");
  return routes;
}

int cmd_concurrence(const std::string& path, const std::string& m, const std::string& routes,
                    const GridOptions& g, double threshold) {
  const Loaded in = load(path, g, true);
  const Bipartition bip = parse_bipartition(in.state, m);
  ConcurrenceReport report = concurrence_report(in.state, bip, parse_routes(routes), threshold);
  if (in.source) {
    report.mass_defect = in.source->mass_defect;
    report.truncated = in.source->truncated;
    report.condition = in.source->condition;
    report.ill_conditioned = in.source->ill_conditioned;
  }
  print(io::to_json(report));
  if (report.truncated) std::cerr << "warning: grid truncates the Gaussian (mass defect "
                                  << *report.mass_defect << ")\n";
  if (report.ill_conditioned) std::cerr << "warning: Re(A) is ill-conditioned\n";
  if (report.max_pairwise_gap > kRouteDisagreement) {
    std::cerr << "error: routes disagree by " << report.max_pairwise_gap << '\n';
    return static_cast<int>(ExitCode::kVerification);
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& m, const GridOptions& g) {
  const Loaded in = load(path, g, false);
  const Bipartition bip = parse_bipartition(in.state, m);
  const VerificationReport report = verify_state(in.state, bip);
  print(io::to_json(report));
  return static_cast<int>(report.exit_code());
}

int cmd_factor(const std::string& path, const std::string& m, const std::string& out_m,
               const std::string& out_rest, const GridOptions& g, double threshold) {
  const Loaded in = load(path, g, true);
  const Bipartition bip = parse_bipartition(in.state, m);
  const auto cert = decide_separability(in.state, bip, threshold);
  if (cert.verdict == Verdict::kEntangled) {
    std::cerr << "error: state is entangled across the bipartition; witness:\n"
              << io::to_json(*cert.witness).dump(2) << '\n';
    return static_cast<int>(ExitCode::kInput);
  }
  io::write_json_file(out_m, io::to_json(cert.factors->m_state));
  io::write_json_file(out_rest, io::to_json(cert.factors->rest_state));
  print({{"verdict", to_string(cert.verdict)},
         {"reconstruction_error", cert.factors->reconstruction_error},
         {"m_file", out_m},
         {"rest_file", out_rest}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized concurrence of pure continuous-variable states"};
  app.require_subcommand(1);

  double a = 1.0, b = 1.0, c = 0.0;
  std::string branch = "real";
  auto* gaussian = app.add_subcommand("gaussian", "closed-form E2 and normalization of a two-mode Gaussian");
  gaussian->add_option("--a", a);
  gaussian->add_option("--b", b);
  gaussian->add_option("--c", c, "coupling c (real branch) or m (imaginary branch, c = i m)");
  gaussian->add_option("--branch", branch)->check(CLI::IsMember({"real", "imag"}));

  double cmin = -1.99, cmax = 1.99;
  int steps = 399;
  std::string out;
  auto* sweep = app.add_subcommand("sweep", "closed-form sweep over the coupling, written as CSV");
  sweep->add_option("--a", a);
  sweep->add_option("--b", b);
  sweep->add_option("--branch", branch)->check(CLI::IsMember({"real", "imag"}));
  sweep->add_option("--c-min", cmin);
  sweep->add_option("--c-max", cmax);
  sweep->add_option("--steps", steps);
  sweep->add_option("--out", out, "output path (default: standard output)");

  std::string path, m = "0", routes = "A,B,C,L", out_m, out_rest;
  double threshold = kDefaultSeparabilityThreshold;
  GridOptions grid;

  auto* conc = app.add_subcommand("concurrence", "E2 of a state file by several routes");
  conc->add_option("state", path, "GridState or Gaussian JSON file")->required();
  conc->add_option("--M", m, "comma-separated axis indices of the subsystem");
  conc->add_option("--routes", routes, "subset of A,B,C,L,D,E");
  conc->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
  add_grid_options(conc, grid);

  auto* verify = app.add_subcommand("verify", "run every identity check on a state file");
  verify->add_option("state", path)->required();
  verify->add_option("--M", m);
  add_grid_options(verify, grid);

  auto* factor = app.add_subcommand("factor", "split a separable state into its two factors");
  factor->add_option("state", path)->required();
  factor->add_option("--M", m);
  factor->add_option("--out-m", out_m)->required();
  factor->add_option("--out-rest", out_rest)->required();
  factor->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
  add_grid_options(factor, grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kInput);
  }

  try {
    apply_thread_environment();
    if (*gaussian) return cmd_gaussian(a, b, c, branch);
    if (*sweep) return cmd_sweep(a, b, branch, cmin, cmax, steps, out);
    if (*conc) return cmd_concurrence(path, m, routes, grid, threshold);
    if (*verify) return cmd_verify(path, m, grid);
    if (*factor) return cmd_factor(path, m, out_m, out_rest, grid, threshold);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInput);
  }
  return 0;
}
