#include "cvconc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cvconc/error.hpp"

namespace cvconc::io {

namespace {

std::vector<double> as_doubles(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const GridState& state) {
  json axes = json::array();
  for (const auto& a : state.rule().axes()) {
    if (a.uniform)
      axes.push_back({{"min", a.uniform->min}, {"max", a.uniform->max}, {"points", a.uniform->points}});
    else
      axes.push_back({{"nodes", a.nodes}, {"weights", a.weights}});
  }
  std::vector<double> re, im;
  re.reserve(state.size());
  im.reserve(state.size());
  for (const auto& v : state.amplitudes()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {{"axes", axes}, {"amplitudes_real", re}, {"amplitudes_imag", im}};
}

GridState grid_state_from_json(const json& j, bool check_norm) {
  const auto& axes_j = require(j, "axes");
  if (!axes_j.is_array() || axes_j.empty()) throw InputError("'axes' must be a non-empty array");
  std::vector<AxisRule> axes;
  for (const auto& a : axes_j) {
    if (a.contains("nodes")) {
      AxisRule r;
      r.nodes = as_doubles(a.at("nodes"), "axis nodes");
      r.weights = as_doubles(require(a, "weights"), "axis weights");
      axes.push_back(std::move(r));
    } else {
      GridAxis g;
      try {
        g.min = require(a, "min").get<double>();
        g.max = require(a, "max").get<double>();
        g.points = require(a, "points").get<int>();
      } catch (const json::exception& e) {
        throw InputError(std::string("malformed axis: ") + e.what());
      }
      axes.push_back(AxisRule::midpoint(g));
    }
  }
  const auto re = as_doubles(require(j, "amplitudes_real"), "amplitudes_real");
  const auto im = as_doubles(require(j, "amplitudes_imag"), "amplitudes_imag");
  if (re.size() != im.size()) throw InputError("real and imaginary amplitude arrays differ in length");
  std::vector<cplx> amps(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) amps[i] = {re[i], im[i]};
  ProductRule rule(std::move(axes));
  if (check_norm) return GridState(std::move(rule), std::move(amps));
  return GridState::unchecked(std::move(rule), std::move(amps));
}

json to_json(const GaussianPureState& state) {
  const auto& A = state.precision();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json rr = json::array(), ii = json::array();
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
      rr.push_back(A(i, k).real());
      ii.push_back(A(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"n", state.dims()}, {"A_real", re}, {"A_imag", im}};
}

GaussianPureState gaussian_from_json(const json& j) {
  int n = 0;
  try {
    n = require(j, "n").get<int>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed 'n': ") + e.what());
  }
  if (n < 1) throw InputError("'n' must be positive");
  const auto& re = require(j, "A_real");
  const json im = j.contains("A_imag") ? j.at("A_imag") : json();
  if (!re.is_array() || static_cast<int>(re.size()) != n)
    throw InputError("'A_real' must be an n x n array");
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    const auto row = as_doubles(re.at(r), "A_real row");
    if (static_cast<int>(row.size()) != n) throw InputError("'A_real' must be an n x n array");
    for (int c = 0; c < n; ++c) A(r, c).real(row[c]);
  }
  if (!im.is_null()) {
    if (!im.is_array() || static_cast<int>(im.size()) != n)
      throw InputError("'A_imag' must be an n x n array");
    for (int r = 0; r < n; ++r) {
      const auto row = as_doubles(im.at(r), "A_imag row");
      if (static_cast<int>(row.size()) != n) throw InputError("'A_imag' must be an n x n array");
      for (int c = 0; c < n; ++c) A(r, c).imag(row[c]);
    }
  }
  return GaussianPureState(A);
}

AnyState state_from_json(const json& j, bool check_norm) {
  if (j.is_object() && j.contains("axes")) return grid_state_from_json(j, check_norm);
  if (j.is_object() && j.contains("A_real")) return gaussian_from_json(j);
  throw InputError("state file is neither a grid state (axes) nor a Gaussian (A_real)");
}

AnyState read_state_file(const std::filesystem::path& path, bool check_norm) {
  return state_from_json(read_json_file(path), check_norm);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("cannot parse '" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump() + "\n");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "c,E2,norm\n";
  for (const auto& r : rows) {
    out += format_double(r.c);
    out += ',';
    out += format_double(r.e2);
    out += ',';
    out += format_double(r.norm);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bipartition must be comma-separated non-negative integers, got '" + text + "'");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw InputError("bipartition list is empty");
  return out;
}

json to_json(const EntanglementWitness& w) {
  return {{"y_first", w.y_first},
          {"y_second", w.y_second},
          {"x_first", w.x_first},
          {"x_second", w.x_second},
          {"weighted_coefficient_sq", w.weighted_sq}};
}

json to_json(const ConcurrenceReport& report) {
  json routes = json::object();
  for (const auto& rv : report.routes) routes[to_string(rv.route)] = rv.value;
  json j = {{"routes", routes},
            {"E2", report.routes.front().value},
            {"max_pairwise_gap", report.max_pairwise_gap},
            {"verdict", to_string(report.verdict)},
            {"threshold", report.threshold}};
  if (report.witness) j["witness"] = to_json(*report.witness);
  if (report.mass_defect) {
    j["diagnostics"] = {{"mass_defect", *report.mass_defect},
                        {"truncated", report.truncated},
                        {"condition", *report.condition},
                        {"ill_conditioned", report.ill_conditioned}};
  }
  return j;
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  json j = {{"status", report.passed() ? "pass" : "fail"}, {"checks", checks},
            {"skipped", report.skipped}};
  if (report.checks.size() > 1) {
    j["E2"] = report.e2;
    j["verdict"] = to_string(report.verdict);
  }
  return j;
}

}  // namespace cvconc::io
