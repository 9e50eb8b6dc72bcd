#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "cvconc/concurrence.hpp"
#include "cvconc/gaussian.hpp"
#include "cvconc/state.hpp"
#include "cvconc/verify.hpp"

namespace cvconc::io {

using json = nlohmann::json;

/// {"axes":[{"min","max","points"}...],"amplitudes_real":[...],"amplitudes_imag":[...]}.
/// Non-uniform axes are written as {"nodes":[...],"weights":[...]}.
json to_json(const GridState& state);
/// With `check_norm` false the normalization invariant is not enforced.
GridState grid_state_from_json(const json& j, bool check_norm = true);

/// {"n":..,"A_real":[[...]],"A_imag":[[...]]}.
json to_json(const GaussianPureState& state);
GaussianPureState gaussian_from_json(const json& j);

using AnyState = std::variant<GridState, GaussianPureState>;

/// Dispatches on the presence of "axes" (grid) or "A_real" (Gaussian).
AnyState state_from_json(const json& j, bool check_norm = true);
AnyState read_state_file(const std::filesystem::path& path, bool check_norm = true);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// 17 significant digits (%.17g); reads back as the identical double.
std::string format_double(double v);

/// "c,E2,norm" header then one row per entry; unphysical rows print nan.
std::string sweep_csv(const std::vector<SweepRow>& rows);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Comma-separated zero-based axis indices, e.g. "0,2".
std::vector<std::size_t> parse_index_list(const std::string& text);

json to_json(const ConcurrenceReport& report);
json to_json(const EntanglementWitness& witness);
json to_json(const VerificationReport& report);

}  // namespace cvconc::io
