#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "fef/bloch.hpp"
#include "fef/report.hpp"
#include "fef/states.hpp"

namespace fef {

/// Version tag written to and required in every JSON input/output file.
inline constexpr int kFileFormat = 1;

/// "%.17g": 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Matrix file:
///   {"format": 1, "dim": d, "matrix": [[[re, im], ...], ...]}
/// with d^2 rows of d^2 entries, row-major.
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& doc);

/// State file:
///   {"format": 1, "state": {"family": "isotropic", "d": 3, "theta": 0.5}}
/// Other keys by family: a, x, y, terms [[p, x], ...], r, s, p, q, rank, seed.
nlohmann::json state_spec_to_json(const StateSpec& spec);
StateSpec state_spec_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const BoundReport& report);

/// Reads a matrix file or a state file, telling them apart by the "matrix"
/// and "state" keys, and returns the validated state.
DensityMatrix load_state_file(const std::string& path);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fef
