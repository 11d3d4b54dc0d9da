#include "fef/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fef/error.hpp"

namespace fef {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where, "expected a number");
  return j.get<double>();
}

void check_format(const json& doc) {
  if (!doc.is_object()) parse_fail("/", "expected a JSON object");
  if (!doc.contains("format")) parse_fail("/format", "missing format field");
  const json& f = doc.at("format");
  if (!f.is_number_integer() || f.get<int>() != kFileFormat) {
    parse_fail("/format", "unsupported format, expected " + std::to_string(kFileFormat));
  }
}

RVector vector_at(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of numbers");
  RVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = number_at(j[i], where + "/" + std::to_string(i));
  }
  return v;
}

std::vector<double> std_vector_at(const json& j, const std::string& where) {
  const RVector v = vector_at(j, where);
  return {v.data(), v.data() + v.size()};
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_to_json(const CMatrix& m) {
  const int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return {{"format", kFileFormat}, {"dim", d}, {"matrix", std::move(rows)}};
}

CMatrix matrix_from_json(const json& doc) {
  check_format(doc);
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) {
    parse_fail("/dim", "missing or non-integer dimension");
  }
  const int d = doc.at("dim").get<int>();
  if (d < 2) parse_fail("/dim", "dimension must be >= 2");
  if (!doc.contains("matrix") || !doc.at("matrix").is_array()) {
    parse_fail("/matrix", "missing matrix array");
  }
  const json& rows = doc.at("matrix");
  const std::size_t side = static_cast<std::size_t>(d) * d;
  if (rows.size() != side) {
    parse_fail("/matrix", "expected " + std::to_string(side) + " rows, got " +
                              std::to_string(rows.size()));
  }
  CMatrix m(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    const std::string row_where = "/matrix/" + std::to_string(r);
    const json& row = rows[r];
    if (!row.is_array() || row.size() != side) {
      parse_fail(row_where, "expected " + std::to_string(side) + " entries");
    }
    for (std::size_t c = 0; c < side; ++c) {
      const std::string where = row_where + "/" + std::to_string(c);
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2) parse_fail(where, "expected [re, im]");
      m(r, c) = Complex(number_at(entry[0], where + "/0"), number_at(entry[1], where + "/1"));
    }
  }
  return m;
}

json state_spec_to_json(const StateSpec& spec) {
  json state = {{"family", to_string(spec.family)}};
  switch (spec.family) {
    case Family::MaxEntangled: state["d"] = spec.dim; break;
    case Family::Isotropic:
      state["d"] = spec.dim;
      state["theta"] = spec.theta;
      break;
    case Family::Example1: state["a"] = spec.a; break;
    case Family::Example2:
    case Family::PhiX: state["x"] = spec.x; break;
    case Family::Rho3: state["y"] = spec.y; break;
    case Family::PhiMixture: {
      json terms = json::array();
      for (const auto& t : spec.terms) terms.push_back({t.weight, t.x});
      state["terms"] = std::move(terms);
      break;
    }
    case Family::RhoZero:
      state["d"] = spec.dim;
      state["r"] = std::vector<double>(spec.r.data(), spec.r.data() + spec.r.size());
      state["s"] = std::vector<double>(spec.s.data(), spec.s.data() + spec.s.size());
      break;
    case Family::ProductDiag:
      state["p"] = spec.p;
      state["q"] = spec.q;
      break;
    case Family::RandomDensity:
      state["d"] = spec.dim;
      state["rank"] = spec.rank;
      state["seed"] = spec.seed;
      break;
  }
  return {{"format", kFileFormat}, {"state", std::move(state)}};
}

StateSpec state_spec_from_json(const json& doc) {
  check_format(doc);
  if (!doc.contains("state") || !doc.at("state").is_object()) {
    parse_fail("/state", "missing state object");
  }
  const json& st = doc.at("state");
  if (!st.contains("family") || !st.at("family").is_string()) {
    parse_fail("/state/family", "missing family name");
  }
  StateSpec spec;
  spec.family = parse_family(st.at("family").get<std::string>());
  auto num = [&](const char* key, double& out) {
    if (st.contains(key)) out = number_at(st.at(key), std::string("/state/") + key);
  };
  if (st.contains("d")) {
    if (!st.at("d").is_number_integer()) parse_fail("/state/d", "expected an integer");
    spec.dim = st.at("d").get<int>();
  }
  num("theta", spec.theta);
  num("a", spec.a);
  num("x", spec.x);
  num("y", spec.y);
  if (st.contains("terms")) {
    const json& terms = st.at("terms");
    if (!terms.is_array()) parse_fail("/state/terms", "expected an array of [p, x] pairs");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string where = "/state/terms/" + std::to_string(k);
      if (!terms[k].is_array() || terms[k].size() != 2) parse_fail(where, "expected [p, x]");
      spec.terms.push_back({number_at(terms[k][0], where + "/0"), number_at(terms[k][1], where + "/1")});
    }
  }
  if (st.contains("r")) spec.r = vector_at(st.at("r"), "/state/r");
  if (st.contains("s")) spec.s = vector_at(st.at("s"), "/state/s");
  if (st.contains("p")) spec.p = std_vector_at(st.at("p"), "/state/p");
  if (st.contains("q")) spec.q = std_vector_at(st.at("q"), "/state/q");
  if (st.contains("rank")) {
    if (!st.at("rank").is_number_integer()) parse_fail("/state/rank", "expected an integer");
    spec.rank = st.at("rank").get<int>();
  }
  if (st.contains("seed")) {
    if (!st.at("seed").is_number_unsigned()) parse_fail("/state/seed", "expected an unsigned integer");
    spec.seed = st.at("seed").get<std::uint64_t>();
  }
  return spec;
}

json report_to_json(const BoundReport& rep) {
  json out = {
      {"format", kFileFormat},
      {"dim", rep.dim},
      {"singlet_fraction", rep.singlet_fraction},
      {"thm1_bound", rep.thm1_bound},
      {"thm1_terms",
       {{"t1", rep.thm1_terms.t1},
        {"t2", rep.thm1_terms.t2},
        {"t3", rep.thm1_terms.t3},
        {"t4", rep.thm1_terms.t4}}},
      {"cor1_bound", rep.cor1_bound},
      {"prior_bound", rep.prior_bound},
      {"exact_thm3", optional_number(rep.exact_thm3)},
      {"two_qubit_exact", optional_number(rep.two_qubit_exact)},
      {"two_qubit_formula", optional_number(rep.two_qubit_formula)},
      {"pinned_fef", optional_number(rep.pinned_fef)},
      {"numeric_fef", optional_number(rep.numeric_fef)},
      {"optimal_fidelity", rep.optimal_fidelity},
      {"fidelity_source", to_string(rep.fidelity_source)},
      {"useful_for_teleportation", to_string(rep.useful)},
  };
  out["restarts_agreeing"] = rep.restarts_agreeing ? json(*rep.restarts_agreeing) : json(nullptr);
  out["optimizer_converged"] =
      rep.optimizer_converged ? json(*rep.optimizer_converged) : json(nullptr);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

DensityMatrix load_state_file(const std::string& path) {
  const json doc = read_json_file(path);
  if (doc.is_object() && doc.contains("state")) return build_state(state_spec_from_json(doc));
  return validate_density(matrix_from_json(doc));
}

}  // namespace fef
