#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "fef/io.hpp"
#include "fef/report.hpp"
#include "fef/rng.hpp"
#include "fef/states.hpp"

using namespace fef;
using nlohmann::json;
using testing::error_code_of;

namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fef_test_io_" + name);
}

}  // namespace

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("matrix JSON round trip is bit exact") {
  for (int k = 0; k < 10; ++k) {
    const CMatrix m = random_density(2 + k % 2, 3, split_seed(1, k)).matrix();
    const json doc = matrix_to_json(m);
    CHECK(doc.at("format") == kFileFormat);
    const CMatrix back = matrix_from_json(json::parse(doc.dump()));
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("matrix JSON errors point at the offending element") {
  json doc = matrix_to_json(CMatrix::Identity(4, 4) / 4.0);
  doc["matrix"][3][2][1] = "oops";
  CHECK(error_code_of([&] { matrix_from_json(doc); }) == ErrorCode::Parse);
  CHECK(message_of([&] { matrix_from_json(doc); }).find("/matrix/3/2/1") != std::string::npos);

  json short_rows = matrix_to_json(CMatrix::Identity(4, 4) / 4.0);
  short_rows["matrix"].erase(0);
  CHECK(error_code_of([&] { matrix_from_json(short_rows); }) == ErrorCode::Parse);

  json version = matrix_to_json(CMatrix::Identity(4, 4) / 4.0);
  version["format"] = 2;
  CHECK(message_of([&] { matrix_from_json(version); }).find("/format") != std::string::npos);

  CHECK(error_code_of([] { matrix_from_json(json::array()); }) == ErrorCode::Parse);
}

TEST_CASE("state spec JSON round trip") {
  StateSpec mix;
  mix.family = Family::PhiMixture;
  mix.terms = {{0.25, 0.1}, {0.75, 0.4}};
  const StateSpec back = state_spec_from_json(json::parse(state_spec_to_json(mix).dump()));
  CHECK(back.family == Family::PhiMixture);
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[1].weight == 0.75);
  CHECK(back.terms[1].x == 0.4);

  StateSpec rnd;
  rnd.family = Family::RandomDensity;
  rnd.dim = 3;
  rnd.rank = 4;
  rnd.seed = 0xFFFFFFFFFFFFFFFFull;
  const StateSpec rb = state_spec_from_json(state_spec_to_json(rnd));
  CHECK(rb.seed == rnd.seed);
  CHECK(rb.rank == 4);
  CHECK(rb.dim == 3);

  const json bad = json::parse(R"({"format": 1, "state": {"family": "isotropic", "theta": "x"}})");
  CHECK(message_of([&] { state_spec_from_json(bad); }).find("/state/theta") != std::string::npos);
  const json unknown = json::parse(R"({"format": 1, "state": {"family": "nope"}})");
  CHECK(error_code_of([&] { state_spec_from_json(unknown); }) == ErrorCode::Parse);
}

TEST_CASE("load_state_file reads both file kinds") {
  const auto mpath = scratch("matrix.json");
  write_text_file(mpath.string(), matrix_to_json(CMatrix::Identity(4, 4) / 4.0).dump());
  CHECK(load_state_file(mpath.string()).dim() == 2);

  const auto spath = scratch("state.json");
  write_text_file(spath.string(), R"({"format": 1, "state": {"family": "isotropic", "d": 3, "theta": 0.5}})");
  const auto rho = load_state_file(spath.string());
  CHECK((rho.matrix() - isotropic(3, 0.5).matrix()).cwiseAbs().maxCoeff() == 0.0);

  const auto garbage = scratch("garbage.json");
  write_text_file(garbage.string(), "{not json");
  CHECK(error_code_of([&] { load_state_file(garbage.string()); }) == ErrorCode::Parse);

  const auto invalid = scratch("invalid.json");
  write_text_file(invalid.string(), matrix_to_json(CMatrix::Identity(4, 4)).dump());
  CHECK(error_code_of([&] { load_state_file(invalid.string()); }) == ErrorCode::Validation);

  CHECK(error_code_of([] { load_state_file("/nonexistent/fef.json"); }) == ErrorCode::Io);

  for (const auto& p : {mpath, spath, garbage, invalid}) std::filesystem::remove(p);
}

TEST_CASE("report JSON carries nulls for absent values") {
  const json doc = report_to_json(full_report(isotropic(3, 0.5)));
  CHECK(doc.at("exact_thm3").get<double>() == doctest::Approx(5.0 / 9.0));
  CHECK(doc.at("numeric_fef").is_null());
  CHECK(doc.at("two_qubit_exact").is_null());
  CHECK(doc.at("fidelity_source") == "exact");
  CHECK(doc.at("useful_for_teleportation") == "yes");
}
