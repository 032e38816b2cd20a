#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "spinorlab/reports.hpp"

using namespace spinorlab;
using nlohmann::json;

namespace {

// Minimal structural validator for the published draft-07 subset the schemas
// use: type, required, properties, items.
bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  return false;
}

void validate(const json& schema, const json& value, const std::string& path,
              std::vector<std::string>& errors) {
  if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>())) {
    errors.push_back(path + ": expected " + schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!value.contains(key.get<std::string>()))
        errors.push_back(path + ": missing required key " + key.get<std::string>());
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (value.contains(key)) validate(sub, value[key], path + "/" + key, errors);
    }
  }
  if (schema.contains("items") && value.is_array()) {
    int i = 0;
    for (const auto& item : value)
      validate(schema["items"], item, path + "[" + std::to_string(i++) + "]", errors);
  }
}

json load_schema(const std::string& name) {
  const char* root = std::getenv("SPINORLAB_SOURCE_DIR");
  REQUIRE(root != nullptr);
  std::ifstream in(std::string(root) + "/schemas/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

void check_against(const std::string& schema_name, const std::string& rendered) {
  const json schema = load_schema(schema_name);
  const json value = json::parse(rendered);
  std::vector<std::string> errors;
  validate(schema, value, "", errors);
  for (const auto& e : errors) FAIL_CHECK(schema_name << ": " << e);
  CHECK(errors.empty());
}

}  // namespace

TEST_SUITE_BEGIN("reports");

TEST_CASE("rendered reports validate against the published schemas") {
  check_against("verify_clifford.schema.json",
                render_clifford_report(run_clifford_suite(1, 2)));
  check_against("verify_purity.schema.json",
                render_purity_report(run_purity_suite(2, 20, 7)));
  check_against("null_theorem.schema.json", render_audit_report(theorem_audit(2, 5, 7)));
  check_against("verify_maxwell.schema.json", render_maxwell_report(run_maxwell_suite(5, 7)));
  check_against("verify_gravity.schema.json", render_gravity_report(run_gravity_suite(5, 7)));
  FockSuiteResult fock = run_fock_suite(4, PhysicalConstants::codata2018(true), 8, 1);
  check_against("fock.schema.json", render_fock_report(fock));
  check_against("wyler.schema.json", render_wyler_report(wyler_alpha()));
}

TEST_CASE("reports are deterministic byte-for-byte") {
  const std::string a = render_audit_report(theorem_audit(2, 5, 99));
  const std::string b = render_audit_report(theorem_audit(2, 5, 99));
  CHECK(a == b);
  const std::string w1 = render_wyler_report(wyler_alpha());
  const std::string w2 = render_wyler_report(wyler_alpha());
  CHECK(w1 == w2);
}

TEST_CASE("report JSON objects serialize with sorted keys") {
  const std::string s = render_wyler_report(wyler_alpha());
  CHECK(s.find("\"alpha\"") < s.find("\"inverse_alpha\""));
  CHECK(s.find("\"inverse_alpha\"") < s.find("\"schema_version\""));
  CHECK(s.find("\"schema_version\"") < s.find("\"volumes\""));
}

TEST_CASE("spectrum CSV: header, dot decimals, newline endings") {
  const SpectralResult sr = solve_levels(5, PhysicalConstants::codata2018(false));
  const std::string csv = render_fock_csv(sr);
  CHECK(csv.rfind("n,lambda_n,degeneracy,p0,E_n_eV\n", 0) == 0);
  CHECK(csv.find(',') != std::string::npos);
  CHECK(csv.find("13.60") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 6);  // header + 5 rows
}

TEST_SUITE_END();
