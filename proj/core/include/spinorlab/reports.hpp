#pragma once

#include <string>

#include "spinorlab/suites.hpp"
#include "spinorlab/wyler.hpp"

namespace spinorlab {

/// All reports are UTF-8 JSON with keys serialized in sorted order and a
/// `schema_version` field; identical inputs render byte-identical strings
/// (run timestamps belong in a sidecar file, never in the report body).
inline constexpr int kSchemaVersion = 1;

std::string render_clifford_report(const CliffordSuiteResult& r);
std::string render_purity_report(const PuritySuiteResult& r);
std::string render_audit_report(const AuditReport& r);
std::string render_maxwell_report(const MaxwellSuiteResult& r);
std::string render_gravity_report(const GravitySuiteResult& r);
std::string render_fock_report(const FockSuiteResult& r);
std::string render_wyler_report(const WylerResult& r);

/// CSV spectrum: header row, dot decimal separator, \n line endings.
std::string render_fock_csv(const SpectralResult& r);

}  // namespace spinorlab
