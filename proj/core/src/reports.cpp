#include "spinorlab/reports.hpp"

#include <sstream>

#include <json.hpp>

namespace spinorlab {

namespace {

using json = nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json signature_json(const Signature& sig) {
  return json{{"plus", sig.plus}, {"minus", sig.minus}};
}

json trial_json(const ResidualTrial& t, const char* eq_a, const char* eq_b) {
  return json{{"seed", t.seed},
              {"p", {t.p[0], t.p[1], t.p[2], t.p[3]}},
              {eq_a, t.residual_plus},
              {eq_b, t.residual_minus},
              {"vacuum", t.vacuum},
              {"pass", t.pass}};
}

}  // namespace

std::string render_clifford_report(const CliffordSuiteResult& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back(json{{"n", c.n},
                         {"signature", signature_json(c.signature)},
                         {"anticommutator_residual", c.check.anticommutator},
                         {"volume_anticommute_residual", c.check.volume_anticommute},
                         {"volume_square_residual", c.check.volume_square},
                         {"projector_idempotent_residual", c.check.projector_idempotent},
                         {"projector_orthogonal_residual", c.check.projector_orthogonal},
                         {"projector_complete_residual", c.check.projector_complete},
                         {"generator_trace_residual", c.check.generator_trace},
                         {"odd_anticommutator_residual", c.odd.anticommutator},
                         {"odd_even_closure_residual", c.odd.even_closure},
                         {"pass", c.pass}});
  }
  return dump(json{{"schema_version", kSchemaVersion},
                   {"suite", "clifford"},
                   {"tolerance", r.tol},
                   {"worst_residual", r.worst_residual},
                   {"cases", cases},
                   {"pass", r.pass}});
}

std::string render_purity_report(const PuritySuiteResult& r) {
  return dump(json{{"schema_version", kSchemaVersion},
                   {"suite", "purity"},
                   {"n", r.n},
                   {"trials", r.trials},
                   {"seed", r.seed},
                   {"tolerance", r.tol},
                   {"baseline_pure", r.baseline_pure},
                   {"orbit_pure", r.orbit_pure},
                   {"generic_nonpure", r.generic_nonpure},
                   {"rank_ambiguities", r.rank_ambiguities},
                   {"constraint_count",
                    r.n <= 5 ? json(purity_constraint_count(r.n)) : json(nullptr)},
                   {"pass", r.pass}});
}

std::string render_audit_report(const AuditReport& r) {
  json arms = json::array();
  for (const auto& a : r.arms) {
    arms.push_back(json{{"n", a.n},
                        {"pairing_mode", to_string(a.mode)},
                        {"signature", signature_json(a.rep_signature)},
                        {"arm", to_string(a.arm)},
                        {"trials", a.trials},
                        {"pass_count", a.null_count},
                        {"nonnull_count", a.nonnull_count},
                        {"ambiguous_count", a.ambiguous_count},
                        {"excluded_trivial", a.excluded_trivial},
                        {"max_residual", a.max_residual},
                        {"min_residual", a.min_residual},
                        {"seeds", a.trial_seeds}});
  }
  return dump(json{{"schema_version", kSchemaVersion},
                   {"suite", "null-theorem"},
                   {"n", r.n},
                   {"trials", r.trials},
                   {"seed", r.seed},
                   {"null_tol", r.null_tol},
                   {"fail_tol", r.fail_tol},
                   {"arms", arms},
                   {"pure_arms_all_null", r.pure_arms_all_null()},
                   {"generic_fail_rate", r.generic_fail_rate()}});
}

namespace {

json residual_suite_json(const char* suite, const std::vector<ResidualTrial>& solutions,
                         const std::vector<ResidualTrial>& counterexamples, const char* eq_a,
                         const char* eq_b) {
  json sol = json::array();
  for (const auto& t : solutions) sol.push_back(trial_json(t, eq_a, eq_b));
  json cex = json::array();
  for (const auto& t : counterexamples) cex.push_back(trial_json(t, eq_a, eq_b));
  return json{{"suite", suite}, {"solutions", sol}, {"counterexamples", cex}};
}

}  // namespace

std::string render_maxwell_report(const MaxwellSuiteResult& r) {
  json j = residual_suite_json("maxwell", r.solutions, r.counterexamples, "residual_17a",
                               "residual_17b");
  j["schema_version"] = kSchemaVersion;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["pass_tol"] = r.pass_tol;
  j["fail_tol"] = r.fail_tol;
  j["counterexample_exceed"] = r.counterexample_exceed;
  j["pass"] = r.pass;
  return dump(j);
}

std::string render_gravity_report(const GravitySuiteResult& r) {
  json j = residual_suite_json("gravity", r.solutions, r.counterexamples, "residual_19_first",
                               "residual_19_second");
  j["schema_version"] = kSchemaVersion;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["pass_tol"] = r.pass_tol;
  j["fail_tol"] = r.fail_tol;
  j["counterexample_exceed"] = r.counterexample_exceed;
  j["max_swap_residual"] = r.max_swap_residual;
  j["max_rank_ratio"] = r.max_rank_ratio;
  j["pass"] = r.pass;
  return dump(j);
}

std::string render_fock_report(const FockSuiteResult& r) {
  json levels = json::array();
  for (const auto& lv : r.spectrum.levels) {
    levels.push_back(json{{"n", lv.n},
                          {"lambda", lv.lambda},
                          {"degeneracy", lv.degeneracy},
                          {"p0c_ev", lv.p0c_ev},
                          {"energy_ev", lv.energy_ev}});
  }
  json j{{"schema_version", kSchemaVersion},
         {"suite", "fock"},
         {"constants",
          json{{"alpha", r.spectrum.constants.alpha},
               {"mc2_ev", r.spectrum.constants.mc2_ev},
               {"source", r.spectrum.constants.source},
               {"reduced_mass", r.spectrum.constants.reduced_mass}}},
         {"mode", r.spectrum.mode == LevelMode::analytic ? "analytic" : "quadrature"},
         {"levels", levels},
         {"balmer_ratios", r.balmer},
         {"max_lambda_defect", r.max_lambda_defect},
         {"pass", r.pass}};
  if (r.nystrom_run) {
    json clusters = json::array();
    for (const auto& c : r.nystrom.clusters)
      clusters.push_back(json{{"n", c.n},
                              {"count", c.count},
                              {"mean", c.mean},
                              {"max_rel_err", c.max_rel_err},
                              {"spread", c.spread},
                              {"separated", c.separated}});
    j["nystrom"] = json{{"grid_size", r.nystrom.grid_size},
                        {"matrix_dim", r.nystrom.matrix_dim},
                        {"eigenvalues", r.nystrom.eigenvalues},
                        {"clusters", clusters}};
  }
  return dump(j);
}

std::string render_wyler_report(const WylerResult& r) {
  auto vol = [](const DomainVolume& v) {
    json j{{"name", to_string(v.name)},
           {"value", v.value},
           {"provenance", to_string(v.provenance)}};
    if (v.provenance == VolumeProvenance::monte_carlo) j["samples"] = v.samples;
    return j;
  };
  return dump(json{{"schema_version", kSchemaVersion},
                   {"suite", "wyler"},
                   {"alpha", r.alpha},
                   {"inverse_alpha", r.inverse_alpha},
                   {"volumes", json{{"D5", vol(r.d5)}, {"S4", vol(r.s4)}, {"Q5", vol(r.q5)}}},
                   {"overrides", r.overrides},
                   {"delta_vs_experiment", r.delta_vs_experiment},
                   {"delta_vs_paper_printed",
                    json{{"reading_137_0608", r.delta_vs_paper_printed},
                         {"reading_137_03608", r.delta_vs_paper_corrected}}}});
}

std::string render_fock_csv(const SpectralResult& r) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << "n,lambda_n,degeneracy,p0,E_n_eV\n";
  for (const auto& lv : r.levels)
    os << lv.n << ',' << lv.lambda << ',' << lv.degeneracy << ',' << lv.p0c_ev << ','
       << lv.energy_ev << '\n';
  return os.str();
}

}  // namespace spinorlab
