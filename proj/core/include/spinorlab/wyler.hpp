#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace spinorlab {

enum class DomainName { D5, S4, Q5 };
enum class VolumeProvenance { closed_form, monte_carlo };

std::string to_string(DomainName name);
std::string to_string(VolumeProvenance p);

/// Volume of one of the homogeneous domains entering the closed-form
/// fine-structure expression.  The closed forms are the values standard in
/// that formula's literature:
///   V(S4) = 8 pi^2 / 3,  V(D5) = pi^5 / (2^4 5!),  V(Q5) = 8 pi^3 / 3.
struct DomainVolume {
  DomainName name = DomainName::S4;
  double value = 0.0;
  VolumeProvenance provenance = VolumeProvenance::closed_form;
  std::uint64_t samples = 0;  // Monte-Carlo only
};

/// Monte-Carlo is available where a sampling construction exists (S4, via the
/// ball-volume estimate); requesting it elsewhere throws std::invalid_argument.
DomainVolume volume(DomainName name, VolumeProvenance provenance, std::uint64_t seed = 0,
                    std::uint64_t samples = 10'000'000);

struct WylerResult {
  double alpha = 0.0;
  double inverse_alpha = 0.0;
  DomainVolume d5, s4, q5;
  std::map<std::string, double> overrides;  // applied volume overrides, if any
  double delta_vs_experiment = 0.0;         // |1/alpha - 137.035999|
  double delta_vs_paper_printed = 0.0;      // vs 137.0608 (comma read as dot)
  double delta_vs_paper_corrected = 0.0;    // vs 137.03608
};

inline constexpr double kInverseAlphaExperiment = 137.035999;
inline constexpr double kInverseAlphaPaperPrinted = 137.0608;
inline constexpr double kInverseAlphaPaperCorrected = 137.03608;

/// alpha = 8 pi V(D5)^{1/4} / (V(S4) V(Q5)), with optional named overrides
/// ("V_D5", "V_S4", "V_Q5") replacing the closed-form volumes.
WylerResult wyler_alpha(const std::map<std::string, double>& overrides = {});

}  // namespace spinorlab
