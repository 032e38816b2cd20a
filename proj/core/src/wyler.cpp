#include "spinorlab/wyler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinorlab/rng.hpp"

namespace spinorlab {

namespace {

constexpr double kPi = std::numbers::pi;

double closed_form(DomainName name) {
  switch (name) {
    case DomainName::S4:
      return 8.0 * kPi * kPi / 3.0;  // surface volume of the unit 4-sphere
    case DomainName::D5:
      return std::pow(kPi, 5) / (16.0 * 120.0);  // pi^5 / (2^4 5!)
    default:
      return 8.0 * std::pow(kPi, 3) / 3.0;
  }
}

// Area(S^4) = 5 Vol(B^5); estimate Vol(B^5) by uniform sampling of [-1,1]^5.
double monte_carlo_s4(std::uint64_t seed, std::uint64_t samples) {
  SplitMix64 rng(seed);
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double r2 = 0.0;
    for (int k = 0; k < 5; ++k) {
      const double x = 2.0 * rng.uniform() - 1.0;
      r2 += x * x;
    }
    if (r2 <= 1.0) ++inside;
  }
  const double ball = 32.0 * static_cast<double>(inside) / static_cast<double>(samples);
  return 5.0 * ball;
}

}  // namespace

std::string to_string(DomainName name) {
  switch (name) {
    case DomainName::D5:
      return "D5";
    case DomainName::S4:
      return "S4";
    default:
      return "Q5";
  }
}

std::string to_string(VolumeProvenance p) {
  return p == VolumeProvenance::closed_form ? "closed_form" : "monte_carlo";
}

DomainVolume volume(DomainName name, VolumeProvenance provenance, std::uint64_t seed,
                    std::uint64_t samples) {
  DomainVolume out;
  out.name = name;
  out.provenance = provenance;
  if (provenance == VolumeProvenance::closed_form) {
    out.value = closed_form(name);
    return out;
  }
  if (name != DomainName::S4)
    throw std::invalid_argument("volume: no sampling construction for " + to_string(name) +
                                "; closed_form only");
  if (samples == 0) throw std::invalid_argument("volume: samples must be positive");
  out.value = monte_carlo_s4(seed, samples);
  out.samples = samples;
  return out;
}

WylerResult wyler_alpha(const std::map<std::string, double>& overrides) {
  WylerResult out;
  out.d5 = volume(DomainName::D5, VolumeProvenance::closed_form);
  out.s4 = volume(DomainName::S4, VolumeProvenance::closed_form);
  out.q5 = volume(DomainName::Q5, VolumeProvenance::closed_form);
  for (const auto& [key, val] : overrides) {
    if (val <= 0.0) throw std::invalid_argument("wyler_alpha: override " + key + " must be > 0");
    if (key == "V_D5")
      out.d5.value = val;
    else if (key == "V_S4")
      out.s4.value = val;
    else if (key == "V_Q5")
      out.q5.value = val;
    else
      throw std::invalid_argument("wyler_alpha: unknown override " + key);
    out.overrides[key] = val;
  }
  out.alpha = 8.0 * kPi * std::pow(out.d5.value, 0.25) / (out.s4.value * out.q5.value);
  out.inverse_alpha = 1.0 / out.alpha;
  out.delta_vs_experiment = std::abs(out.inverse_alpha - kInverseAlphaExperiment);
  out.delta_vs_paper_printed = std::abs(out.inverse_alpha - kInverseAlphaPaperPrinted);
  out.delta_vs_paper_corrected = std::abs(out.inverse_alpha - kInverseAlphaPaperCorrected);
  return out;
}

}  // namespace spinorlab
