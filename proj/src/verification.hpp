#pragma once

#include "labeling.hpp"

namespace mmagic {

/// strict: the edges attaining each constant must form consecutive runs of
/// equal length (n-1)/m. lax: any set of exactly m distinct constants.
enum class SpectrumMode { strict, lax };

std::optional<SpectrumMode> spectrum_mode_from_name(std::string_view name);
const char* spectrum_mode_name(SpectrumMode mode);

/// Negative-channel edge rule. mu_below_min is the structural definition
/// (mu_n <= min of the endpoint labels) and the default; mu_above_max is the
/// alternate reading (mu_n >= max) kept for comparison runs only.
enum class NegativeEdgeRule { mu_below_min, mu_above_max };

/// Every edge must satisfy mu >= max(sigma endpoints); all labels in (0,1].
CheckReport check_anti_fuzzy(const PathLabeling& labeling);

/// Positive channel as above; negative channel per `rule`; ranges (0,1] and
/// [-1,0).
CheckReport check_bipolar_anti_fuzzy(const BipolarPathLabeling& labeling,
                                     NegativeEdgeRule rule = NegativeEdgeRule::mu_below_min);

struct SpectrumResult {
  std::optional<MagicSpectrum> spectrum;
  CheckReport report;  // structural violations when extraction fails
};

SpectrumResult extract_spectrum(const PathLabeling& labeling, SpectrumMode mode);

/// Bipolar extraction works on the positive channel and additionally requires
/// the negative sums to be the exact negation edge by edge.
SpectrumResult extract_spectrum(const BipolarPathLabeling& labeling, SpectrumMode mode);

/// Definition-level acceptance: spectrum extraction succeeds with exactly m
/// constants and the (bipolar) anti-fuzzy conditions hold.
CheckReport verify_m_magic(const PathLabeling& labeling, int m, SpectrumMode mode);
CheckReport verify_m_magic(const BipolarPathLabeling& labeling, int m, SpectrumMode mode);
CheckReport verify_m_magic(const Labeling& labeling, int m, SpectrumMode mode);

/// The closed-form constants each family is expected to attain, in units:
///   magic            {3n}
///   bimagic          {2n+2, 2n+7}
///   m-magic          {3n + c_k + 1 : k = 1..m}
///   bipolar-magic    {6n}
///   bipolar-m-magic  {(k+5)n - (k-1) : k = 1..m}  (negative channel mirrored)
std::vector<std::int64_t> expected_constant_units(Family family, std::int64_t n, int m);

/// Passes iff the extracted constants equal the family's closed forms.
CheckReport conformance(const PathLabeling& labeling, std::int64_t n, int m, Family family);
CheckReport conformance(const BipolarPathLabeling& labeling, std::int64_t n, int m, Family family);
CheckReport conformance(const Labeling& labeling, std::int64_t n, int m, Family family);

}  // namespace mmagic
