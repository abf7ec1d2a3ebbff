#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scaled_value.hpp"

namespace mmagic {

/// Labeled path P_n: vertices v_1..v_n, edges v_i v_{i+1} for 1 <= i <= n-1.
/// Indices are 1-based everywhere, in memory and in serialized form, so the
/// closed-form label rules transcribe literally. Units share one scale_exp;
/// every label lies in (0, 1], i.e. units in [1, 10^p].
struct PathLabeling {
  std::int64_t n = 0;
  int scale_exp = 2;
  std::vector<std::int64_t> sigma;  // n vertex units
  std::vector<std::int64_t> mu;     // n-1 edge units

  ScaledValue sigma_value(std::int64_t i) const;  // 1-based
  ScaledValue mu_value(std::int64_t i) const;     // 1-based

  friend bool operator==(const PathLabeling&, const PathLabeling&) = default;
};

/// Bipolar variant: a positive channel in (0,1] and a negative channel in
/// [-1,0), each with its own vertex and edge sequences.
struct BipolarPathLabeling {
  std::int64_t n = 0;
  int scale_exp = 2;
  std::vector<std::int64_t> sigma_p;
  std::vector<std::int64_t> sigma_n;
  std::vector<std::int64_t> mu_p;
  std::vector<std::int64_t> mu_n;

  friend bool operator==(const BipolarPathLabeling&, const BipolarPathLabeling&) = default;
};

using Labeling = std::variant<PathLabeling, BipolarPathLabeling>;

/// Validating constructors. Structural problems (sizes, bad scale) raise
/// std::invalid_argument; labels outside their membership range raise
/// LabelRangeError.
PathLabeling make_path_labeling(std::int64_t n, int scale_exp, std::vector<std::int64_t> sigma,
                                std::vector<std::int64_t> mu);
BipolarPathLabeling make_bipolar_path_labeling(std::int64_t n, int scale_exp,
                                               std::vector<std::int64_t> sigma_p,
                                               std::vector<std::int64_t> sigma_n,
                                               std::vector<std::int64_t> mu_p,
                                               std::vector<std::int64_t> mu_n);

/// sigma(v_i) + mu(v_i v_{i+1}) + sigma(v_{i+1}) for edge i in [1, n-1].
ScaledValue edge_sum(const PathLabeling& labeling, std::int64_t i);

/// Positive and negative channel sums of edge i.
std::pair<ScaledValue, ScaledValue> bipolar_edge_sums(const BipolarPathLabeling& labeling,
                                                      std::int64_t i);

struct Violation {
  std::string condition;               // e.g. "anti-fuzzy-edge"
  std::int64_t index = 0;              // 1-based vertex/edge index; 0 = whole labeling
  std::vector<ScaledValue> observed;   // exact values on both sides of the failed condition
  std::string note;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void append(CheckReport other) {
    for (auto& v : other.violations) violations.push_back(std::move(v));
  }
};

enum class CaseTag { case1_m_even, case1_m_odd, case2_m_odd, not_applicable };

const char* case_tag_name(CaseTag tag);

struct AdmissibilityReport {
  ScaleFamily family = ScaleFamily::anti_fuzzy;
  std::int64_t n = 0;
  int m = 0;
  bool admissible = false;
  CaseTag case_tag = CaseTag::not_applicable;
  std::int64_t a = 0;  // n = 2m+1+ma when admissible
  std::string reason;
};

/// Distinct edge-sum constants k_1 < ... < k_m with the edge-to-constant
/// assignment. assignment[i] is the 1-based position in `constants` attained
/// by edge i+1; block_sizes counts edges per constant.
struct MagicSpectrum {
  std::vector<ScaledValue> constants;
  std::vector<int> assignment;
  std::vector<std::int64_t> block_sizes;
};

/// The five construction families exposed by the tool.
enum class Family { magic, bimagic, m_magic, bipolar_magic, bipolar_m_magic };

const char* family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
ScaleFamily scale_family_of(Family family);
bool is_bipolar(Family family);

}  // namespace mmagic
