#pragma once

#include "constructions.hpp"
#include "serialize.hpp"

namespace mmagic {

enum class OutputFormat { json, dot, table };
std::optional<OutputFormat> output_format_from_name(std::string_view name);

/// Everything the generate pipeline produces for one instance: the labeling,
/// its admissibility report, the strict verification report, the closed-form
/// conformance report and the extracted spectrum.
struct GenerateDocument {
  Family family = Family::m_magic;
  int m = 1;
  AdmissibilityReport admissibility;
  int scale_exp = 2;
  Labeling labeling;
  std::optional<MagicSpectrum> spectrum;
  CheckReport m_magic;
  CheckReport conformance_report;
  std::vector<std::string> notes;

  bool all_passed() const { return m_magic.passed() && conformance_report.passed(); }
};

/// Runs admissibility -> scale selection -> generator -> verify_m_magic +
/// conformance. scale_exp = 0 selects the tabulated scale. Throws
/// InadmissibleError when the instance is rejected and LabelRangeError when
/// the scale cannot hold the labels; a generated-but-failing labeling is a
/// regular return with failing reports.
GenerateDocument run_generate(Family family, std::int64_t n, int m, int scale_exp = 0);

std::string document_to_json(const GenerateDocument& doc);
std::string document_to_table(const GenerateDocument& doc);

struct SweepRow {
  Family family = Family::m_magic;
  std::int64_t n = 0;
  int m = 0;
  std::int64_t a = 0;
  int scale_exp = 2;
  std::vector<ScaledValue> constants;  // positive channel for bipolar rows
  bool all_checks_passed = false;
  CaseTag case_tag = CaseTag::not_applicable;
};

/// One row per admissible instance n = 2m+1+ma over the requested ranges,
/// ordered by (m, n). Only the m-parameterised families sweep.
std::vector<SweepRow> run_sweep(Family family, int m_lo, int m_hi, std::int64_t a_lo,
                                std::int64_t a_hi);

/// Deterministic CSV: family,n,m,a,scale_exp,constants,all_checks_passed with
/// constants semicolon-joined.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Expected constant count of a family (1, 2 or m).
int expected_m(Family family, int m);

}  // namespace mmagic
