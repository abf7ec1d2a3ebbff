#include "document.hpp"

#include <sstream>

namespace mmagic {

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "dot") return OutputFormat::dot;
  if (name == "table") return OutputFormat::table;
  return std::nullopt;
}

int expected_m(Family family, int m) {
  switch (family) {
    case Family::magic:
    case Family::bipolar_magic:
      return 1;
    case Family::bimagic:
      return 2;
    default:
      return m;
  }
}

GenerateDocument run_generate(Family family, std::int64_t n, int m, int scale_exp) {
  if (scale_exp < 0 || scale_exp > kMaxScaleExp) {
    throw std::invalid_argument("scale_exp override must lie in [1, 18] (0 = tabulated)");
  }
  GenerateDocument doc;
  doc.family = family;
  const int m_eff = expected_m(family, m);
  doc.m = m_eff;

  switch (family) {
    case Family::magic:
      if (n < 3) throw InadmissibleError("magic path labeling needs n >= 3");
      break;
    case Family::bimagic:
      if (n < 5 || n % 2 == 0) throw InadmissibleError("bimagic path labeling needs odd n >= 5");
      break;
    case Family::bipolar_magic:
      if (n < 2) throw InadmissibleError("bipolar magic path labeling needs n >= 2");
      break;
    case Family::m_magic:
    case Family::bipolar_m_magic: {
      const AdmissibilityReport adm = admissible(n, m_eff, scale_family_of(family));
      if (!adm.admissible) throw InadmissibleError(adm.reason);
      break;
    }
  }

  // The legacy one- and two-constant schemes cover n the block table rejects
  // (bipolar n = 2), so fall back to the innermost scale band there.
  if (admissible_pair(n, m_eff)) {
    doc.admissibility = admissible(n, m_eff, scale_family_of(family));
    doc.scale_exp = scale_exp > 0 ? scale_exp : select_scale(n, m_eff, scale_family_of(family));
  } else {
    doc.admissibility.family = scale_family_of(family);
    doc.admissibility.n = n;
    doc.admissibility.m = m_eff;
    doc.admissibility.admissible = true;
    doc.admissibility.a = 0;
    doc.admissibility.reason = "covered by the single-constant scheme (n >= 2)";
    doc.scale_exp = scale_exp > 0 ? scale_exp : 2;
  }

  switch (family) {
    case Family::magic:
      doc.labeling = generate_magic(n, doc.scale_exp);
      break;
    case Family::bimagic:
      doc.labeling = generate_bimagic(n, doc.scale_exp).labeling;
      break;
    case Family::m_magic: {
      MMagicResult result = generate_m_magic(n, m_eff, doc.scale_exp);
      if (result.extension) {
        doc.notes.push_back("m = " + std::to_string(m_eff) +
                            " is an extension of the block formulas beyond their stated range");
      }
      doc.labeling = std::move(result.labeling);
      break;
    }
    case Family::bipolar_magic:
      doc.labeling = generate_bipolar_magic(n, doc.scale_exp);
      break;
    case Family::bipolar_m_magic: {
      BipolarMMagicResult result = generate_bipolar_m_magic(n, m_eff, doc.scale_exp);
      if (result.extension) {
        doc.notes.push_back("m = " + std::to_string(m_eff) +
                            " is an extension of the block formulas beyond their stated range");
      }
      doc.labeling = std::move(result.labeling);
      break;
    }
  }

  doc.m_magic = verify_m_magic(doc.labeling, m_eff, SpectrumMode::strict);
  doc.conformance_report = conformance(doc.labeling, n, m_eff, family);
  SpectrumResult spectrum = std::visit(
      [](const auto& l) { return extract_spectrum(l, SpectrumMode::lax); }, doc.labeling);
  doc.spectrum = std::move(spectrum.spectrum);
  return doc;
}

std::string document_to_json(const GenerateDocument& doc) {
  Json out;
  out["family"] = family_name(doc.family);
  out["admissibility"] = admissibility_to_json(doc.admissibility);
  out["labeling"] = labeling_to_json(doc.labeling);
  if (doc.spectrum) {
    out["spectrum"] = spectrum_to_json(*doc.spectrum, is_bipolar(doc.family));
  } else {
    out["spectrum"] = nullptr;
  }
  out["checks"] = {{"m_magic", report_to_json(doc.m_magic)},
                   {"conformance", report_to_json(doc.conformance_report)}};
  out["notes"] = doc.notes;
  out["status"] = doc.all_passed() ? "pass" : "verification-failed";
  return out.dump(2) + "\n";
}

static std::string joined_decimals(const std::vector<std::int64_t>& units, int scale_exp,
                                   const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i > 0) out += sep;
    out += to_decimal_string(ScaledValue{units[i], scale_exp});
  }
  return out;
}

static void append_report_lines(std::ostringstream& out, const CheckReport& report) {
  for (const auto& v : report.violations) {
    out << "violation: " << v.condition << " index=" << v.index;
    if (!v.observed.empty()) {
      out << " observed=";
      for (std::size_t i = 0; i < v.observed.size(); ++i) {
        if (i > 0) out << ",";
        out << to_decimal_string(v.observed[i]);
      }
    }
    if (!v.note.empty()) out << " note=" << v.note;
    out << "\n";
  }
}

std::string document_to_table(const GenerateDocument& doc) {
  std::ostringstream out;
  const auto names = [](std::int64_t count, bool edges) {
    std::string row;
    for (std::int64_t i = 1; i <= count; ++i) {
      if (i > 1) row += " ";
      row += "v" + std::to_string(i);
      if (edges) row += "v" + std::to_string(i + 1);
    }
    return row;
  };

  if (const auto* path = std::get_if<PathLabeling>(&doc.labeling)) {
    out << "kind: anti-fuzzy-path\n";
    out << "n: " << path->n << "\n";
    out << "m: " << doc.m << "\n";
    out << "scale_exp: " << path->scale_exp << "\n";
    out << "d: " << to_decimal_string(ScaledValue{1, path->scale_exp}) << "\n";
    out << "vertices: " << names(path->n, false) << "\n";
    out << "sigma: " << joined_decimals(path->sigma, path->scale_exp, " ") << "\n";
    out << "edges: " << names(path->n - 1, true) << "\n";
    out << "mu: " << joined_decimals(path->mu, path->scale_exp, " ") << "\n";
  } else {
    const auto& bip = std::get<BipolarPathLabeling>(doc.labeling);
    out << "kind: bipolar-anti-fuzzy-path\n";
    out << "n: " << bip.n << "\n";
    out << "m: " << doc.m << "\n";
    out << "scale_exp: " << bip.scale_exp << "\n";
    out << "d: " << to_decimal_string(ScaledValue{1, bip.scale_exp}) << "\n";
    out << "vertices: " << names(bip.n, false) << "\n";
    out << "sigma_p: " << joined_decimals(bip.sigma_p, bip.scale_exp, " ") << "\n";
    out << "sigma_n: " << joined_decimals(bip.sigma_n, bip.scale_exp, " ") << "\n";
    out << "edges: " << names(bip.n - 1, true) << "\n";
    out << "mu_p: " << joined_decimals(bip.mu_p, bip.scale_exp, " ") << "\n";
    out << "mu_n: " << joined_decimals(bip.mu_n, bip.scale_exp, " ") << "\n";
  }

  if (doc.spectrum) {
    out << "constants:";
    for (const auto& value : doc.spectrum->constants) {
      if (is_bipolar(doc.family)) {
        out << " (" << to_decimal_string(value) << "," << to_decimal_string(negate(value)) << ")";
      } else {
        out << " " << to_decimal_string(value);
      }
    }
    out << "\n";
    out << "blocks:";
    for (std::int64_t b : doc.spectrum->block_sizes) out << " " << b;
    out << "\n";
  }
  out << "checks: m-magic=" << (doc.m_magic.passed() ? "pass" : "fail")
      << " conformance=" << (doc.conformance_report.passed() ? "pass" : "fail") << "\n";
  append_report_lines(out, doc.m_magic);
  append_report_lines(out, doc.conformance_report);
  for (const auto& note : doc.notes) out << "note: " << note << "\n";
  out << "status: " << (doc.all_passed() ? "pass" : "verification-failed") << "\n";
  return out.str();
}

std::vector<SweepRow> run_sweep(Family family, int m_lo, int m_hi, std::int64_t a_lo,
                                std::int64_t a_hi) {
  if (family != Family::m_magic && family != Family::bipolar_m_magic) {
    throw std::invalid_argument("sweep: only the m-magic and bipolar-m-magic families sweep");
  }
  if (m_lo < 1 || m_lo > m_hi || a_lo < 0 || a_lo > a_hi) {
    throw std::invalid_argument("sweep: empty or malformed range");
  }
  std::vector<SweepRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      const std::int64_t n = 2 * static_cast<std::int64_t>(m) + 1 + m * a;
      GenerateDocument doc = run_generate(family, n, m);
      SweepRow row;
      row.family = family;
      row.n = n;
      row.m = m;
      row.a = a;
      row.scale_exp = doc.scale_exp;
      if (doc.spectrum) row.constants = doc.spectrum->constants;
      row.all_checks_passed = doc.all_passed();
      row.case_tag = doc.admissibility.case_tag;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "family,n,m,a,scale_exp,constants,all_checks_passed\n";
  for (const auto& row : rows) {
    out << family_name(row.family) << "," << row.n << "," << row.m << "," << row.a << ","
        << row.scale_exp << ",";
    for (std::size_t i = 0; i < row.constants.size(); ++i) {
      if (i > 0) out << ";";
      out << to_decimal_string(row.constants[i]);
    }
    out << "," << (row.all_checks_passed ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace mmagic
