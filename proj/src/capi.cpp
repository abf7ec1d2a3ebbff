#include "mmagic/mmagic.h"

#include <cstring>
#include <new>

#include "document.hpp"
#include "oracle.hpp"

struct mmagic_labeling {
  mmagic::Labeling value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const mmagic::InadmissibleError& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_INADMISSIBLE;
  } catch (const mmagic::LabelRangeError& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_LABEL_RANGE;
  } catch (const mmagic::ParseError& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_PARSE;
  } catch (const mmagic::SearchBoundError& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_SEARCH_BOUNDS;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MMAGIC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MMAGIC_ERR_INTERNAL;
  }
}

mmagic::ScaleFamily parse_scale_family(const char* family) {
  if (family && std::string_view(family) == "anti-fuzzy") return mmagic::ScaleFamily::anti_fuzzy;
  if (family && std::string_view(family) == "bipolar") return mmagic::ScaleFamily::bipolar;
  throw std::invalid_argument("family must be \"anti-fuzzy\" or \"bipolar\"");
}

mmagic::Family parse_family(const char* family) {
  if (family) {
    if (auto parsed = mmagic::family_from_name(family)) return *parsed;
  }
  throw std::invalid_argument(
      "family must be one of magic, bimagic, m-magic, bipolar-magic, bipolar-m-magic");
}

mmagic::SpectrumMode parse_mode(const char* mode) {
  if (!mode) return mmagic::SpectrumMode::lax;
  if (auto parsed = mmagic::spectrum_mode_from_name(mode)) return *parsed;
  throw std::invalid_argument("mode must be \"strict\" or \"lax\"");
}

const mmagic::Labeling& deref(const mmagic_labeling* labeling) {
  if (!labeling) throw std::invalid_argument("labeling handle is null");
  return labeling->value;
}

void copy_into(char* dest, size_t capacity, std::string_view text) {
  const size_t len = text.size() < capacity - 1 ? text.size() : capacity - 1;
  std::memcpy(dest, text.data(), len);
  dest[len] = '\0';
}

}  // namespace

extern "C" {

const char* mmagic_version(void) { return "1.0.0"; }

const char* mmagic_status_name(int status) {
  switch (status) {
    case MMAGIC_OK: return "ok";
    case MMAGIC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MMAGIC_ERR_INADMISSIBLE: return "inadmissible";
    case MMAGIC_ERR_LABEL_RANGE: return "label-range";
    case MMAGIC_ERR_VERIFICATION: return "verification-failed";
    case MMAGIC_ERR_PARSE: return "parse-error";
    case MMAGIC_ERR_SEARCH_BOUNDS: return "search-bounds";
    case MMAGIC_ERR_IO: return "io-error";
    case MMAGIC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* mmagic_last_error(void) { return g_last_error.c_str(); }

void mmagic_string_free(char* text) { std::free(text); }

void mmagic_labeling_free(mmagic_labeling* labeling) { delete labeling; }

int mmagic_select_scale(int64_t n, int m, const char* family, int* out_scale_exp) {
  return guarded([&] {
    if (!out_scale_exp) throw std::invalid_argument("out_scale_exp is null");
    *out_scale_exp = mmagic::select_scale(n, m, parse_scale_family(family));
    return MMAGIC_OK;
  });
}

int mmagic_format_units(int64_t units, int scale_exp, char** out_text) {
  return guarded([&] {
    if (!out_text) throw std::invalid_argument("out_text is null");
    *out_text = dup_string(mmagic::to_decimal_string(mmagic::value_of(units, scale_exp)));
    return MMAGIC_OK;
  });
}

int mmagic_admissible(int64_t n, int m, const char* family, mmagic_admissibility* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out is null");
    const mmagic::AdmissibilityReport report = mmagic::admissible(n, m, parse_scale_family(family));
    out->admissible = report.admissible ? 1 : 0;
    out->a = report.a;
    copy_into(out->case_tag, sizeof out->case_tag, mmagic::case_tag_name(report.case_tag));
    copy_into(out->reason, sizeof out->reason, report.reason);
    return MMAGIC_OK;
  });
}

int mmagic_generate(const char* family, int64_t n, int m, int scale_exp, mmagic_labeling** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out is null");
    mmagic::GenerateDocument doc = mmagic::run_generate(parse_family(family), n, m, scale_exp);
    *out = new mmagic_labeling{std::move(doc.labeling)};
    return MMAGIC_OK;
  });
}

int mmagic_labeling_kind(const mmagic_labeling* labeling, int* out_kind) {
  return guarded([&] {
    if (!out_kind) throw std::invalid_argument("out_kind is null");
    *out_kind = std::holds_alternative<mmagic::BipolarPathLabeling>(deref(labeling)) ? 1 : 0;
    return MMAGIC_OK;
  });
}

int mmagic_labeling_vertex_count(const mmagic_labeling* labeling, int64_t* out_n) {
  return guarded([&] {
    if (!out_n) throw std::invalid_argument("out_n is null");
    *out_n = std::visit([](const auto& l) { return l.n; }, deref(labeling));
    return MMAGIC_OK;
  });
}

int mmagic_labeling_scale_exp(const mmagic_labeling* labeling, int* out_scale_exp) {
  return guarded([&] {
    if (!out_scale_exp) throw std::invalid_argument("out_scale_exp is null");
    *out_scale_exp = std::visit([](const auto& l) { return l.scale_exp; }, deref(labeling));
    return MMAGIC_OK;
  });
}

int mmagic_labeling_units(const mmagic_labeling* labeling, int sequence, int64_t* buf,
                          size_t capacity, size_t* out_len) {
  return guarded([&] {
    const mmagic::Labeling& value = deref(labeling);
    const std::vector<std::int64_t>* seq = nullptr;
    if (const auto* path = std::get_if<mmagic::PathLabeling>(&value)) {
      if (sequence == MMAGIC_SEQ_SIGMA) seq = &path->sigma;
      if (sequence == MMAGIC_SEQ_MU) seq = &path->mu;
    } else {
      const auto& bip = std::get<mmagic::BipolarPathLabeling>(value);
      switch (sequence) {
        case MMAGIC_SEQ_SIGMA: seq = &bip.sigma_p; break;
        case MMAGIC_SEQ_MU: seq = &bip.mu_p; break;
        case MMAGIC_SEQ_SIGMA_N: seq = &bip.sigma_n; break;
        case MMAGIC_SEQ_MU_N: seq = &bip.mu_n; break;
        default: break;
      }
    }
    if (!seq) throw std::invalid_argument("sequence not present on this labeling kind");
    if (out_len) *out_len = seq->size();
    if (buf) {
      if (capacity < seq->size()) throw std::invalid_argument("buffer too small");
      std::memcpy(buf, seq->data(), seq->size() * sizeof(int64_t));
    }
    return MMAGIC_OK;
  });
}

int mmagic_labeling_to_json(const mmagic_labeling* labeling, char** out_json) {
  return guarded([&] {
    if (!out_json) throw std::invalid_argument("out_json is null");
    *out_json = dup_string(mmagic::labeling_to_json(deref(labeling)).dump());
    return MMAGIC_OK;
  });
}

int mmagic_labeling_from_json(const char* json_text, mmagic_labeling** out) {
  return guarded([&] {
    if (!json_text || !out) throw std::invalid_argument("json_text or out is null");
    *out = new mmagic_labeling{mmagic::parse_labeling_text(json_text)};
    return MMAGIC_OK;
  });
}

int mmagic_render_dot(const mmagic_labeling* labeling, char** out_dot) {
  return guarded([&] {
    if (!out_dot) throw std::invalid_argument("out_dot is null");
    *out_dot = dup_string(mmagic::render_dot(deref(labeling)));
    return MMAGIC_OK;
  });
}

int mmagic_verify(const mmagic_labeling* labeling, int expected_m, const char* mode,
                  char** out_report_json) {
  return guarded([&] {
    const mmagic::CheckReport report =
        mmagic::verify_m_magic(deref(labeling), expected_m, parse_mode(mode));
    if (out_report_json) *out_report_json = dup_string(mmagic::report_to_json(report).dump(2));
    if (!report.passed()) {
      g_last_error = "verification failed with " + std::to_string(report.violations.size()) +
                     " violation(s)";
      return MMAGIC_ERR_VERIFICATION;
    }
    return MMAGIC_OK;
  });
}

int mmagic_conformance(const mmagic_labeling* labeling, int m, const char* family,
                       char** out_report_json) {
  return guarded([&] {
    const mmagic::Labeling& value = deref(labeling);
    const std::int64_t n = std::visit([](const auto& l) { return l.n; }, value);
    const mmagic::CheckReport report = mmagic::conformance(value, n, m, parse_family(family));
    if (out_report_json) *out_report_json = dup_string(mmagic::report_to_json(report).dump(2));
    if (!report.passed()) {
      g_last_error = "conformance failed with " + std::to_string(report.violations.size()) +
                     " violation(s)";
      return MMAGIC_ERR_VERIFICATION;
    }
    return MMAGIC_OK;
  });
}

int mmagic_spectrum(const mmagic_labeling* labeling, const char* mode, char** out_spectrum_json) {
  return guarded([&] {
    if (!out_spectrum_json) throw std::invalid_argument("out_spectrum_json is null");
    const mmagic::Labeling& value = deref(labeling);
    const mmagic::SpectrumResult result = std::visit(
        [&](const auto& l) { return mmagic::extract_spectrum(l, parse_mode(mode)); }, value);
    if (!result.spectrum) {
      *out_spectrum_json = dup_string(mmagic::report_to_json(result.report).dump(2));
      g_last_error = "spectrum extraction failed";
      return MMAGIC_ERR_VERIFICATION;
    }
    const bool bipolar = std::holds_alternative<mmagic::BipolarPathLabeling>(value);
    *out_spectrum_json = dup_string(mmagic::spectrum_to_json(*result.spectrum, bipolar).dump(2));
    return MMAGIC_OK;
  });
}

int mmagic_generate_document(const char* family, int64_t n, int m, int scale_exp,
                             const char* format, char** out_doc) {
  return guarded([&] {
    if (!out_doc) throw std::invalid_argument("out_doc is null");
    const auto fmt = mmagic::output_format_from_name(format ? format : "json");
    if (!fmt) throw std::invalid_argument("format must be json, dot or table");
    const mmagic::GenerateDocument doc = mmagic::run_generate(parse_family(family), n, m, scale_exp);
    switch (*fmt) {
      case mmagic::OutputFormat::json: *out_doc = dup_string(mmagic::document_to_json(doc)); break;
      case mmagic::OutputFormat::table: *out_doc = dup_string(mmagic::document_to_table(doc)); break;
      case mmagic::OutputFormat::dot: *out_doc = dup_string(mmagic::render_dot(doc.labeling)); break;
    }
    if (!doc.all_passed()) {
      g_last_error = "labeling generated but failed verification";
      return MMAGIC_ERR_VERIFICATION;
    }
    return MMAGIC_OK;
  });
}

int mmagic_oracle_search(const mmagic_oracle_params* params, mmagic_witness_fn on_witness,
                         void* user, mmagic_oracle_outcome* out) {
  return guarded([&] {
    if (!params) throw std::invalid_argument("params is null");
    mmagic::OracleParams p;
    p.n = params->n;
    p.m = params->m;
    p.grid = params->grid;
    p.scale_exp = params->scale_exp > 0 ? params->scale_exp : 2;
    p.mode = parse_mode(params->mode);
    p.family = params->family ? parse_scale_family(params->family)
                              : mmagic::ScaleFamily::anti_fuzzy;
    p.limit = params->limit;
    p.allow_large = params->allow_large != 0;
    p.max_cells = params->max_cells;
    const mmagic::OracleOutcome outcome =
        mmagic::brute_force_search(p, [&](const mmagic::Labeling& witness) {
          if (!on_witness) return true;
          const std::string line = mmagic::labeling_to_json(witness).dump();
          return on_witness(line.c_str(), user) != 0;
        });
    if (out) {
      out->found = outcome.verdict == mmagic::OracleVerdict::found ? 1 : 0;
      out->witnesses_emitted = outcome.witnesses_emitted;
      out->nodes_visited = outcome.nodes_visited;
    }
    return MMAGIC_OK;
  });
}

int mmagic_cross_check(int64_t n, int m, const char* family, int64_t grid,
                       char** out_report_json) {
  return guarded([&] {
    const mmagic::CheckReport report =
        mmagic::cross_check_generator(n, m, parse_scale_family(family), grid);
    if (out_report_json) *out_report_json = dup_string(mmagic::report_to_json(report).dump(2));
    if (!report.passed()) {
      g_last_error = "cross check failed with " + std::to_string(report.violations.size()) +
                     " violation(s)";
      return MMAGIC_ERR_VERIFICATION;
    }
    return MMAGIC_OK;
  });
}

int mmagic_sweep_csv(const char* family, int m_lo, int m_hi, int64_t a_lo, int64_t a_hi,
                     char** out_csv) {
  return guarded([&] {
    if (!out_csv) throw std::invalid_argument("out_csv is null");
    const std::vector<mmagic::SweepRow> rows =
        mmagic::run_sweep(parse_family(family), m_lo, m_hi, a_lo, a_hi);
    *out_csv = dup_string(mmagic::sweep_to_csv(rows));
    return MMAGIC_OK;
  });
}

}  // extern "C"
