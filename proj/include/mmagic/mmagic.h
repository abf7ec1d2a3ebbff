/* mmagic: m-magic labelings of anti-fuzzy and bipolar anti-fuzzy path graphs.
 *
 * C interface to the construction, verification, search and serialization
 * engine. All labels are exact integer multiples of d = 10^-scale_exp; the
 * API never touches floating point for label arithmetic.
 *
 * Conventions:
 *   - every function returns an mmagic_status (MMAGIC_OK = 0 on success);
 *     mmagic_last_error() describes the most recent failure on this thread.
 *   - strings written through char** are allocated by the library and must
 *     be released with mmagic_string_free().
 *   - labelings are opaque handles released with mmagic_labeling_free().
 */
#ifndef MMAGIC_H
#define MMAGIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MMAGIC_API __declspec(dllexport)
#else
#define MMAGIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mmagic_status {
  MMAGIC_OK = 0,
  MMAGIC_ERR_INVALID_ARGUMENT = 1,
  MMAGIC_ERR_INADMISSIBLE = 2,    /* (n, m) fails the admissibility arithmetic */
  MMAGIC_ERR_LABEL_RANGE = 3,     /* a label left (0,1] / [-1,0); scale too coarse */
  MMAGIC_ERR_VERIFICATION = 4,    /* labeling produced but a check failed */
  MMAGIC_ERR_PARSE = 5,           /* malformed JSON or decimal text */
  MMAGIC_ERR_SEARCH_BOUNDS = 6,   /* oracle search space exceeds its bounds */
  MMAGIC_ERR_IO = 7,
  MMAGIC_ERR_INTERNAL = 8
} mmagic_status;

typedef struct mmagic_labeling mmagic_labeling;

MMAGIC_API const char* mmagic_version(void);
MMAGIC_API const char* mmagic_status_name(int status);

/* Message for the most recent failing call on the calling thread. */
MMAGIC_API const char* mmagic_last_error(void);

MMAGIC_API void mmagic_string_free(char* text);
MMAGIC_API void mmagic_labeling_free(mmagic_labeling* labeling);

/* ---- numerics ---------------------------------------------------------- */

/* Scale exponent p for an admissible (n, m) instance of the given family
 * ("anti-fuzzy" or "bipolar"). */
MMAGIC_API int mmagic_select_scale(int64_t n, int m, const char* family, int* out_scale_exp);

/* Renders units * 10^-scale_exp with exactly scale_exp fraction digits. */
MMAGIC_API int mmagic_format_units(int64_t units, int scale_exp, char** out_text);

/* ---- admissibility ------------------------------------------------------ */

typedef struct mmagic_admissibility {
  int admissible;      /* 0 or 1 */
  int64_t a;           /* n = 2m+1+ma when admissible */
  char case_tag[24];   /* "case1-m-even" | "case1-m-odd" | "case2-m-odd" | "not-applicable" */
  char reason[96];
} mmagic_admissibility;

MMAGIC_API int mmagic_admissible(int64_t n, int m, const char* family,
                                 mmagic_admissibility* out);

/* ---- construction ------------------------------------------------------- */

/* family is one of "magic", "bimagic", "m-magic", "bipolar-magic",
 * "bipolar-m-magic"; m is ignored by the fixed-m families. scale_exp = 0
 * selects the tabulated scale. The labeling is returned even when it fails
 * its own conditions (the two-constant scheme from n = 9 on); inspect it
 * with mmagic_verify. */
MMAGIC_API int mmagic_generate(const char* family, int64_t n, int m, int scale_exp,
                               mmagic_labeling** out);

/* ---- labeling access ---------------------------------------------------- */

/* 0 = anti-fuzzy, 1 = bipolar. */
MMAGIC_API int mmagic_labeling_kind(const mmagic_labeling* labeling, int* out_kind);
MMAGIC_API int mmagic_labeling_vertex_count(const mmagic_labeling* labeling, int64_t* out_n);
MMAGIC_API int mmagic_labeling_scale_exp(const mmagic_labeling* labeling, int* out_scale_exp);

typedef enum mmagic_sequence {
  MMAGIC_SEQ_SIGMA = 0,   /* sigma, or sigma_p on bipolar labelings */
  MMAGIC_SEQ_MU = 1,      /* mu, or mu_p */
  MMAGIC_SEQ_SIGMA_N = 2, /* bipolar only */
  MMAGIC_SEQ_MU_N = 3     /* bipolar only */
} mmagic_sequence;

/* Copies a sequence into buf (holding capacity entries) and stores its
 * length in out_len. buf may be NULL to query the length alone. */
MMAGIC_API int mmagic_labeling_units(const mmagic_labeling* labeling, int sequence, int64_t* buf,
                                     size_t capacity, size_t* out_len);

/* ---- serialization ------------------------------------------------------ */

MMAGIC_API int mmagic_labeling_to_json(const mmagic_labeling* labeling, char** out_json);

/* Accepts a labeling object or a document that carries one under
 * "labeling"; the integer units arrays are authoritative. */
MMAGIC_API int mmagic_labeling_from_json(const char* json_text, mmagic_labeling** out);

MMAGIC_API int mmagic_render_dot(const mmagic_labeling* labeling, char** out_dot);

/* ---- verification ------------------------------------------------------- */

/* Spectrum count + anti-fuzzy conditions; mode is "strict" or "lax".
 * Returns MMAGIC_OK when every check passes and MMAGIC_ERR_VERIFICATION when
 * the labeling fails (the JSON report is produced either way). */
MMAGIC_API int mmagic_verify(const mmagic_labeling* labeling, int expected_m, const char* mode,
                             char** out_report_json);

/* Extracted constants against the family's closed forms. */
MMAGIC_API int mmagic_conformance(const mmagic_labeling* labeling, int m, const char* family,
                                  char** out_report_json);

MMAGIC_API int mmagic_spectrum(const mmagic_labeling* labeling, const char* mode,
                               char** out_spectrum_json);

/* ---- generate pipeline -------------------------------------------------- */

/* Admissibility -> scale -> generator -> verification + conformance, rendered
 * as "json", "table" or "dot". MMAGIC_ERR_VERIFICATION still sets out_doc so
 * callers can show the failing labeling. */
MMAGIC_API int mmagic_generate_document(const char* family, int64_t n, int m, int scale_exp,
                                        const char* format, char** out_doc);

/* ---- oracle -------------------------------------------------------------- */

typedef struct mmagic_oracle_params {
  int64_t n;
  int m;
  int64_t grid;        /* labels range over {1..grid} units */
  int scale_exp;       /* 0 = 2 */
  const char* mode;    /* "strict" | "lax"; NULL = "lax" */
  const char* family;  /* "anti-fuzzy" | "bipolar"; NULL = "anti-fuzzy" */
  int64_t limit;       /* stop after this many witnesses; must be >= 1 */
  int allow_large;     /* lift the n <= 7 / grid <= 40 guard */
  double max_cells;    /* <= 0: honour MMAGIC_MAX_ORACLE_CELLS if set */
} mmagic_oracle_params;

typedef struct mmagic_oracle_outcome {
  int found;                 /* 1 = found, 0 = exhausted-none */
  int64_t witnesses_emitted;
  uint64_t nodes_visited;
} mmagic_oracle_outcome;

/* Called once per witness with its one-line JSON document, in deterministic
 * lexicographic order; return 0 to stop the search. */
typedef int (*mmagic_witness_fn)(const char* witness_json, void* user);

MMAGIC_API int mmagic_oracle_search(const mmagic_oracle_params* params, mmagic_witness_fn on_witness,
                                    void* user, mmagic_oracle_outcome* out);

/* Confirms the closed-form output for (family, n, m) lies in the oracle's
 * feasible set on a grid of `grid` units (0 = the labeling's own maximum).
 * MMAGIC_ERR_VERIFICATION on failure, with the report in out_report_json. */
MMAGIC_API int mmagic_cross_check(int64_t n, int m, const char* family, int64_t grid,
                                  char** out_report_json);

/* ---- sweep --------------------------------------------------------------- */

/* CSV with one row per instance n = 2m+1+ma, m in [m_lo, m_hi], a in
 * [a_lo, a_hi]; family is "m-magic" or "bipolar-m-magic". */
MMAGIC_API int mmagic_sweep_csv(const char* family, int m_lo, int m_hi, int64_t a_lo, int64_t a_hi,
                                char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* MMAGIC_H */
