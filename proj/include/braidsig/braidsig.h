/*
 * braidsig C API.
 *
 * Invariants of positive braid closures behind opaque handles. Every call
 * returns a braidsig_status; on failure braidsig_last_error() describes the
 * problem for the calling thread. Strings returned through char** belong to
 * the caller and are released with braidsig_string_free().
 */
#ifndef BRAIDSIG_H
#define BRAIDSIG_H

#include <stddef.h>
#include <stdint.h>

#if defined(BRAIDSIG_BUILDING)
#define BRAIDSIG_API __attribute__((visibility("default")))
#else
#define BRAIDSIG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum braidsig_status {
  BRAIDSIG_OK = 0,
  BRAIDSIG_E_PARSE = 1,
  BRAIDSIG_E_INDEX_RANGE = 2,
  BRAIDSIG_E_PRECONDITION = 3,
  BRAIDSIG_E_INCONSISTENT = 4,
  BRAIDSIG_E_ARGUMENT = 5,
  BRAIDSIG_E_OVERFLOW = 6,
  BRAIDSIG_E_INTERNAL = 99
} braidsig_status;

typedef struct braidsig_word braidsig_word;
typedef struct braidsig_sweep braidsig_sweep;

typedef enum braidsig_format {
  BRAIDSIG_FORMAT_TEXT = 0,
  BRAIDSIG_FORMAT_JSON = 1,
  BRAIDSIG_FORMAT_CSV = 2
} braidsig_format;

typedef struct braidsig_triple {
  int positive;
  int negative;
  int zero;
} braidsig_triple;

typedef struct braidsig_interval {
  double lo;
  double hi;
} braidsig_interval;

typedef struct braidsig_cut {
  int betti_sub;
  int betti_full;
  int delta_betti;
  int ok;       /* delta_sigma <= 2 * delta_betti */
  int twist_ok; /* delta_sigma <= 2 * twist */
} braidsig_cut;

typedef struct braidsig_certificate {
  int dots;
  int residue;
  int class_dots;
  int count;
  int ok_lower;  /* 21 * count >= twist */
  int ok_defect; /* 2 * count <= delta_sigma */
} braidsig_certificate;

typedef struct braidsig_sweep_spec {
  int strands_min, strands_max;
  int syllables_min, syllables_max;
  const int* exponents;
  size_t exponent_count;
  int cyclic_dedup;
  int require_sufficiently_complicated;
  int require_hyperbolic;
  size_t limit;        /* 0: unlimited */
  size_t random_count; /* 0: exhaustive enumeration */
  uint64_t seed;
  int exhaustive_twist;
  unsigned threads; /* 0: hardware concurrency */
} braidsig_sweep_spec;

BRAIDSIG_API const char* braidsig_version(void);
BRAIDSIG_API const char* braidsig_last_error(void);
BRAIDSIG_API void braidsig_string_free(char* s);

/* Fills a spec with the defaults: strands 3..3, syllables 4..4,
 * exponents {3}, cyclic deduplication on, no filters. */
BRAIDSIG_API void braidsig_sweep_spec_init(braidsig_sweep_spec* spec);

/* Braid words. strands <= 0 infers max(index) + 1. */
BRAIDSIG_API braidsig_status braidsig_word_parse(const char* text, int strands, braidsig_word** out);
BRAIDSIG_API void braidsig_word_free(braidsig_word* w);
BRAIDSIG_API int braidsig_word_strands(const braidsig_word* w);
BRAIDSIG_API size_t braidsig_word_length(const braidsig_word* w);
BRAIDSIG_API braidsig_status braidsig_word_letters(const braidsig_word* w, int* letters, size_t capacity);
BRAIDSIG_API braidsig_status braidsig_word_text(const braidsig_word* w, char** out);
BRAIDSIG_API braidsig_status braidsig_word_normal_form(const braidsig_word* w, char** out);

BRAIDSIG_API braidsig_status braidsig_components(const braidsig_word* w, int* out);
BRAIDSIG_API braidsig_status braidsig_twist_number(const braidsig_word* w, int exhaustive, int* out);
BRAIDSIG_API braidsig_status braidsig_sufficiently_complicated(const braidsig_word* w, int* out);
BRAIDSIG_API braidsig_status braidsig_hyperbolicity_criterion(const braidsig_word* w, int* out);

/* Fiber surface and Seifert form. */
BRAIDSIG_API braidsig_status braidsig_betti(const braidsig_word* w, int* b1, int* surface_components);
/* Writes size*size entries of V, row-major, when capacity allows; *size is
 * always set. */
BRAIDSIG_API braidsig_status braidsig_seifert_matrix(const braidsig_word* w, int64_t* entries, size_t capacity,
                                                     size_t* size);
BRAIDSIG_API braidsig_status braidsig_link_inertia(const braidsig_word* w, braidsig_triple* out);
BRAIDSIG_API braidsig_status braidsig_signature(const braidsig_word* w, int* out);
BRAIDSIG_API braidsig_status braidsig_signature_defect(const braidsig_word* w, int* out);

/* Inertia of a symmetric dim x dim integer matrix, row-major. */
BRAIDSIG_API braidsig_status braidsig_inertia(const int64_t* entries, size_t dim, braidsig_triple* out);

/* Bounds. printed_constants selects the five-digit constants. */
BRAIDSIG_API braidsig_status braidsig_defect_volume_bounds(int delta_sigma, int printed_constants,
                                                           braidsig_interval* out);
BRAIDSIG_API braidsig_status braidsig_twist_volume_bounds(int twist, int printed_constants, braidsig_interval* out);
BRAIDSIG_API int braidsig_twist_defect_check(int delta_sigma, int twist);
BRAIDSIG_API braidsig_status braidsig_cut_bound(const braidsig_word* w, braidsig_cut* out);
BRAIDSIG_API braidsig_status braidsig_certificate_check(const braidsig_word* w, braidsig_certificate* out);

/* Renderings used by the command line tool. */
BRAIDSIG_API braidsig_status braidsig_render_invariants(const braidsig_word* w, int exhaustive_twist,
                                                        braidsig_format format, char** out);
BRAIDSIG_API braidsig_status braidsig_render_matrix(const braidsig_word* w, int with_inertia, braidsig_format format,
                                                    char** out);
BRAIDSIG_API braidsig_status braidsig_render_extract(const braidsig_word* w, braidsig_format format, char** out);
BRAIDSIG_API braidsig_status braidsig_render_bounds(int delta_sigma, int twist, int printed_constants,
                                                    braidsig_format format, char** out);

/* Enumeration: one word per line, in the input grammar. */
BRAIDSIG_API braidsig_status braidsig_enumerate(const braidsig_sweep_spec* spec, braidsig_format format, char** out);

/* Verification sweeps. */
BRAIDSIG_API braidsig_status braidsig_sweep_run(const braidsig_sweep_spec* spec, braidsig_sweep** out);
BRAIDSIG_API void braidsig_sweep_free(braidsig_sweep* sweep);
BRAIDSIG_API size_t braidsig_sweep_rows(const braidsig_sweep* sweep);
BRAIDSIG_API size_t braidsig_sweep_qualifying(const braidsig_sweep* sweep);
BRAIDSIG_API size_t braidsig_sweep_failures(const braidsig_sweep* sweep);
/* TEXT gives the summary, CSV and JSON the per-word rows. */
BRAIDSIG_API braidsig_status braidsig_sweep_render(const braidsig_sweep* sweep, braidsig_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDSIG_H */
