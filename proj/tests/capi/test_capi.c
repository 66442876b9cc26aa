/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "braidsig/braidsig.h"

static int failed = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      failed = 1;                                                  \
    }                                                              \
  } while (0)

static void test_words(void) {
  braidsig_word* w = NULL;
  EXPECT(braidsig_word_parse("1^3 2^3 1^3 2^3", 0, &w) == BRAIDSIG_OK);
  EXPECT(braidsig_word_strands(w) == 3);
  EXPECT(braidsig_word_length(w) == 12);

  int letters[12];
  EXPECT(braidsig_word_letters(w, letters, 12) == BRAIDSIG_OK);
  EXPECT(letters[0] == 1 && letters[3] == 2 && letters[11] == 2);
  EXPECT(braidsig_word_letters(w, letters, 4) == BRAIDSIG_E_ARGUMENT);

  char* text = NULL;
  EXPECT(braidsig_word_text(w, &text) == BRAIDSIG_OK);
  EXPECT(text && strcmp(text, "1^3 2^3 1^3 2^3") == 0);
  braidsig_string_free(text);

  int value = -1;
  EXPECT(braidsig_twist_number(w, 0, &value) == BRAIDSIG_OK && value == 4);
  EXPECT(braidsig_twist_number(w, 1, &value) == BRAIDSIG_OK && value == 4);
  EXPECT(braidsig_sufficiently_complicated(w, &value) == BRAIDSIG_OK && value == 1);
  EXPECT(braidsig_hyperbolicity_criterion(w, &value) == BRAIDSIG_OK && value == 1);
  EXPECT(braidsig_signature(w, &value) == BRAIDSIG_OK && value == 8);
  EXPECT(braidsig_signature_defect(w, &value) == BRAIDSIG_OK && value == 2);

  int b1 = 0, s = 0;
  EXPECT(braidsig_betti(w, &b1, &s) == BRAIDSIG_OK && b1 == 10 && s == 1);

  size_t size = 0;
  EXPECT(braidsig_seifert_matrix(w, NULL, 0, &size) == BRAIDSIG_OK && size == 10);
  int64_t* v = malloc(sizeof(int64_t) * size * size);
  EXPECT(braidsig_seifert_matrix(w, v, size * size, &size) == BRAIDSIG_OK);
  EXPECT(v[0] == -1);
  free(v);

  braidsig_cut cut;
  EXPECT(braidsig_cut_bound(w, &cut) == BRAIDSIG_OK && cut.delta_betti == 2 && cut.ok);
  braidsig_certificate cert;
  EXPECT(braidsig_certificate_check(w, &cert) == BRAIDSIG_OK && cert.count == 1 && cert.dots == 4);
  EXPECT(cert.ok_lower && cert.ok_defect);

  char* json = NULL;
  EXPECT(braidsig_render_invariants(w, 0, BRAIDSIG_FORMAT_JSON, &json) == BRAIDSIG_OK);
  EXPECT(json && strstr(json, "\"delta_sigma\": 2") != NULL);
  braidsig_string_free(json);

  braidsig_word_free(w);
}

static void test_errors(void) {
  braidsig_word* w = NULL;
  EXPECT(braidsig_word_parse("1^", 0, &w) == BRAIDSIG_E_PARSE && w == NULL);
  EXPECT(strlen(braidsig_last_error()) > 0);
  EXPECT(braidsig_word_parse("0", 0, &w) == BRAIDSIG_E_INDEX_RANGE);
  EXPECT(braidsig_word_parse("3", 3, &w) == BRAIDSIG_E_INDEX_RANGE);
  EXPECT(braidsig_word_parse(NULL, 0, &w) == BRAIDSIG_E_ARGUMENT);
  EXPECT(braidsig_word_parse("1", 0, NULL) == BRAIDSIG_E_ARGUMENT);

  braidsig_interval iv;
  EXPECT(braidsig_defect_volume_bounds(0, 0, &iv) == BRAIDSIG_E_INCONSISTENT);
  EXPECT(braidsig_twist_volume_bounds(1, 0, &iv) == BRAIDSIG_E_PRECONDITION);
  EXPECT(braidsig_twist_volume_bounds(4, 0, &iv) == BRAIDSIG_OK);
  EXPECT(iv.lo > 9.77 && iv.lo < 9.771 && iv.hi > 30.448 && iv.hi < 30.4483);
  EXPECT(braidsig_twist_defect_check(2, 4) == 1);
  EXPECT(braidsig_twist_defect_check(2, 22) == 0);

  braidsig_word_free(NULL);
  braidsig_string_free(NULL);
}

static void test_inertia(void) {
  const int64_t hyperbolic[4] = {0, 1, 1, 0};
  const int64_t skew[4] = {0, 1, -1, 0};
  braidsig_triple t;
  EXPECT(braidsig_inertia(hyperbolic, 2, &t) == BRAIDSIG_OK);
  EXPECT(t.positive == 1 && t.negative == 1 && t.zero == 0);
  EXPECT(braidsig_inertia(skew, 2, &t) == BRAIDSIG_E_ARGUMENT);
  EXPECT(braidsig_inertia(NULL, 0, &t) == BRAIDSIG_OK && t.positive + t.negative + t.zero == 0);
}

static void test_sweep(void) {
  const int exps[2] = {3, 4};
  braidsig_sweep_spec spec;
  braidsig_sweep_spec_init(&spec);
  spec.strands_max = 4;
  spec.exponents = exps;
  spec.exponent_count = 2;
  spec.require_sufficiently_complicated = 1;
  spec.require_hyperbolic = 1;

  char* words = NULL;
  EXPECT(braidsig_enumerate(&spec, BRAIDSIG_FORMAT_TEXT, &words) == BRAIDSIG_OK);
  EXPECT(words && strncmp(words, "1^3 2^3 1^3 2^3\n", 16) == 0);
  braidsig_string_free(words);

  braidsig_sweep* sweep = NULL;
  EXPECT(braidsig_sweep_run(&spec, &sweep) == BRAIDSIG_OK);
  EXPECT(braidsig_sweep_rows(sweep) > 0);
  EXPECT(braidsig_sweep_rows(sweep) == braidsig_sweep_qualifying(sweep));
  EXPECT(braidsig_sweep_failures(sweep) == 0);
  char* csv = NULL;
  EXPECT(braidsig_sweep_render(sweep, BRAIDSIG_FORMAT_CSV, &csv) == BRAIDSIG_OK);
  EXPECT(csv && strncmp(csv, "word,strands,letters", 20) == 0);
  braidsig_string_free(csv);
  braidsig_sweep_free(sweep);

  spec.exponent_count = 0;
  EXPECT(braidsig_sweep_run(&spec, &sweep) == BRAIDSIG_E_ARGUMENT);
}

int main(void) {
  EXPECT(strlen(braidsig_version()) > 0);
  test_words();
  test_errors();
  test_inertia();
  test_sweep();
  if (failed) return 1;
  printf("capi ok\n");
  return 0;
}
