#include <stdio.h>
#include <string.h>

#include "qnewton.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  QnPoset *p = NULL;
  QnResult *r = NULL;
  char *s = NULL;
  int32_t passed = -1;

  /* 2-element antichain */
  CHECK(qn_poset_from_json("{\"m\": 2, \"covers\": []}", &p) == QN_STATUS_OK);
  CHECK(qn_poset_len(p) == 2);
  CHECK(qn_compute(p, 0, &r) == QN_STATUS_OK);

  CHECK(qn_result_polynomial(r, QN_POLYNOMIAL_PHI, &s) == QN_STATUS_OK);
  CHECK(strcmp(s, "q + 1") == 0);
  qn_string_free(s);

  CHECK(qn_result_polynomial(r, QN_POLYNOMIAL_N, &s) == QN_STATUS_OK);
  CHECK(strcmp(s, "q^2*x^2 + 2*q*x + 1") == 0);
  qn_string_free(s);

  CHECK(qn_result_phi_degree(r) == 1);

  CHECK(qn_result_newton_tsv(r, QN_POLYNOMIAL_N, &s) == QN_STATUS_OK);
  CHECK(strcmp(s, "0\t0\n2\t2\n") == 0);
  qn_string_free(s);

  CHECK(qn_verify(p, 0, 0, &passed, NULL) == QN_STATUS_OK);
  CHECK(passed == 1);

  qn_result_free(r);
  qn_poset_free(p);

  /* a cycle is rejected with a message */
  size_t pairs[] = {1, 2, 2, 1};
  p = NULL;
  CHECK(qn_poset_from_covers(2, pairs, 2, &p) == QN_STATUS_INVALID_INPUT);
  CHECK(p == NULL);
  CHECK(strlen(qn_last_error_message()) > 0);

  CHECK(qn_compute(NULL, 0, &r) == QN_STATUS_NULL_POINTER);

  printf("ok %s\n", qn_version());
  return 0;
}
