#include <stdio.h>
#include <string.h>
#include "ternion.h"

#define CHECK(expr)                                                        \
  do {                                                                     \
    if ((expr) != TERNION_STATUS_OK) {                                     \
      fprintf(stderr, "%s failed: %s\n", #expr, ternion_last_error());     \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  TernionMat3 *q[9];
  for (size_t i = 0; i < 9; i++) CHECK(ternion_mat3_basis(TERNION_BASIS_NONION, i, &q[i]));

  TernionMat3 *b = NULL;
  CHECK(ternion_mat3_bracket(q[1], q[2], q[3], &b));
  TernionField *c[9];
  CHECK(ternion_mat3_decompose(TERNION_BASIS_NONION, b, c));
  char *s = NULL;
  CHECK(ternion_field_to_string(c[0], &s));
  printf("{1,2,3} -> (%s) q0\n", s);
  ternion_string_free(s);

  TernionField *det = NULL;
  CHECK(ternion_mat3_det(q[1], &det));
  double re = 0, im = 0;
  CHECK(ternion_field_approx(det, &re, &im));
  printf("det q1 = %.1f%+.1fi\n", re, im);

  uint64_t dim = 0;
  CHECK(ternion_clifford_dimension(6, &dim));
  printf("dim = %llu\n", (unsigned long long)dim);

  TernionField *zero = NULL;
  TernionField *quotient = NULL;
  CHECK(ternion_field_from_rational("0", &zero));
  TernionStatus st = ternion_field_div(det, zero, &quotient);
  printf("div status = %d (%s)\n", (int)st, ternion_last_error());

  for (size_t i = 0; i < 9; i++) {
    ternion_field_free(c[i]);
    ternion_mat3_free(q[i]);
  }
  ternion_mat3_free(b);
  ternion_field_free(det);
  ternion_field_free(zero);
  return st == TERNION_STATUS_DIVISION_BY_ZERO ? 0 : 1;
}
