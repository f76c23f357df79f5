/*
   Copyright 2026 quatpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of libquatpol: exact polynomial calculus and interpolation
 * over the rational quaternions.
 *
 * Conventions:
 *   - All objects are opaque handles created and destroyed by this library.
 *   - Every fallible call returns a qp_status; outputs are written through
 *     out-parameters only on QP_OK. A human-readable message for the last
 *     failure of the calling thread is available from qp_last_error().
 *   - Codes in the 1..9 range are hard errors (malformed input, shape or
 *     precondition violations). Codes from 10 up describe well-posed
 *     problems whose answer is "no such object".
 *   - Strings returned through char** are heap-allocated; release them with
 *     qp_string_free.
 *   - Polynomial coefficient arrays are indexed by degree (lowest first).
 *     Matrix entry arrays are row-major.
 */

#ifndef QUATPOL_QUATPOL_H
#define QUATPOL_QUATPOL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qp_status {
  QP_OK = 0,

  QP_ERR_PARSE = 1,
  QP_ERR_DIMENSION = 2,
  QP_ERR_DOMAIN = 3,
  QP_ERR_INTERNAL = 4,

  QP_NO_SOLUTION = 10,
  QP_NOT_CONTROLLABLE = 11,
  QP_NOT_OBSERVABLE = 12,
  QP_NOT_SIMILAR = 13,
  QP_NOT_FOUND = 14,
  QP_NODES_NOT_P_INDEPENDENT = 15,
  QP_TRIVIALLY_NOT_SIMILAR = 16,
  QP_NO_WITNESS_FOUND = 17,
  QP_SINGULAR = 18
} qp_status;

typedef enum qp_side { QP_SIDE_LEFT = 0, QP_SIDE_RIGHT = 1 } qp_side;

typedef struct qp_quat qp_quat;
typedef struct qp_poly qp_poly;
typedef struct qp_mat qp_mat;
typedef struct qp_family qp_family;
typedef struct qp_mat_list qp_mat_list;
typedef struct qp_poly_list qp_poly_list;

const char* qp_last_error(void);
void qp_string_free(char* s);

/* ---- quaternions ---- */

qp_status qp_quat_parse(const char* text, qp_quat** out);
qp_status qp_quat_to_string(const qp_quat* q, char** out);
void qp_quat_free(qp_quat* q);
qp_status qp_quat_add(const qp_quat* x, const qp_quat* y, qp_quat** out);
qp_status qp_quat_sub(const qp_quat* x, const qp_quat* y, qp_quat** out);
qp_status qp_quat_mul(const qp_quat* x, const qp_quat* y, qp_quat** out);
qp_status qp_quat_invert(const qp_quat* q, qp_quat** out);
qp_status qp_quat_conjugate(const qp_quat* q, qp_quat** out);
int qp_quat_is_central(const qp_quat* q);
int qp_quat_is_zero(const qp_quat* q);
int qp_quat_equal(const qp_quat* x, const qp_quat* y);

/* ---- polynomials (central variable z, quaternion coefficients) ---- */

qp_status qp_poly_create(const qp_quat* const* coeffs, size_t count, qp_poly** out);
/* Display form, e.g. "z^2 + (1+2i)z - 3/4". */
qp_status qp_poly_parse(const char* text, qp_poly** out);
/* -1 for the zero polynomial. */
int qp_poly_degree(const qp_poly* f);
qp_status qp_poly_coeff(const qp_poly* f, size_t m, qp_quat** out);
qp_status qp_poly_to_string(const qp_poly* f, char** out);
void qp_poly_free(qp_poly* f);
int qp_poly_equal(const qp_poly* f, const qp_poly* g);
qp_status qp_poly_add(const qp_poly* f, const qp_poly* g, qp_poly** out);
qp_status qp_poly_sub(const qp_poly* f, const qp_poly* g, qp_poly** out);
qp_status qp_poly_mul(const qp_poly* f, const qp_poly* g, qp_poly** out);
/* f = divisor * quotient + remainder (left) or quotient * divisor + remainder
 * (right); the divisor must be monic. */
qp_status qp_poly_divide(const qp_poly* f, const qp_poly* divisor, qp_side side,
                         qp_poly** quotient, qp_poly** remainder);
qp_status qp_poly_backward_shift(const qp_poly* f, size_t j, qp_poly** out);
qp_status qp_poly_eval_scalar(const qp_poly* f, const qp_quat* alpha, qp_side side, qp_quat** out);
qp_status qp_poly_eval_matrix(const qp_poly* f, const qp_mat* a, qp_side side, qp_mat** out);
qp_status qp_poly_companion(const qp_poly* p, qp_side side, qp_mat** out);

/* ---- matrices ---- */

qp_status qp_mat_create(size_t rows, size_t cols, const qp_quat* const* entries, qp_mat** out);
/* Display form "[[1, i], [0, 1-j]]". */
qp_status qp_mat_parse(const char* text, qp_mat** out);
size_t qp_mat_rows(const qp_mat* m);
size_t qp_mat_cols(const qp_mat* m);
qp_status qp_mat_entry(const qp_mat* m, size_t i, size_t j, qp_quat** out);
qp_status qp_mat_to_string(const qp_mat* m, char** out);
void qp_mat_free(qp_mat* m);
int qp_mat_equal(const qp_mat* x, const qp_mat* y);
qp_status qp_mat_add(const qp_mat* x, const qp_mat* y, qp_mat** out);
qp_status qp_mat_sub(const qp_mat* x, const qp_mat* y, qp_mat** out);
qp_status qp_mat_mul(const qp_mat* x, const qp_mat* y, qp_mat** out);
qp_status qp_mat_invert(const qp_mat* a, qp_mat** out); /* QP_SINGULAR when rank < n */

/* (v f)^{el}(A) for side = left (vec is a column), (f vec)^{er}(A) for
 * side = right (vec is a row). */
qp_status qp_eval_tangential(const qp_mat* vec, const qp_poly* f, const qp_mat* a, qp_side side,
                             qp_mat** out);
/* (v f u)^{ets}(A, B). */
qp_status qp_eval_two_sided(const qp_mat* v, const qp_poly* f, const qp_mat* u, const qp_mat* a,
                            const qp_mat* b, qp_mat** out);

/* ---- controllable/observable pairs ---- */

/* side = left: input pair (a, vec) with vec a column; side = right: output
 * pair (vec, a) with vec a row. `full` reports controllability resp.
 * observability (degree == n). */
qp_status qp_minpoly_pair(const qp_mat* a, const qp_mat* vec, qp_side side, qp_poly** poly,
                          size_t* degree, int* full);
qp_status qp_matrix_minpolys(const qp_mat* a, qp_poly** left, qp_poly** right);
qp_status qp_central_minpoly(const qp_mat* a, qp_poly** out);
qp_status qp_lrcm(const qp_poly* const* fs, size_t count, qp_poly** out);
qp_status qp_llcm(const qp_poly* const* fs, size_t count, qp_poly** out);
/* QP_NOT_CONTROLLABLE / QP_NOT_OBSERVABLE when the reduction is impossible. */
qp_status qp_canonical_form(const qp_mat* a, const qp_mat* vec, qp_side side, qp_mat** companion,
                            qp_mat** basis_change, qp_poly** minpoly);
qp_status qp_pairs_similar(const qp_mat* a1, const qp_mat* vec1, const qp_mat* a2,
                           const qp_mat* vec2, qp_side side, qp_mat** t);
qp_status qp_p_independent(const qp_quat* const* nodes, size_t count, qp_side side, int* out);
qp_status qp_gamma_matrix(const qp_quat* const* gammas, size_t count, qp_mat** out);
qp_status qp_find_cyclic_vector(const qp_mat* a, size_t trials, uint64_t seed, qp_mat** v);
/* QP_OK with a certified witness, QP_TRIVIALLY_NOT_SIMILAR, or
 * QP_NO_WITNESS_FOUND (inconclusive). */
qp_status qp_polys_similar(const qp_poly* f, const qp_poly* g, size_t trials, uint64_t seed,
                           qp_poly** h, qp_poly** h_prime);

/* ---- interpolation ---- */

qp_status qp_solve_left(const qp_mat* a, const qp_mat* v, const qp_mat* b, qp_family** out);
qp_status qp_solve_right(const qp_mat* u, const qp_mat* b_mat, const qp_mat* d, qp_family** out);
qp_status qp_solve_matrix_target(const qp_mat* a, const qp_mat* target, qp_family** out);
qp_status qp_solve_sylvester(const qp_mat* a, const qp_mat* b, const qp_mat* c,
                             qp_mat** particular, qp_mat_list** nullspace);
qp_status qp_solve_tsp(const qp_mat* a, const qp_mat* v, const qp_mat* u, const qp_mat* b_mat,
                       const qp_mat* b, const qp_mat* d, qp_family** out);
qp_status qp_solve_atsp(const qp_mat* a, const qp_mat* v, const qp_mat* u, const qp_mat* b_mat,
                        const qp_mat* b, const qp_mat* d, const qp_mat* s, qp_poly** out);
/* The solution is unique up to a free additive constant. */
qp_status qp_solve_two_sided_only(const qp_mat* a, const qp_mat* v, const qp_mat* u,
                                  const qp_mat* b_mat, const qp_mat* s, qp_poly** particular);
qp_status qp_quasi_ideal_basis(const qp_poly* p, const qp_poly* q, qp_mat_list** xs,
                               qp_poly_list** fs);
qp_status qp_lagrange(const qp_quat* const* left_nodes, const qp_quat* const* left_values,
                      size_t left_count, const qp_quat* const* right_nodes,
                      const qp_quat* const* right_values, size_t right_count, qp_family** out);

/* ---- solution families ---- */

qp_status qp_family_particular(const qp_family* fam, qp_poly** out);
int qp_family_has_left_modulus(const qp_family* fam);
int qp_family_has_right_modulus(const qp_family* fam);
qp_status qp_family_left_modulus(const qp_family* fam, qp_poly** out);
qp_status qp_family_right_modulus(const qp_family* fam, qp_poly** out);
int qp_family_has_sylvester_particular(const qp_family* fam);
qp_status qp_family_sylvester_particular(const qp_family* fam, qp_mat** out);
size_t qp_family_nullspace_count(const qp_family* fam);
qp_status qp_family_nullspace_at(const qp_family* fam, size_t i, qp_mat** out);
void qp_family_free(qp_family* fam);

/* ---- lists ---- */

size_t qp_mat_list_count(const qp_mat_list* l);
qp_status qp_mat_list_at(const qp_mat_list* l, size_t i, qp_mat** out);
void qp_mat_list_free(qp_mat_list* l);
size_t qp_poly_list_count(const qp_poly_list* l);
qp_status qp_poly_list_at(const qp_poly_list* l, size_t i, qp_poly** out);
void qp_poly_list_free(qp_poly_list* l);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QUATPOL_QUATPOL_H */
