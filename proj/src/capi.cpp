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

#include "quatpol/quatpol.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "interp.hpp"

using namespace quatpol;

struct qp_quat {
  Quaternion v;
};
struct qp_poly {
  SkewPoly v;
};
struct qp_mat {
  Matrix v;
};
struct qp_family {
  SolutionFamily v;
};
struct qp_mat_list {
  std::vector<Matrix> v;
};
struct qp_poly_list {
  std::vector<SkewPoly> v;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <class Fn>
qp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_error(e.what());
    return QP_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QP_ERR_DIMENSION;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return QP_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QP_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Side to_side(qp_side s) { return s == QP_SIDE_LEFT ? Side::Left : Side::Right; }

qp_status map_solve_status(SolveStatus s, const char* context) {
  set_error(context);
  switch (s) {
    case SolveStatus::Solved: return QP_OK;
    case SolveStatus::NoSolution: return QP_NO_SOLUTION;
    case SolveStatus::NotControllable: return QP_NOT_CONTROLLABLE;
    case SolveStatus::NotObservable: return QP_NOT_OBSERVABLE;
    case SolveStatus::NodesNotPIndependent: return QP_NODES_NOT_P_INDEPENDENT;
  }
  return QP_ERR_INTERNAL;
}

std::vector<Quaternion> collect_quats(const qp_quat* const* qs, size_t count) {
  std::vector<Quaternion> out;
  out.reserve(count);
  for (size_t t = 0; t < count; ++t) out.push_back(qs[t]->v);
  return out;
}

std::vector<SkewPoly> collect_polys(const qp_poly* const* fs, size_t count) {
  std::vector<SkewPoly> out;
  out.reserve(count);
  for (size_t t = 0; t < count; ++t) out.push_back(fs[t]->v);
  return out;
}

}  // namespace

extern "C" {

const char* qp_last_error(void) { return g_last_error.c_str(); }

void qp_string_free(char* s) { std::free(s); }

/* ---- quaternions ---- */

qp_status qp_quat_parse(const char* text, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{parse_quaternion(text)};
    return QP_OK;
  });
}

qp_status qp_quat_to_string(const qp_quat* q, char** out) {
  return guarded([&] {
    *out = dup_string(to_string(q->v));
    return QP_OK;
  });
}

void qp_quat_free(qp_quat* q) { delete q; }

qp_status qp_quat_add(const qp_quat* x, const qp_quat* y, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{x->v + y->v};
    return QP_OK;
  });
}

qp_status qp_quat_sub(const qp_quat* x, const qp_quat* y, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{x->v - y->v};
    return QP_OK;
  });
}

qp_status qp_quat_mul(const qp_quat* x, const qp_quat* y, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{x->v * y->v};
    return QP_OK;
  });
}

qp_status qp_quat_invert(const qp_quat* q, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{q->v.inverse()};
    return QP_OK;
  });
}

qp_status qp_quat_conjugate(const qp_quat* q, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{q->v.conjugate()};
    return QP_OK;
  });
}

int qp_quat_is_central(const qp_quat* q) { return q->v.is_central() ? 1 : 0; }
int qp_quat_is_zero(const qp_quat* q) { return q->v.is_zero() ? 1 : 0; }
int qp_quat_equal(const qp_quat* x, const qp_quat* y) { return x->v == y->v ? 1 : 0; }

/* ---- polynomials ---- */

qp_status qp_poly_create(const qp_quat* const* coeffs, size_t count, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{SkewPoly(collect_quats(coeffs, count))};
    return QP_OK;
  });
}

qp_status qp_poly_parse(const char* text, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{parse_poly(text)};
    return QP_OK;
  });
}

int qp_poly_degree(const qp_poly* f) { return f->v.degree(); }

qp_status qp_poly_coeff(const qp_poly* f, size_t m, qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{f->v.coeff(m)};
    return QP_OK;
  });
}

qp_status qp_poly_to_string(const qp_poly* f, char** out) {
  return guarded([&] {
    *out = dup_string(to_string(f->v));
    return QP_OK;
  });
}

void qp_poly_free(qp_poly* f) { delete f; }

int qp_poly_equal(const qp_poly* f, const qp_poly* g) { return f->v == g->v ? 1 : 0; }

qp_status qp_poly_add(const qp_poly* f, const qp_poly* g, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{f->v + g->v};
    return QP_OK;
  });
}

qp_status qp_poly_sub(const qp_poly* f, const qp_poly* g, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{f->v - g->v};
    return QP_OK;
  });
}

qp_status qp_poly_mul(const qp_poly* f, const qp_poly* g, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{f->v * g->v};
    return QP_OK;
  });
}

qp_status qp_poly_divide(const qp_poly* f, const qp_poly* divisor, qp_side side,
                         qp_poly** quotient, qp_poly** remainder) {
  return guarded([&] {
    const DivisionResult res = side == QP_SIDE_LEFT ? left_divide(f->v, divisor->v)
                                                    : right_divide(f->v, divisor->v);
    *quotient = new qp_poly{res.quotient};
    *remainder = new qp_poly{res.remainder};
    return QP_OK;
  });
}

qp_status qp_poly_backward_shift(const qp_poly* f, size_t j, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{backward_shift(f->v, j)};
    return QP_OK;
  });
}

qp_status qp_poly_eval_scalar(const qp_poly* f, const qp_quat* alpha, qp_side side,
                              qp_quat** out) {
  return guarded([&] {
    *out = new qp_quat{eval_scalar(f->v, alpha->v, to_side(side))};
    return QP_OK;
  });
}

qp_status qp_poly_eval_matrix(const qp_poly* f, const qp_mat* a, qp_side side, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{eval_matrix(f->v, a->v, to_side(side))};
    return QP_OK;
  });
}

qp_status qp_poly_companion(const qp_poly* p, qp_side side, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{companion(p->v, to_side(side))};
    return QP_OK;
  });
}

/* ---- matrices ---- */

qp_status qp_mat_create(size_t rows, size_t cols, const qp_quat* const* entries, qp_mat** out) {
  return guarded([&] {
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = entries[i * cols + j]->v;
    *out = new qp_mat{std::move(m)};
    return QP_OK;
  });
}

qp_status qp_mat_parse(const char* text, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{parse_matrix(text)};
    return QP_OK;
  });
}

size_t qp_mat_rows(const qp_mat* m) { return m->v.rows(); }
size_t qp_mat_cols(const qp_mat* m) { return m->v.cols(); }

qp_status qp_mat_entry(const qp_mat* m, size_t i, size_t j, qp_quat** out) {
  return guarded([&] {
    if (i >= m->v.rows() || j >= m->v.cols())
      throw std::invalid_argument("matrix index out of range");
    *out = new qp_quat{m->v.at(i, j)};
    return QP_OK;
  });
}

qp_status qp_mat_to_string(const qp_mat* m, char** out) {
  return guarded([&] {
    *out = dup_string(to_string(m->v));
    return QP_OK;
  });
}

void qp_mat_free(qp_mat* m) { delete m; }

int qp_mat_equal(const qp_mat* x, const qp_mat* y) { return x->v == y->v ? 1 : 0; }

qp_status qp_mat_add(const qp_mat* x, const qp_mat* y, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{x->v + y->v};
    return QP_OK;
  });
}

qp_status qp_mat_sub(const qp_mat* x, const qp_mat* y, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{x->v - y->v};
    return QP_OK;
  });
}

qp_status qp_mat_mul(const qp_mat* x, const qp_mat* y, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{x->v * y->v};
    return QP_OK;
  });
}

qp_status qp_mat_invert(const qp_mat* a, qp_mat** out) {
  return guarded([&]() -> qp_status {
    auto inv = invert_matrix(a->v);
    if (!inv) {
      set_error("matrix is singular");
      return QP_SINGULAR;
    }
    *out = new qp_mat{std::move(*inv)};
    return QP_OK;
  });
}

qp_status qp_eval_tangential(const qp_mat* vec, const qp_poly* f, const qp_mat* a, qp_side side,
                             qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{side == QP_SIDE_LEFT ? eval_tangential_left(vec->v, f->v, a->v)
                                           : eval_tangential_right(f->v, vec->v, a->v)};
    return QP_OK;
  });
}

qp_status qp_eval_two_sided(const qp_mat* v, const qp_poly* f, const qp_mat* u, const qp_mat* a,
                            const qp_mat* b, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{two_sided_eval(v->v, f->v, u->v, a->v, b->v)};
    return QP_OK;
  });
}

/* ---- pairs ---- */

qp_status qp_minpoly_pair(const qp_mat* a, const qp_mat* vec, qp_side side, qp_poly** poly,
                          size_t* degree, int* full) {
  return guarded([&] {
    const MinPolyReport rep = side == QP_SIDE_LEFT ? minpoly_pair(InputPair{a->v, vec->v})
                                                   : minpoly_pair(OutputPair{vec->v, a->v});
    *poly = new qp_poly{rep.poly};
    if (degree) *degree = rep.degree;
    if (full) *full = rep.full ? 1 : 0;
    return QP_OK;
  });
}

qp_status qp_matrix_minpolys(const qp_mat* a, qp_poly** left, qp_poly** right) {
  return guarded([&] {
    const MatrixMinPolys mus = matrix_minpolys(a->v);
    *left = new qp_poly{mus.left};
    *right = new qp_poly{mus.right};
    return QP_OK;
  });
}

qp_status qp_central_minpoly(const qp_mat* a, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{central_minpoly(a->v)};
    return QP_OK;
  });
}

qp_status qp_lrcm(const qp_poly* const* fs, size_t count, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{lrcm(collect_polys(fs, count))};
    return QP_OK;
  });
}

qp_status qp_llcm(const qp_poly* const* fs, size_t count, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{llcm(collect_polys(fs, count))};
    return QP_OK;
  });
}

qp_status qp_canonical_form(const qp_mat* a, const qp_mat* vec, qp_side side, qp_mat** comp,
                            qp_mat** basis_change, qp_poly** minpoly) {
  return guarded([&]() -> qp_status {
    std::optional<CanonicalForm> cf;
    if (side == QP_SIDE_LEFT) {
      cf = canonical_form(InputPair{a->v, vec->v});
      if (!cf) {
        set_error("pair is not controllable");
        return QP_NOT_CONTROLLABLE;
      }
    } else {
      cf = canonical_form(OutputPair{vec->v, a->v});
      if (!cf) {
        set_error("pair is not observable");
        return QP_NOT_OBSERVABLE;
      }
    }
    *comp = new qp_mat{cf->companion};
    *basis_change = new qp_mat{cf->basis_change};
    *minpoly = new qp_poly{cf->minpoly};
    return QP_OK;
  });
}

qp_status qp_pairs_similar(const qp_mat* a1, const qp_mat* vec1, const qp_mat* a2,
                           const qp_mat* vec2, qp_side side, qp_mat** t) {
  return guarded([&]() -> qp_status {
    const std::optional<Matrix> res =
        side == QP_SIDE_LEFT
            ? pairs_similar(InputPair{a1->v, vec1->v}, InputPair{a2->v, vec2->v})
            : pairs_similar(OutputPair{vec1->v, a1->v}, OutputPair{vec2->v, a2->v});
    if (!res) {
      set_error("minimal polynomials differ");
      return QP_NOT_SIMILAR;
    }
    *t = new qp_mat{*res};
    return QP_OK;
  });
}

qp_status qp_p_independent(const qp_quat* const* nodes, size_t count, qp_side side, int* out) {
  return guarded([&] {
    *out = p_independent(collect_quats(nodes, count), to_side(side)) ? 1 : 0;
    return QP_OK;
  });
}

qp_status qp_gamma_matrix(const qp_quat* const* gammas, size_t count, qp_mat** out) {
  return guarded([&] {
    *out = new qp_mat{gamma_matrix(collect_quats(gammas, count))};
    return QP_OK;
  });
}

qp_status qp_find_cyclic_vector(const qp_mat* a, size_t trials, uint64_t seed, qp_mat** v) {
  return guarded([&]() -> qp_status {
    const auto res = find_cyclic_vector(a->v, trials, seed);
    if (!res) {
      set_error("no cyclic vector found within the trial budget");
      return QP_NOT_FOUND;
    }
    *v = new qp_mat{*res};
    return QP_OK;
  });
}

qp_status qp_polys_similar(const qp_poly* f, const qp_poly* g, size_t trials, uint64_t seed,
                           qp_poly** h, qp_poly** h_prime) {
  return guarded([&]() -> qp_status {
    const PolySimilarity res = polys_similar(f->v, g->v, trials, seed);
    switch (res.verdict) {
      case PolySimilarity::Verdict::Witness:
        *h = new qp_poly{res.h};
        *h_prime = new qp_poly{res.h_prime};
        return QP_OK;
      case PolySimilarity::Verdict::TriviallyNot:
        set_error("degree mismatch or zero intertwiner space");
        return QP_TRIVIALLY_NOT_SIMILAR;
      case PolySimilarity::Verdict::NoWitnessFound:
      default:
        set_error("no certified witness within the trial budget (inconclusive)");
        return QP_NO_WITNESS_FOUND;
    }
  });
}

/* ---- interpolation ---- */

qp_status qp_solve_left(const qp_mat* a, const qp_mat* v, const qp_mat* b, qp_family** out) {
  return guarded([&]() -> qp_status {
    OneSidedResult res = solve_left(a->v, v->v, b->v);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, "target outside controllability space");
    *out = new qp_family{std::move(*res.family)};
    return QP_OK;
  });
}

qp_status qp_solve_right(const qp_mat* u, const qp_mat* b_mat, const qp_mat* d, qp_family** out) {
  return guarded([&]() -> qp_status {
    OneSidedResult res = solve_right(u->v, b_mat->v, d->v);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, "target outside observability space");
    *out = new qp_family{std::move(*res.family)};
    return QP_OK;
  });
}

qp_status qp_solve_matrix_target(const qp_mat* a, const qp_mat* target, qp_family** out) {
  return guarded([&]() -> qp_status {
    OneSidedResult res = solve_matrix_target(a->v, target->v);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, "matrix-target conditions are inconsistent");
    *out = new qp_family{std::move(*res.family)};
    return QP_OK;
  });
}

qp_status qp_solve_sylvester(const qp_mat* a, const qp_mat* b, const qp_mat* c,
                             qp_mat** particular, qp_mat_list** nullspace) {
  return guarded([&]() -> qp_status {
    SylvesterSolution res = solve_sylvester(a->v, b->v, c->v);
    if (!res.particular) {
      set_error("sylvester equation is inconsistent");
      return QP_NO_SOLUTION;
    }
    *particular = new qp_mat{std::move(*res.particular)};
    *nullspace = new qp_mat_list{std::move(res.nullspace_basis)};
    return QP_OK;
  });
}

qp_status qp_solve_tsp(const qp_mat* a, const qp_mat* v, const qp_mat* u, const qp_mat* b_mat,
                       const qp_mat* b, const qp_mat* d, qp_family** out) {
  return guarded([&]() -> qp_status {
    TwoSidedResult res = solve_tsp(a->v, v->v, u->v, b_mat->v, b->v, d->v);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, "the sylvester equation of the problem has no solution");
    *out = new qp_family{std::move(*res.family)};
    return QP_OK;
  });
}

qp_status qp_solve_atsp(const qp_mat* a, const qp_mat* v, const qp_mat* u, const qp_mat* b_mat,
                        const qp_mat* b, const qp_mat* d, const qp_mat* s, qp_poly** out) {
  return guarded([&]() -> qp_status {
    AtspResult res = solve_atsp(a->v, v->v, u->v, b_mat->v, b->v, d->v, s->v);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, "compatibility condition AS - SB = bu - vd fails");
    *out = new qp_poly{std::move(*res.f)};
    return QP_OK;
  });
}

qp_status qp_solve_two_sided_only(const qp_mat* a, const qp_mat* v, const qp_mat* u,
                                  const qp_mat* b_mat, const qp_mat* s, qp_poly** particular) {
  return guarded([&]() -> qp_status {
    TwoSidedOnlyResult res = solve_two_sided_only(a->v, v->v, u->v, b_mat->v, s->v);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, "reduced two-sided condition fails");
    *particular = new qp_poly{std::move(res.family->particular)};
    return QP_OK;
  });
}

qp_status qp_quasi_ideal_basis(const qp_poly* p, const qp_poly* q, qp_mat_list** xs,
                               qp_poly_list** fs) {
  return guarded([&] {
    const auto basis = quasi_ideal_basis(p->v, q->v);
    auto* mats = new qp_mat_list{};
    auto* polys = new qp_poly_list{};
    for (const auto& el : basis) {
      mats->v.push_back(el.x);
      polys->v.push_back(el.f);
    }
    *xs = mats;
    *fs = polys;
    return QP_OK;
  });
}

qp_status qp_lagrange(const qp_quat* const* left_nodes, const qp_quat* const* left_values,
                      size_t left_count, const qp_quat* const* right_nodes,
                      const qp_quat* const* right_values, size_t right_count, qp_family** out) {
  return guarded([&]() -> qp_status {
    std::vector<LagrangeNode> left, right;
    for (size_t t = 0; t < left_count; ++t)
      left.push_back({left_nodes[t]->v, left_values[t]->v});
    for (size_t t = 0; t < right_count; ++t)
      right.push_back({right_nodes[t]->v, right_values[t]->v});
    LagrangeResult res = lagrange_two_sided(left, right);
    if (res.status != SolveStatus::Solved)
      return map_solve_status(res.status, res.status == SolveStatus::NodesNotPIndependent
                                              ? "interpolation nodes are not P-independent"
                                              : "some scalar sylvester equation is inconsistent");
    *out = new qp_family{std::move(*res.family)};
    return QP_OK;
  });
}

/* ---- families and lists ---- */

qp_status qp_family_particular(const qp_family* fam, qp_poly** out) {
  return guarded([&] {
    *out = new qp_poly{fam->v.particular};
    return QP_OK;
  });
}

int qp_family_has_left_modulus(const qp_family* fam) {
  return fam->v.left_modulus.has_value() ? 1 : 0;
}

int qp_family_has_right_modulus(const qp_family* fam) {
  return fam->v.right_modulus.has_value() ? 1 : 0;
}

qp_status qp_family_left_modulus(const qp_family* fam, qp_poly** out) {
  return guarded([&] {
    if (!fam->v.left_modulus) throw std::invalid_argument("family has no left modulus");
    *out = new qp_poly{*fam->v.left_modulus};
    return QP_OK;
  });
}

qp_status qp_family_right_modulus(const qp_family* fam, qp_poly** out) {
  return guarded([&] {
    if (!fam->v.right_modulus) throw std::invalid_argument("family has no right modulus");
    *out = new qp_poly{*fam->v.right_modulus};
    return QP_OK;
  });
}

int qp_family_has_sylvester_particular(const qp_family* fam) {
  return fam->v.sylvester_particular.has_value() ? 1 : 0;
}

qp_status qp_family_sylvester_particular(const qp_family* fam, qp_mat** out) {
  return guarded([&] {
    if (!fam->v.sylvester_particular)
      throw std::invalid_argument("family has no sylvester particular");
    *out = new qp_mat{*fam->v.sylvester_particular};
    return QP_OK;
  });
}

size_t qp_family_nullspace_count(const qp_family* fam) { return fam->v.sylvester_nullspace.size(); }

qp_status qp_family_nullspace_at(const qp_family* fam, size_t i, qp_mat** out) {
  return guarded([&] {
    if (i >= fam->v.sylvester_nullspace.size())
      throw std::invalid_argument("nullspace index out of range");
    *out = new qp_mat{fam->v.sylvester_nullspace[i]};
    return QP_OK;
  });
}

void qp_family_free(qp_family* fam) { delete fam; }

size_t qp_mat_list_count(const qp_mat_list* l) { return l->v.size(); }

qp_status qp_mat_list_at(const qp_mat_list* l, size_t i, qp_mat** out) {
  return guarded([&] {
    if (i >= l->v.size()) throw std::invalid_argument("matrix list index out of range");
    *out = new qp_mat{l->v[i]};
    return QP_OK;
  });
}

void qp_mat_list_free(qp_mat_list* l) { delete l; }

size_t qp_poly_list_count(const qp_poly_list* l) { return l->v.size(); }

qp_status qp_poly_list_at(const qp_poly_list* l, size_t i, qp_poly** out) {
  return guarded([&] {
    if (i >= l->v.size()) throw std::invalid_argument("polynomial list index out of range");
    *out = new qp_poly{l->v[i]};
    return QP_OK;
  });
}

void qp_poly_list_free(qp_poly_list* l) { delete l; }

} /* extern "C" */
