// Exercises the shared-library surface: opaque handles, status codes, and
// the accessor contracts, through the public header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "quatpol/quatpol.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qp_string_free(s);
  return out;
}

qp_quat* quat(const char* text) {
  qp_quat* q = nullptr;
  REQUIRE(qp_quat_parse(text, &q) == QP_OK);
  return q;
}

qp_poly* poly(const char* text) {
  qp_poly* f = nullptr;
  REQUIRE(qp_poly_parse(text, &f) == QP_OK);
  return f;
}

qp_mat* mat(const char* text) {
  qp_mat* m = nullptr;
  REQUIRE(qp_mat_parse(text, &m) == QP_OK);
  return m;
}

}  // namespace

TEST_CASE("quaternion round trip and arithmetic through the C surface") {
  qp_quat* a = quat("1/2+3i-j");
  char* s = nullptr;
  CHECK(qp_quat_to_string(a, &s) == QP_OK);
  CHECK(take(s) == "1/2+3i-j");

  qp_quat* i = quat("i");
  qp_quat* j = quat("j");
  qp_quat* k = nullptr;
  CHECK(qp_quat_mul(i, j, &k) == QP_OK);
  CHECK(qp_quat_to_string(k, &s) == QP_OK);
  CHECK(take(s) == "k");
  CHECK(qp_quat_is_central(a) == 0);
  qp_quat* inv = nullptr;
  CHECK(qp_quat_invert(i, &inv) == QP_OK);
  CHECK(qp_quat_to_string(inv, &s) == QP_OK);
  CHECK(take(s) == "-i");
  qp_quat_free(a);
  qp_quat_free(i);
  qp_quat_free(j);
  qp_quat_free(k);
  qp_quat_free(inv);

  qp_quat* bad = nullptr;
  CHECK(qp_quat_parse("1+!", &bad) == QP_ERR_PARSE);
  CHECK(std::string(qp_last_error()).find("position") != std::string::npos);
  qp_quat* zero = quat("0");
  CHECK(qp_quat_invert(zero, &inv) == QP_ERR_DOMAIN);
  qp_quat_free(zero);
}

TEST_CASE("polynomial handles: division, coefficients, companion") {
  qp_poly* f = poly("z^2");
  qp_poly* p = poly("z - i");
  qp_poly* q = nullptr;
  qp_poly* r = nullptr;
  CHECK(qp_poly_divide(f, p, QP_SIDE_LEFT, &q, &r) == QP_OK);
  char* s = nullptr;
  CHECK(qp_poly_to_string(q, &s) == QP_OK);
  CHECK(take(s) == "z + i");
  CHECK(qp_poly_to_string(r, &s) == QP_OK);
  CHECK(take(s) == "-1");
  CHECK(qp_poly_degree(q) == 1);
  qp_quat* c = nullptr;
  CHECK(qp_poly_coeff(q, 0, &c) == QP_OK);
  CHECK(qp_quat_to_string(c, &s) == QP_OK);
  CHECK(take(s) == "i");
  qp_quat_free(c);

  qp_mat* comp = nullptr;
  CHECK(qp_poly_companion(p, QP_SIDE_LEFT, &comp) == QP_OK);
  CHECK(qp_mat_rows(comp) == 1);
  qp_mat_free(comp);
  // non-monic divisor is a domain error surfaced as a dimension-class code
  qp_poly* two_z = poly("2z");
  qp_poly* q2 = nullptr;
  qp_poly* r2 = nullptr;
  CHECK(qp_poly_divide(f, two_z, QP_SIDE_LEFT, &q2, &r2) == QP_ERR_DIMENSION);
  qp_poly_free(two_z);
  qp_poly_free(f);
  qp_poly_free(p);
  qp_poly_free(q);
  qp_poly_free(r);
}

TEST_CASE("matrix handles: arithmetic, inversion, singularity") {
  qp_mat* a = mat("[[i, 0], [0, j]]");
  qp_mat* inv = nullptr;
  CHECK(qp_mat_invert(a, &inv) == QP_OK);
  char* s = nullptr;
  CHECK(qp_mat_to_string(inv, &s) == QP_OK);
  CHECK(take(s) == "[[-i, 0], [0, -j]]");
  qp_mat_free(inv);
  qp_mat_free(a);

  qp_mat* sing = mat("[[1, 1], [i, i]]");
  CHECK(qp_mat_invert(sing, &inv) == QP_SINGULAR);
  qp_mat_free(sing);

  qp_mat* x = mat("[[1]]");
  qp_mat* y = mat("[[1, 2]]");
  qp_mat* z = nullptr;
  CHECK(qp_mat_add(x, y, &z) == QP_ERR_DIMENSION);
  qp_mat_free(x);
  qp_mat_free(y);
}

TEST_CASE("pair operations and similarity verdicts through the C surface") {
  qp_mat* a = mat("[[i, 0], [0, j]]");
  qp_mat* v = mat("[[1], [1]]");
  qp_poly* mp = nullptr;
  size_t degree = 0;
  int full = 0;
  CHECK(qp_minpoly_pair(a, v, QP_SIDE_LEFT, &mp, &degree, &full) == QP_OK);
  char* s = nullptr;
  CHECK(qp_poly_to_string(mp, &s) == QP_OK);
  CHECK(take(s) == "z^2 + 1");
  CHECK(degree == 2);
  CHECK(full == 1);
  qp_poly_free(mp);

  qp_mat* comp = nullptr;
  qp_mat* t = nullptr;
  qp_poly* cp = nullptr;
  CHECK(qp_canonical_form(a, v, QP_SIDE_LEFT, &comp, &t, &cp) == QP_OK);
  qp_mat_free(comp);
  qp_mat_free(t);
  qp_poly_free(cp);

  // non-controllable: diag(i, i) with ones
  qp_mat* bad_a = mat("[[i, 0], [0, i]]");
  CHECK(qp_canonical_form(bad_a, v, QP_SIDE_LEFT, &comp, &t, &cp) == QP_NOT_CONTROLLABLE);
  qp_mat_free(bad_a);
  qp_mat_free(a);
  qp_mat_free(v);

  qp_poly* f = poly("z - i");
  qp_poly* g = poly("z - 2i");
  qp_poly* h = nullptr;
  qp_poly* hp = nullptr;
  CHECK(qp_polys_similar(f, g, 8, 0, &h, &hp) == QP_TRIVIALLY_NOT_SIMILAR);
  qp_poly* g2 = poly("z - j");
  CHECK(qp_polys_similar(f, g2, 8, 0, &h, &hp) == QP_OK);
  qp_poly_free(h);
  qp_poly_free(hp);
  qp_poly_free(f);
  qp_poly_free(g);
  qp_poly_free(g2);
}

TEST_CASE("solver results and family accessors through the C surface") {
  // left problem at a companion pair
  qp_poly* p = poly("z^2 + 2");
  qp_mat* cl = nullptr;
  REQUIRE(qp_poly_companion(p, QP_SIDE_LEFT, &cl) == QP_OK);
  qp_mat* v = mat("[[1], [0]]");
  qp_mat* b = mat("[[j], [1]]");
  qp_family* fam = nullptr;
  CHECK(qp_solve_left(cl, v, b, &fam) == QP_OK);
  qp_poly* part = nullptr;
  CHECK(qp_family_particular(fam, &part) == QP_OK);
  char* s = nullptr;
  CHECK(qp_poly_to_string(part, &s) == QP_OK);
  CHECK(take(s) == "z + j");
  CHECK(qp_family_has_left_modulus(fam) == 1);
  CHECK(qp_family_has_right_modulus(fam) == 0);
  qp_poly* mod = nullptr;
  CHECK(qp_family_left_modulus(fam, &mod) == QP_OK);
  CHECK(qp_poly_equal(mod, p) == 1);
  CHECK(qp_family_nullspace_count(fam) == 0);
  qp_poly_free(part);
  qp_poly_free(mod);
  qp_family_free(fam);

  // out-of-space target
  qp_mat* zero2 = mat("[[0, 0], [0, 0]]");
  qp_mat* e2 = mat("[[0], [1]]");
  CHECK(qp_solve_left(zero2, v, e2, &fam) == QP_NO_SOLUTION);
  CHECK(std::string(qp_last_error()) == "target outside controllability space");
  qp_mat_free(zero2);
  qp_mat_free(e2);
  qp_mat_free(cl);
  qp_mat_free(v);
  qp_mat_free(b);
  qp_poly_free(p);
}

TEST_CASE("two-sided solvers and lists through the C surface") {
  qp_mat* a = mat("[[i]]");
  qp_mat* v1 = mat("[[1]]");
  qp_mat* u1 = mat("[[1]]");
  qp_mat* bm = mat("[[j]]");
  qp_mat* zero = mat("[[0]]");
  qp_family* fam = nullptr;
  CHECK(qp_solve_tsp(a, v1, u1, bm, zero, zero, &fam) == QP_OK);
  CHECK(qp_family_has_sylvester_particular(fam) == 1);
  CHECK(qp_family_nullspace_count(fam) == 2);
  qp_mat* n0 = nullptr;
  CHECK(qp_family_nullspace_at(fam, 0, &n0) == QP_OK);
  qp_mat_free(n0);
  CHECK(qp_family_nullspace_at(fam, 7, &n0) == QP_ERR_DIMENSION);
  qp_family_free(fam);

  // unsolvable TSP: alpha = beta = i, b - d = 1
  qp_mat* one = mat("[[1]]");
  CHECK(qp_solve_tsp(a, v1, u1, a, one, zero, &fam) == QP_NO_SOLUTION);

  qp_poly* pz = poly("z - i");
  qp_poly* qz = poly("z - j");
  qp_mat_list* xs = nullptr;
  qp_poly_list* fs = nullptr;
  CHECK(qp_quasi_ideal_basis(pz, qz, &xs, &fs) == QP_OK);
  CHECK(qp_mat_list_count(xs) == 2);
  CHECK(qp_poly_list_count(fs) == 2);
  qp_poly* f0 = nullptr;
  CHECK(qp_poly_list_at(fs, 0, &f0) == QP_OK);
  qp_poly_free(f0);
  qp_mat_list_free(xs);
  qp_poly_list_free(fs);
  qp_poly_free(pz);
  qp_poly_free(qz);

  // Lagrange with dependent nodes
  qp_quat* i1 = quat("i");
  qp_quat* i2 = quat("i");
  qp_quat* val1 = quat("1");
  qp_quat* val2 = quat("0");
  const qp_quat* nodes[] = {i1, i2};
  const qp_quat* values[] = {val1, val2};
  CHECK(qp_lagrange(nodes, values, 2, nullptr, nullptr, 0, &fam) ==
        QP_NODES_NOT_P_INDEPENDENT);
  int indep = -1;
  CHECK(qp_p_independent(nodes, 2, QP_SIDE_LEFT, &indep) == QP_OK);
  CHECK(indep == 0);
  qp_quat_free(i1);
  qp_quat_free(i2);
  qp_quat_free(val1);
  qp_quat_free(val2);
  qp_mat_free(a);
  qp_mat_free(v1);
  qp_mat_free(u1);
  qp_mat_free(bm);
  qp_mat_free(zero);
  qp_mat_free(one);
}
