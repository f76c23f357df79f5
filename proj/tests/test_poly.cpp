#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace quatpol;
using testsupport::mlit;
using testsupport::plit;
using testsupport::qlit;
using testsupport::random_matrix;
using testsupport::random_monic_poly;
using testsupport::random_poly;

namespace {

// v f(z) == (z I - A) G(z) + b as vector polynomials (the division identity).
bool division_identity_holds(const Matrix& v, const SkewPoly& f, const Matrix& a,
                             const VectorPoly& g, const Matrix& b) {
  const VectorPoly lhs = VectorPoly::from_column_times_poly(v, f);
  const VectorPoly rhs = g.shifted_up() - apply_matrix_left(a, g) + VectorPoly::constant_column(b);
  return lhs == rhs;
}

bool division_identity_holds_right(const SkewPoly& f, const Matrix& u, const Matrix& a,
                                   const VectorPoly& h, const Matrix& d) {
  const VectorPoly lhs = VectorPoly::from_poly_times_row(f, u);
  const VectorPoly rhs = h.shifted_up() - apply_matrix_right(h, a) + VectorPoly::constant_row(d);
  return lhs == rhs;
}

}  // namespace

TEST_CASE("left and right division fixed cases") {
  const SkewPoly z2 = plit("z^2");
  const SkewPoly zmi = plit("z - i");
  {
    const auto [g, b] = left_divide(z2, zmi);
    CHECK(g == plit("z + i"));
    CHECK(b == plit("-1"));
  }
  {
    const auto [g, b] = left_divide(zmi, zmi);
    CHECK(g == SkewPoly::one());
    CHECK(b.is_zero());
  }
  {
    const auto [g, b] = left_divide(plit("i"), zmi);
    CHECK(g.is_zero());
    CHECK(b == plit("i"));
  }
  {
    const auto [h, d] = right_divide(z2, zmi);
    CHECK(h == plit("z + i"));
    CHECK(d == plit("-1"));
  }
  {
    const auto [h, d] = right_divide(plit("z - j") * zmi, zmi);
    CHECK(h == plit("z - j"));
    CHECK(d.is_zero());
  }
  {
    const auto [h, d] = right_divide(SkewPoly::one(), SkewPoly::z());
    CHECK(h.is_zero());
    CHECK(d == SkewPoly::one());
  }
  CHECK_THROWS_AS(left_divide(z2, plit("2z")), std::invalid_argument);
}

TEST_CASE("division is exact and unique (200 random trials)") {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    const SkewPoly p = random_monic_poly(rng, 1 + static_cast<int>(rng.below(3)));
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(7)));
    const auto [g, b] = left_divide(f, p);
    CHECK(b.degree() < p.degree());
    CHECK(p * g + b == f);
    const auto [h, d] = right_divide(f, p);
    CHECK(d.degree() < p.degree());
    CHECK(h * p + d == f);
    // uniqueness: any other quotient pushes the remainder degree to >= deg p
    const SkewPoly perturbed = f - p * (g + SkewPoly::one());
    CHECK(perturbed.degree() >= p.degree());
  }
}

TEST_CASE("scalar evaluation") {
  const SkewPoly jz = plit("jz");
  CHECK(eval_scalar(jz, Quaternion::unit_i(), Side::Left) == Quaternion::unit_k());
  CHECK(eval_scalar(jz, Quaternion::unit_i(), Side::Right) == -Quaternion::unit_k());
  const SkewPoly z2p1 = plit("z^2 + 1");
  CHECK(eval_scalar(z2p1, Quaternion::unit_i(), Side::Left).is_zero());
  CHECK(eval_scalar(z2p1, Quaternion::unit_i(), Side::Right).is_zero());
}

TEST_CASE("scalar evaluation equals division remainder by z - alpha") {
  Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(7)));
    const Quaternion alpha = random_quaternion(rng, 3, 2);
    const auto [g, b] = left_divide(f, rho(alpha));
    CHECK(SkewPoly(eval_scalar(f, alpha, Side::Left)) == b);
    const auto [h, d] = right_divide(f, rho(alpha));
    CHECK(SkewPoly(eval_scalar(f, alpha, Side::Right)) == d);
  }
}

TEST_CASE("matrix evaluation") {
  Rng rng(107);
  const Matrix a = random_matrix(rng, 3, 3);
  CHECK(eval_matrix(SkewPoly::z(), a, Side::Left) == a);
  CHECK(eval_matrix(SkewPoly::z(), a, Side::Right) == a);
  // central coefficients: both sides agree
  const SkewPoly central = plit("z^3 + 1/2z - 7");
  CHECK(eval_matrix(central, a, Side::Left) == eval_matrix(central, a, Side::Right));
}

TEST_CASE("tangential evaluation against the plain-sum oracle") {
  Rng rng(109);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const Matrix a = random_matrix(rng, n, n);
    const Matrix v = random_matrix(rng, n, 1);
    const Matrix u = random_matrix(rng, 1, n);
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(7)));
    CHECK(eval_tangential_left(v, f, a) == testsupport::oracle_tangential_left(v, f, a));
    CHECK(eval_tangential_right(f, u, a) == testsupport::oracle_tangential_right(f, u, a));
  }
  // constant polynomial picks out the vector itself
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix v = random_matrix(rng, 3, 1);
  CHECK(eval_tangential_left(v, SkewPoly::one(), a) == v);
}

TEST_CASE("product rule for tangential evaluations (200 random trials)") {
  Rng rng(113);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const Matrix a = random_matrix(rng, n, n);
    const Matrix v = random_matrix(rng, n, 1);
    const Matrix u = random_matrix(rng, 1, n);
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(4)));
    const SkewPoly g = random_poly(rng, static_cast<int>(rng.below(4)));
    // (v g f)^{el}(A) = ((v g)^{el}(A) f)^{el}(A)
    CHECK(eval_tangential_left(v, g * f, a) ==
          eval_tangential_left(eval_tangential_left(v, g, a), f, a));
    // (f g u)^{er}(A) = (f (g u)^{er}(A))^{er}(A)
    CHECK(eval_tangential_right(f * g, u, a) ==
          eval_tangential_right(f, eval_tangential_right(g, u, a), a));
  }
}

TEST_CASE("quotient operators: fixed shapes") {
  Rng rng(127);
  const std::size_t n = 3;
  const Matrix a = random_matrix(rng, n, n);
  const Matrix v = random_matrix(rng, n, 1);
  {
    const VectorPoly l = quotient_operator_left(v, SkewPoly::z(), a);
    CHECK(l == VectorPoly::constant_column(v));
  }
  {
    const VectorPoly l = quotient_operator_left(v, plit("5 - 2i"), a);
    CHECK(l.degree() == -1);
  }
  {
    // f = z^2: L_A(v f) = v z + A v
    const VectorPoly l = quotient_operator_left(v, plit("z^2"), a);
    const VectorPoly want = VectorPoly::constant_column(v).shifted_up() + VectorPoly::constant_column(a * v);
    CHECK(l == want);
  }
}

TEST_CASE("division identity and the ideal membership criterion") {
  Rng rng(131);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const Matrix a = random_matrix(rng, n, n);
    const Matrix v = random_matrix(rng, n, 1);
    const Matrix u = random_matrix(rng, 1, n);
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(7)));
    const VectorPoly g = quotient_operator_left(v, f, a);
    const Matrix b = eval_tangential_left(v, f, a);
    CHECK(division_identity_holds(v, f, a, g, b));
    const VectorPoly h = quotient_operator_right(f, u, a);
    const Matrix d = eval_tangential_right(f, u, a);
    CHECK(division_identity_holds_right(f, u, a, h, d));
  }
}

TEST_CASE("ideal membership: zero evaluation iff exact factorization") {
  Rng rng(137);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(3);
    const Matrix a = random_matrix(rng, n, n);
    const Matrix v = random_matrix(rng, n, 1);
    // members of the ideal: f = P_{A,v} h evaluates to zero and factors
    const SkewPoly pmin = testsupport::oracle_minpoly_left(a, v);
    const SkewPoly f = pmin * random_poly(rng, static_cast<int>(rng.below(3)));
    CHECK(eval_tangential_left(v, f, a).is_zero());
    const VectorPoly g = quotient_operator_left(v, f, a);
    CHECK(division_identity_holds(v, f, a, g, Matrix(n, 1)));
    // non-members leave a nonzero constant, so no factorization can exist
    // (the representation is unique)
    const SkewPoly bad = f + SkewPoly::one();
    CHECK(eval_tangential_left(v, bad, a) == v);
  }
}

TEST_CASE("two-sided evaluation basics") {
  Rng rng(139);
  const std::size_t n = 3, k = 2;
  const Matrix a = random_matrix(rng, n, n);
  const Matrix b = random_matrix(rng, k, k);
  const Matrix v = random_matrix(rng, n, 1);
  const Matrix u = random_matrix(rng, 1, k);
  CHECK(two_sided_eval(v, plit("1+i"), u, a, b).is_zero());
  CHECK(two_sided_eval(v, SkewPoly::z(), u, a, b) == v * u);
}

TEST_CASE("two-sided evaluation: Sylvester identity and factored routes") {
  Rng rng(149);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const std::size_t k = 1 + rng.below(4);
    const Matrix a = random_matrix(rng, n, n);
    const Matrix b = random_matrix(rng, k, k);
    const Matrix v = random_matrix(rng, n, 1);
    const Matrix u = random_matrix(rng, 1, k);
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(7)));
    const Matrix upsilon = two_sided_eval(v, f, u, a, b);
    CHECK(a * upsilon - upsilon * b ==
          eval_tangential_left(v, f, a) * u - v * eval_tangential_right(f, u, b));
    CHECK(detail::two_sided_eval_via_left(v, f, u, a, b) == upsilon);
    CHECK(detail::two_sided_eval_via_right(v, f, u, a, b) == upsilon);
  }
}

TEST_CASE("companion matrices") {
  const SkewPoly p = plit("z^2 + iz + (1+j)");
  const Matrix cl = companion(p, Side::Left);
  CHECK(cl == mlit("[[0, -1-j], [1, -i]]"));
  CHECK(companion(p, Side::Right) == cl.transpose());
  CHECK(companion(plit("z - k"), Side::Left) == mlit("[[k]]"));
  CHECK_THROWS_AS(companion(plit("2z"), Side::Left), std::invalid_argument);
  CHECK_THROWS_AS(companion(SkewPoly::one(), Side::Left), std::invalid_argument);
}

TEST_CASE("coefficient column of low-degree polynomials at companion pairs") {
  Rng rng(151);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const SkewPoly p = random_monic_poly(rng, static_cast<int>(n));
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(n)));
    const Matrix e1 = Matrix::unit_column(n, 0);
    CHECK(eval_tangential_left(e1, f, companion(p, Side::Left)) == coeff_column(f, n));
  }
}

TEST_CASE("backward shift") {
  CHECK(backward_shift(plit("z^2 + iz + 1")) == plit("z + i"));
  CHECK(backward_shift(plit("7 - k")).is_zero());
  Rng rng(157);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const SkewPoly p = random_monic_poly(rng, static_cast<int>(n));
    CHECK(backward_shift(p, n) == SkewPoly::one());
  }
}

TEST_CASE("quotient polynomials at companion matrices via backward shifts") {
  // g_j = (R_0^j p) g + R_0^j b and G = (g_1, ..., g_n)^T
  Rng rng(163);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const SkewPoly p = random_monic_poly(rng, static_cast<int>(n));
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(6)));
    const auto [g, b] = left_divide(f, p);
    const Matrix cl = companion(p, Side::Left);
    const Matrix e1 = Matrix::unit_column(n, 0);
    CHECK(eval_tangential_left(e1, f, cl) == coeff_column(b, n));
    const VectorPoly big_g = quotient_operator_left(e1, f, cl);
    for (std::size_t j = 1; j <= n; ++j) {
      const SkewPoly gj = backward_shift(p, j) * g + backward_shift(b, j);
      CHECK(big_g.parts[j - 1] == gj);
    }
    CHECK(big_g.parts[n - 1] == g);
  }
}

TEST_CASE("polynomial display roundtrip and fixed forms") {
  CHECK(to_string(plit("z^2+1")) == "z^2 + 1");
  CHECK(to_string(SkewPoly::zero()) == "0");
  CHECK(to_string(plit("(1+2i)z + 3/2")) == "(1+2i)z + 3/2");
  CHECK(to_string(plit("-z^2 - j")) == "-z^2 - j");
  CHECK(parse_poly("z-i") == SkewPoly({-Quaternion::unit_i(), Quaternion::one()}));
  Rng rng(167);
  for (int t = 0; t < 500; ++t) {
    const SkewPoly f = random_poly(rng, static_cast<int>(rng.below(7)), 9, 9);
    CHECK(parse_poly(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("z^"), ParseError);
  CHECK_THROWS_AS(parse_poly("z z"), ParseError);
}
