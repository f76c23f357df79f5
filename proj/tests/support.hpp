#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here is deliberately naive: brute-force re-implementations used to check
// the production paths, not to be fast.

#include <vector>

#include "interp.hpp"
#include "random.hpp"

namespace testsupport {

using namespace quatpol;

inline Quaternion qlit(const char* text) { return parse_quaternion(text); }
inline SkewPoly plit(const char* text) { return parse_poly(text); }
inline Matrix mlit(const char* text) { return parse_matrix(text); }

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t mx = 3,
                            std::int64_t dx = 2) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_quaternion(rng, mx, dx);
  return m;
}

inline SkewPoly random_poly(Rng& rng, int degree, std::int64_t mx = 3, std::int64_t dx = 2) {
  if (degree < 0) return SkewPoly::zero();
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (auto& q : c) q = random_quaternion(rng, mx, dx);
  while (c.back().is_zero()) c.back() = random_quaternion(rng, mx, dx);
  return SkewPoly(std::move(c));
}

inline SkewPoly random_monic_poly(Rng& rng, int degree, std::int64_t mx = 3, std::int64_t dx = 2) {
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (auto& q : c) q = random_quaternion(rng, mx, dx);
  c.back() = Quaternion::one();
  return SkewPoly(std::move(c));
}

// Invertible matrix as a product of elementary matrices (unit upper/lower
// triangular factors and nonzero diagonal scalings), so invertibility is by
// construction.
inline Matrix random_invertible(Rng& rng, std::size_t n, std::size_t factors = 6) {
  Matrix a = Matrix::identity(n);
  for (std::size_t t = 0; t < factors; ++t) {
    Matrix e = Matrix::identity(n);
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n);
    if (i == j) {
      Quaternion q = random_quaternion(rng, 2, 2);
      if (q.is_zero()) q = Quaternion::one();
      e.at(i, i) = q;
    } else {
      e.at(i, j) = random_quaternion(rng, 2, 2);
    }
    a = a * e;
  }
  return a;
}

// Controllable input pair by conjugating a companion pair with a random
// invertible matrix; controllability is similarity-invariant.
inline InputPair random_controllable_pair(Rng& rng, std::size_t n) {
  const SkewPoly p = random_monic_poly(rng, static_cast<int>(n));
  const Matrix t = random_invertible(rng, n);
  const Matrix tinv = *invert_matrix(t);
  return InputPair{t * companion(p, Side::Left) * tinv, t.column_at(0)};
}

inline OutputPair random_observable_pair(Rng& rng, std::size_t n) {
  const SkewPoly q = random_monic_poly(rng, static_cast<int>(n));
  const Matrix t = random_invertible(rng, n);
  const Matrix tinv = *invert_matrix(t);
  return OutputPair{t.row_at(0), tinv * companion(q, Side::Right) * t};
}

// Oracle: tangential evaluations by the plain defining sums (no Horner).
inline Matrix oracle_tangential_left(const Matrix& v, const SkewPoly& f, const Matrix& a) {
  Matrix acc(v.rows(), 1);
  Matrix ap = Matrix::identity(a.rows());
  for (int m = 0; m <= f.degree(); ++m) {
    acc = acc + (ap * v).right_scaled(f.coeff(static_cast<std::size_t>(m)));
    ap = ap * a;
  }
  return acc;
}

inline Matrix oracle_tangential_right(const SkewPoly& f, const Matrix& u, const Matrix& b) {
  Matrix acc(1, u.cols());
  Matrix bp = Matrix::identity(b.rows());
  for (int m = 0; m <= f.degree(); ++m) {
    acc = acc + (u * bp).left_scaled(f.coeff(static_cast<std::size_t>(m)));
    bp = bp * b;
  }
  return acc;
}

// Oracle: least-degree monic annihilator of a pair by brute-force search over
// ascending degrees, solving for the coefficients entrywise over the center.
// Used to cross-check minpoly_pair on small cases.
inline SkewPoly oracle_minpoly_left(const Matrix& a, const Matrix& v) {
  for (std::size_t d = 0;; ++d) {
    // unknowns b_0..b_{d-1}: sum_j A^j v b_j = -A^d v
    Matrix krylov(a.rows(), d);
    Matrix w = v;
    for (std::size_t j = 0; j < d; ++j) {
      krylov.set_column(j, w);
      w = a * w;
    }
    const GaussSolveResult sol = gauss_solve(krylov, -w);
    if (!sol.particular) continue;
    std::vector<Quaternion> coeffs;
    for (std::size_t j = 0; j < d; ++j) coeffs.push_back(sol.particular->at(j, 0));
    coeffs.push_back(Quaternion::one());
    return SkewPoly(std::move(coeffs));
  }
}

}  // namespace testsupport
