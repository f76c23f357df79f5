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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matrix.hpp"

namespace quatpol {

enum class Side { Left, Right };

/**
 * Polynomial in a central variable z with quaternion coefficients.
 *
 * Coefficients are stored dense, lowest degree first, trailing zeros trimmed;
 * the zero polynomial has an empty coefficient sequence. z commutes with
 * coefficients, so products collect sum f_i g_j at z^{i+j}, but left and
 * right evaluation differ.
 */
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  explicit SkewPoly(Quaternion constant) : coeffs_{std::move(constant)} { trim(); }

  static SkewPoly zero() { return SkewPoly(); }
  static SkewPoly one() { return SkewPoly(Quaternion::one()); }
  static SkewPoly z() { return SkewPoly({Quaternion::zero(), Quaternion::one()}); }
  // c * z^m
  static SkewPoly monomial(Quaternion c, std::size_t m);

  // degree of the zero polynomial reported as -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Quaternion::one(); }
  bool is_central() const;

  // coefficient of z^m; zero beyond the degree
  const Quaternion& coeff(std::size_t m) const;
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  const Quaternion& leading() const;

  SkewPoly operator-() const;
  SkewPoly operator+(const SkewPoly& other) const;
  SkewPoly operator-(const SkewPoly& other) const;
  SkewPoly operator*(const SkewPoly& other) const;

  SkewPoly left_scaled(const Quaternion& q) const;   // q * f
  SkewPoly right_scaled(const Quaternion& q) const;  // f * q
  SkewPoly shifted_up(std::size_t m) const;          // f * z^m

  // lead^{-1} * f (preserves right divisors) and f * lead^{-1} (preserves
  // left divisors); monic normalization is a visible, sided choice.
  SkewPoly monic_left() const;
  SkewPoly monic_right() const;

  friend bool operator==(const SkewPoly& f, const SkewPoly& g) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Quaternion> coeffs_;
};

// Column (n x 1) or row (1 x k) of polynomials, used by the quotient
// operators and the division identities.
struct VectorPoly {
  bool column = true;
  std::vector<SkewPoly> parts;

  static VectorPoly from_column_times_poly(const Matrix& v, const SkewPoly& f);  // v * f
  static VectorPoly from_poly_times_row(const SkewPoly& f, const Matrix& u);     // f * u
  static VectorPoly constant_column(const Matrix& value);
  static VectorPoly constant_row(const Matrix& value);

  std::size_t size() const { return parts.size(); }
  int degree() const;
  Matrix coeff(std::size_t m) const;  // coefficient of z^m as an n x 1 or 1 x k matrix

  VectorPoly operator+(const VectorPoly& other) const;
  VectorPoly operator-(const VectorPoly& other) const;
  VectorPoly shifted_up() const;  // multiply by z

  friend bool operator==(const VectorPoly& x, const VectorPoly& y) = default;
};

VectorPoly apply_matrix_left(const Matrix& a, const VectorPoly& g);   // A * G (column)
VectorPoly apply_matrix_right(const VectorPoly& h, const Matrix& a);  // H * A (row)

struct DivisionResult {
  SkewPoly quotient;
  SkewPoly remainder;
};

// f = p * quotient + remainder with deg remainder < deg p; p must be monic.
DivisionResult left_divide(const SkewPoly& f, const SkewPoly& p);
// f = quotient * q + remainder with deg remainder < deg q; q must be monic.
DivisionResult right_divide(const SkewPoly& f, const SkewPoly& q);

// Left: sum alpha^j f_j. Right: sum f_j alpha^j.
Quaternion eval_scalar(const SkewPoly& f, const Quaternion& alpha, Side side);

// Left: sum A^j f_j. Right: sum f_j A^j.
Matrix eval_matrix(const SkewPoly& f, const Matrix& a, Side side);

// (v f)^{el}(A) = sum A^j v f_j, v is n x 1.
Matrix eval_tangential_left(const Matrix& v, const SkewPoly& f, const Matrix& a);
// (f u)^{er}(B) = sum f_j u B^j, u is 1 x k.
Matrix eval_tangential_right(const SkewPoly& f, const Matrix& u, const Matrix& b);

// L_A(v f) = sum_{j+m <= deg f - 1} A^j v f_{m+j+1} z^m; satisfies
// v f(z) = (z I - A) L_A(v f)(z) + (v f)^{el}(A).
VectorPoly quotient_operator_left(const Matrix& v, const SkewPoly& f, const Matrix& a);
// R_B(f u) = sum f_{m+j+1} u B^j z^m; f(z) u = R_B(f u)(z) (z I - B) + (f u)^{er}(B).
VectorPoly quotient_operator_right(const SkewPoly& f, const Matrix& u, const Matrix& b);

// (v f u)^{ets}(A, B) = sum_{i+j=0}^{deg f - 1} A^i v f_{i+j+1} u B^j.
Matrix two_sided_eval(const Matrix& v, const SkewPoly& f, const Matrix& u, const Matrix& a,
                      const Matrix& b);

namespace detail {
// The two factored routes of the two-sided evaluation; both must agree with
// the direct double sum.
Matrix two_sided_eval_via_left(const Matrix& v, const SkewPoly& f, const Matrix& u,
                               const Matrix& a, const Matrix& b);
Matrix two_sided_eval_via_right(const Matrix& v, const SkewPoly& f, const Matrix& u,
                                const Matrix& a, const Matrix& b);
}  // namespace detail

// Left companion has subdiagonal ones and -p_0..-p_{n-1} in the last column;
// the right companion is its transpose. p must be monic of degree >= 1.
Matrix companion(const SkewPoly& p, Side side);

// Coefficient m of the result is coefficient m + j of f.
SkewPoly backward_shift(const SkewPoly& f, std::size_t j = 1);

// rho_alpha(z) = z - alpha
SkewPoly rho(const Quaternion& alpha);

// Identification of polynomials with coefficient columns/rows against the
// power row [1 z ... z^{n-1}].
SkewPoly poly_from_coeff_column(const Matrix& c);
SkewPoly poly_from_coeff_row(const Matrix& r);
Matrix coeff_column(const SkewPoly& f, std::size_t n);  // first n coefficients, n x 1
Matrix coeff_row(const SkewPoly& f, std::size_t n);     // first n coefficients, 1 x n

// Canonical display string, e.g. "z^3 + (1+2i)z + 3/2"; multi-term
// coefficients are parenthesized.
std::string to_string(const SkewPoly& f);
// Parses the display form (also accepts bare quaternion literals).
SkewPoly parse_poly(std::string_view text);

}  // namespace quatpol
