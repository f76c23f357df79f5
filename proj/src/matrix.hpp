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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quaternion.hpp"

namespace quatpol {

/**
 * Dense rectangular matrix over the quaternions.
 *
 * Side discipline used throughout: in linear systems the coefficients
 * multiply the unknowns on the LEFT (sum_j a_ij x_j = b_i), so solution sets
 * of homogeneous systems are RIGHT vector spaces over F. Row operations act
 * by left multiplication and preserve that solution set.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix column(std::vector<Quaternion> entries);
  static Matrix row(std::vector<Quaternion> entries);
  // j-th standard basis column/row (0-based) in dimension n.
  static Matrix unit_column(std::size_t n, std::size_t j);
  static Matrix unit_row(std::size_t n, std::size_t j);
  static Matrix ones_column(std::size_t n);
  static Matrix ones_row(std::size_t n);
  static Matrix diagonal(std::span<const Quaternion> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Quaternion& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_column() const { return cols_ == 1; }
  bool is_row() const { return rows_ == 1; }

  Matrix transpose() const;
  Matrix conjugate() const;  // entrywise quaternion conjugate

  Matrix column_at(std::size_t j) const;
  Matrix row_at(std::size_t i) const;
  void set_column(std::size_t j, const Matrix& col);

  // q * M and M * q (entrywise left/right scalar action).
  Matrix left_scaled(const Quaternion& q) const;
  Matrix right_scaled(const Quaternion& q) const;

  Matrix operator-() const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> e_;
};

Matrix block_diag(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);
Matrix hstack(std::span<const Matrix> blocks);
Matrix matrix_power(const Matrix& a, std::size_t e);

struct GaussSolveResult {
  std::optional<Matrix> particular;  // m x 1; absent when the system is inconsistent
  std::vector<Matrix> nullspace;     // right-space basis of {y : A y = 0}
};

// Solves A x = b (b is n x 1) with coefficients on the left of the unknowns.
GaussSolveResult gauss_solve(const Matrix& a, const Matrix& b);

// Exact two-sided inverse; nullopt when singular.
std::optional<Matrix> invert_matrix(const Matrix& a);

struct KrylovDependence {
  std::size_t d = 0;                // least index with w_d right-dependent on w_0..w_{d-1}
  std::vector<Quaternion> coeffs;   // b_0..b_{d-1} with w_d + sum w_k b_k = 0
};

// Least d such that w_d = -sum_{k<d} w_k b_k is solvable; d = size() with no
// coefficients when the whole sequence is right linearly independent.
KrylovDependence krylov_dependence(std::span<const Matrix> vectors);

// Mirror for row sequences with coefficients on the left (r_d + sum b_k r_k = 0).
// Reduced to the column case through the conjugate transpose, which is an
// anti-automorphism of the quaternions.
KrylovDependence krylov_dependence_rows(std::span<const Matrix> rows);

// Block-entrywise realification: a 4n x 4k rational matrix; a unital ring
// homomorphism on square matrices.
RationalMatrix realify_matrix(const Matrix& m);

// Display form "[[1, i], [0, 1-j]]" and its parser.
std::string to_string(const Matrix& m);
Matrix parse_matrix(std::string_view text);

}  // namespace quatpol
