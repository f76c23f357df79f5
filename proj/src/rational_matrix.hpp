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

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace quatpol {

// Dense matrix over the rationals; the workhorse behind every realified
// (center-linear) solve.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const;

  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

struct RationalSolve {
  bool consistent = false;
  std::vector<Rational> particular;              // one solution, when consistent
  std::vector<std::vector<Rational>> nullspace;  // basis of ker A, always computed
};

// Exact solve of A x = rhs over the rationals (plain Gauss-Jordan, first
// nonzero pivot).
RationalSolve solve_rational_system(const RationalMatrix& a, const std::vector<Rational>& rhs);

}  // namespace quatpol
