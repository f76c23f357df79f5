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

#include "rational_matrix.hpp"

#include <stdexcept>

namespace quatpol {

std::string to_string(const Rational& r) { return r.str(); }

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("rational matrix shape mismatch in +");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + other.e_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("rational matrix shape mismatch in -");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - other.e_[i];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("rational matrix shape mismatch in *");
  RationalMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        r.at(i, j) += aik * other.at(k, j);
      }
    }
  return r;
}

RationalSolve solve_rational_system(const RationalMatrix& a, const std::vector<Rational>& rhs) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (rhs.size() != n) throw std::invalid_argument("rational rhs length mismatch");

  // Augmented [A | rhs], reduced in place to RREF.
  RationalMatrix w(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, m) = rhs[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && w.at(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != row)
      for (std::size_t j = col; j <= m; ++j) std::swap(w.at(p, j), w.at(row, j));
    const Rational inv = Rational(1) / w.at(row, col);
    for (std::size_t j = col; j <= m; ++j) w.at(row, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      const Rational factor = w.at(i, col);
      for (std::size_t j = col; j <= m; ++j) w.at(i, j) -= factor * w.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  RationalSolve out;
  out.consistent = true;
  for (std::size_t i = row; i < n; ++i)
    if (w.at(i, m) != 0) out.consistent = false;

  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  if (out.consistent) {
    out.particular.assign(m, Rational(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) out.particular[pivot_col[r]] = w.at(r, m);
  }

  for (std::size_t j = 0; j < m; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(m, Rational(0));
    v[j] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -w.at(r, j);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace quatpol
