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

#include "matrix.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace quatpol {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
  return m;
}

Matrix Matrix::column(std::vector<Quaternion> entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = std::move(entries[i]);
  return m;
}

Matrix Matrix::row(std::vector<Quaternion> entries) {
  Matrix m(1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = std::move(entries[j]);
  return m;
}

Matrix Matrix::unit_column(std::size_t n, std::size_t j) {
  Matrix m(n, 1);
  m.at(j, 0) = Quaternion::one();
  return m;
}

Matrix Matrix::unit_row(std::size_t n, std::size_t j) {
  Matrix m(1, n);
  m.at(0, j) = Quaternion::one();
  return m;
}

Matrix Matrix::ones_column(std::size_t n) {
  Matrix m(n, 1);
  for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = Quaternion::one();
  return m;
}

Matrix Matrix::ones_row(std::size_t n) { return ones_column(n).transpose(); }

Matrix Matrix::diagonal(std::span<const Quaternion> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& q : e_)
    if (!q.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conjugate();
  return m;
}

Matrix Matrix::column_at(std::size_t j) const {
  Matrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

Matrix Matrix::row_at(std::size_t i) const {
  Matrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

void Matrix::set_column(std::size_t j, const Matrix& col) {
  if (col.rows() != rows_ || col.cols() != 1)
    throw std::invalid_argument("set_column shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = col.at(i, 0);
}

Matrix Matrix::left_scaled(const Quaternion& q) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = q * e_[i];
  return m;
}

Matrix Matrix::right_scaled(const Quaternion& q) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * q;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + other.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - other.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Quaternion& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other.at(k, j).is_zero()) continue;
        m.at(i, j) += aik * other.at(k, j);
      }
    }
  return m;
}

Matrix block_diag(std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const Matrix& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t i0 = 0, j0 = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(i0 + i, j0 + j) = b.at(i, j);
    i0 += b.rows();
    j0 += b.cols();
  }
  return m;
}

Matrix vstack(std::span<const Matrix> blocks) {
  std::size_t r = 0;
  std::size_t c = blocks.empty() ? 0 : blocks.front().cols();
  for (const Matrix& b : blocks) {
    if (b.cols() != c) throw std::invalid_argument("vstack column mismatch");
    r += b.rows();
  }
  Matrix m(r, c);
  std::size_t i0 = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i0 + i, j) = b.at(i, j);
    i0 += b.rows();
  }
  return m;
}

Matrix hstack(std::span<const Matrix> blocks) {
  std::size_t c = 0;
  std::size_t r = blocks.empty() ? 0 : blocks.front().rows();
  for (const Matrix& b : blocks) {
    if (b.rows() != r) throw std::invalid_argument("hstack row mismatch");
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t j0 = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, j0 + j) = b.at(i, j);
    j0 += b.cols();
  }
  return m;
}

Matrix matrix_power(const Matrix& a, std::size_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_power needs a square matrix");
  Matrix r = Matrix::identity(a.rows());
  for (std::size_t t = 0; t < e; ++t) r = r * a;
  return r;
}

namespace {

// Gauss-Jordan on [A | tail] with left row operations; pivots are the first
// nonzero entries. Returns the pivot column list.
std::vector<std::size_t> reduce_in_place(Matrix& w, std::size_t lead_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < lead_cols && row < w.rows(); ++col) {
    std::size_t p = row;
    while (p < w.rows() && w.at(p, col).is_zero()) ++p;
    if (p == w.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(p, j), w.at(row, j));
    const Quaternion inv = w.at(row, col).inverse();
    for (std::size_t j = col; j < w.cols(); ++j) w.at(row, j) = inv * w.at(row, j);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == row || w.at(i, col).is_zero()) continue;
      const Quaternion factor = w.at(i, col);
      for (std::size_t j = col; j < w.cols(); ++j)
        w.at(i, j) -= factor * w.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

GaussSolveResult gauss_solve(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows())
    throw std::invalid_argument("gauss_solve expects b of shape rows(A) x 1");
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();

  Matrix w(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, m) = b.at(i, 0);
  }
  const std::vector<std::size_t> pivots = reduce_in_place(w, m);

  GaussSolveResult out;
  bool consistent = true;
  for (std::size_t i = pivots.size(); i < n; ++i)
    if (!w.at(i, m).is_zero()) consistent = false;

  if (consistent) {
    Matrix x(m, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x.at(pivots[r], 0) = w.at(r, m);
    out.particular = std::move(x);
  }

  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t j = 0; j < m; ++j) {
    if (is_pivot[j]) continue;
    Matrix y(m, 1);
    y.at(j, 0) = Quaternion::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) y.at(pivots[r], 0) = -w.at(r, j);
    out.nullspace.push_back(std::move(y));
  }
  return out;
}

std::optional<Matrix> invert_matrix(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert_matrix needs a square matrix");
  const std::size_t n = a.rows();
  Matrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n + i) = Quaternion::one();
  }
  const std::vector<std::size_t> pivots = reduce_in_place(w, n);
  if (pivots.size() < n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
  return inv;
}

KrylovDependence krylov_dependence(std::span<const Matrix> vectors) {
  if (vectors.empty()) throw std::invalid_argument("krylov_dependence needs a nonempty sequence");
  const std::size_t n = vectors.front().rows();
  for (const Matrix& v : vectors)
    if (v.cols() != 1 || v.rows() != n)
      throw std::invalid_argument("krylov_dependence expects n x 1 vectors");

  for (std::size_t d = 0; d < vectors.size(); ++d) {
    Matrix prefix(n, d);
    for (std::size_t k = 0; k < d; ++k) prefix.set_column(k, vectors[k]);
    const GaussSolveResult sol = gauss_solve(prefix, -vectors[d]);
    if (sol.particular) {
      KrylovDependence out;
      out.d = d;
      out.coeffs.reserve(d);
      for (std::size_t k = 0; k < d; ++k) out.coeffs.push_back(sol.particular->at(k, 0));
      return out;
    }
  }
  return KrylovDependence{vectors.size(), {}};
}

KrylovDependence krylov_dependence_rows(std::span<const Matrix> rows) {
  std::vector<Matrix> cols;
  cols.reserve(rows.size());
  for (const Matrix& r : rows) {
    if (r.rows() != 1) throw std::invalid_argument("krylov_dependence_rows expects 1 x n rows");
    cols.push_back(r.conjugate().transpose());
  }
  KrylovDependence dep = krylov_dependence(cols);
  for (Quaternion& q : dep.coeffs) q = q.conjugate();
  return dep;
}

RationalMatrix realify_matrix(const Matrix& m) {
  RationalMatrix r(4 * m.rows(), 4 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RationalMatrix block = realify_scalar(m.at(i, j));
      for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = 0; t < 4; ++t) r.at(4 * i + s, 4 * j + t) = block.at(s, t);
    }
  return r;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m.at(i, j));
    }
    s += "]";
  }
  s += "]";
  return s;
}

namespace {

void skip_ws(std::string_view t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

void expect(std::string_view t, std::size_t& i, char ch) {
  skip_ws(t, i);
  if (i >= t.size() || t[i] != ch)
    throw ParseError(std::string("expected '") + ch + "' in matrix literal", i);
  ++i;
}

// A quaternion entry runs until the next ',' or ']' at bracket depth zero.
Quaternion parse_entry(std::string_view t, std::size_t& i) {
  skip_ws(t, i);
  const std::size_t start = i;
  while (i < t.size() && t[i] != ',' && t[i] != ']') ++i;
  if (i == start) throw ParseError("empty matrix entry", i);
  return parse_quaternion(t.substr(start, i - start));
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::size_t i = 0;
  expect(text, i, '[');
  std::vector<std::vector<Quaternion>> rows;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect(text, i, '[');
      std::vector<Quaternion> row;
      skip_ws(text, i);
      if (i < text.size() && text[i] == ']') {
        ++i;
      } else {
        while (true) {
          row.push_back(parse_entry(text, i));
          skip_ws(text, i);
          if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
          }
          expect(text, i, ']');
          break;
        }
      }
      rows.push_back(std::move(row));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(text, i, ']');
      break;
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters after matrix literal", i);

  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  for (const auto& row : rows)
    if (row.size() != c) throw ParseError("ragged matrix literal", 0);
  Matrix m(r, c);
  for (std::size_t ii = 0; ii < r; ++ii)
    for (std::size_t jj = 0; jj < c; ++jj) m.at(ii, jj) = rows[ii][jj];
  return m;
}

}  // namespace quatpol
