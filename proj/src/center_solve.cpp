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

#include "center_solve.hpp"

#include <cassert>
#include <stdexcept>

namespace quatpol {

Matrix apply_center_operator(std::span<const CenterTerm> terms, const Matrix& x) {
  if (terms.empty()) throw std::invalid_argument("center operator needs at least one term");
  Matrix acc(terms.front().left.rows(), terms.front().right.cols());
  for (const CenterTerm& t : terms) acc = acc + t.left * x * t.right;
  return acc;
}

namespace {

// vec layout: entry (s, m) of X occupies coordinates 4*(s*k + m) .. +3 in the
// basis (1, i, j, k).
std::vector<Rational> vec_of(const Matrix& x) {
  std::vector<Rational> v;
  v.reserve(4 * x.rows() * x.cols());
  for (std::size_t s = 0; s < x.rows(); ++s)
    for (std::size_t m = 0; m < x.cols(); ++m) {
      const auto q = vec4(x.at(s, m));
      v.insert(v.end(), q.begin(), q.end());
    }
  return v;
}

Matrix unvec(const std::vector<Rational>& v, std::size_t rows, std::size_t cols) {
  Matrix x(rows, cols);
  for (std::size_t s = 0; s < rows; ++s)
    for (std::size_t m = 0; m < cols; ++m) {
      const std::size_t base = 4 * (s * cols + m);
      x.at(s, m) = quat_from_vec4({v[base], v[base + 1], v[base + 2], v[base + 3]});
    }
  return x;
}

}  // namespace

CenterSolveResult solve_center_linear(std::span<const CenterTerm> terms, const Matrix& rhs) {
  if (terms.empty()) throw std::invalid_argument("solve_center_linear needs at least one term");
  const std::size_t n = terms.front().left.rows();
  const std::size_t k = terms.front().right.cols();
  for (const CenterTerm& t : terms) {
    if (t.left.rows() != n || t.left.cols() != n || t.right.rows() != k || t.right.cols() != k)
      throw std::invalid_argument("solve_center_linear term shape mismatch");
  }
  if (rhs.rows() != n || rhs.cols() != k)
    throw std::invalid_argument("solve_center_linear rhs shape mismatch");

  // vec(sum_{s,m} L_is X_sm R_mj) = sum realify(L_is) realify_right(R_mj) vec(X_sm).
  const std::size_t dim = 4 * n * k;
  RationalMatrix op(dim, dim);
  for (const CenterTerm& t : terms) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s) {
        if (t.left.at(i, s).is_zero()) continue;
        const RationalMatrix lrep = realify_scalar(t.left.at(i, s));
        for (std::size_t m = 0; m < k; ++m)
          for (std::size_t j = 0; j < k; ++j) {
            if (t.right.at(m, j).is_zero()) continue;
            const RationalMatrix block = lrep * realify_scalar_right(t.right.at(m, j));
            const std::size_t r0 = 4 * (i * k + j);
            const std::size_t c0 = 4 * (s * k + m);
            for (std::size_t p = 0; p < 4; ++p)
              for (std::size_t q = 0; q < 4; ++q) op.at(r0 + p, c0 + q) += block.at(p, q);
          }
      }
  }

  const RationalSolve sol = solve_rational_system(op, vec_of(rhs));

  CenterSolveResult out;
  if (sol.consistent) out.particular = unvec(sol.particular, n, k);
  out.nullspace_basis.reserve(sol.nullspace.size());
  for (const auto& v : sol.nullspace) out.nullspace_basis.push_back(unvec(v, n, k));

#ifndef NDEBUG
  if (out.particular) assert(apply_center_operator(terms, *out.particular) == rhs);
  for (const Matrix& b : out.nullspace_basis)
    assert(apply_center_operator(terms, b).is_zero());
#endif
  return out;
}

}  // namespace quatpol
