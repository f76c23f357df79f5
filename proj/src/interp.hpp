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
#include <vector>

#include "pairs.hpp"

namespace quatpol {

enum class SolveStatus {
  Solved,
  NoSolution,
  NotControllable,
  NotObservable,
  NodesNotPIndependent,
};

/**
 * Parametrized solution set of an interpolation problem.
 *
 * One-sided problems: { particular + left_modulus * h } (left problems) or
 * { particular + h * right_modulus } (right problems), h free. Two-sided
 * problems: { f_Y } with Y ranging over sylvester_particular plus the
 * rational span of sylvester_nullspace; all members have degree < n + k.
 */
struct SolutionFamily {
  SkewPoly particular;
  std::optional<SkewPoly> left_modulus;
  std::optional<SkewPoly> right_modulus;
  std::optional<Matrix> sylvester_particular;
  std::vector<Matrix> sylvester_nullspace;  // center (rational-span) basis
};

// Left problem (v f)^{el}(A) = b. Controllability is not required: the
// problem is solvable iff b lies in the right span of v, Av, ..., A^{d-1}v.
struct OneSidedResult {
  SolveStatus status;
  std::optional<SolutionFamily> family;
};
OneSidedResult solve_left(const Matrix& a, const Matrix& v, const Matrix& b);

// Right problem (f u)^{er}(B) = d, mirror of solve_left.
OneSidedResult solve_right(const Matrix& u, const Matrix& b_mat, const Matrix& d);

// Matrix-target problem f^{el}(A) = target, by column-by-column reduction to
// left tangential problems. Family modulus is the product of the stage
// minimal polynomials.
OneSidedResult solve_matrix_target(const Matrix& a, const Matrix& target);

struct SylvesterSolution {
  std::optional<Matrix> particular;     // absent when inconsistent
  std::vector<Matrix> nullspace_basis;  // center basis of {Y : AY - YB = 0}
};

// A Y - Y B = C by realification over the center. When the central minimal
// polynomial of A is invertible at B, the closed-form solution is computed as
// well and must agree (then the nullspace is empty and the solution unique).
SylvesterSolution solve_sylvester(const Matrix& a, const Matrix& b, const Matrix& c);

// Two-sided problem (v f)^{el}(A) = b, (f u)^{er}(B) = d, deg f < n + k.
struct TwoSidedResult {
  SolveStatus status;
  std::optional<SolutionFamily> family;
};
TwoSidedResult solve_tsp(const Matrix& a, const Matrix& v, const Matrix& u, const Matrix& b_mat,
                         const Matrix& b, const Matrix& d);

// The polynomial f_Y attached to a solution Y of the Sylvester equation; all
// four closed-form expressions are computed and must coincide. Exposed for
// family enumeration and tests.
SkewPoly tsp_polynomial(const Matrix& a, const Matrix& v, const Matrix& u, const Matrix& b_mat,
                        const Matrix& b, const Matrix& d, const Matrix& y);

// Augmented two-sided problem: additionally (v f u)^{ets}(A, B) = S. Solvable
// iff AS - SB = b u - v d, with a unique solution of degree < n + k.
struct AtspResult {
  SolveStatus status;
  std::optional<SkewPoly> f;
};
AtspResult solve_atsp(const Matrix& a, const Matrix& v, const Matrix& u, const Matrix& b_mat,
                      const Matrix& b, const Matrix& d, const Matrix& s);

// Two-sided-evaluation-only problem: (v f u)^{ets}(A, B) = S. Solutions form
// particular + alpha with a free constant alpha.
struct ConstantFamily {
  SkewPoly particular;
};
struct TwoSidedOnlyResult {
  SolveStatus status;
  std::optional<ConstantFamily> family;
};
TwoSidedOnlyResult solve_two_sided_only(const Matrix& a, const Matrix& v, const Matrix& u,
                                        const Matrix& b_mat, const Matrix& s);

// Basis of the quasi-ideal <p>_r intersect <q>_l in degree < deg p + deg q:
// the kernel elements X of X -> C_l(p) X - X C_r(q) paired with their
// polynomials A_n(z) X e_k q(z) = p(z) e_n^T X A_k(z)^T.
struct QuasiIdealElement {
  Matrix x;
  SkewPoly f;
};
std::vector<QuasiIdealElement> quasi_ideal_basis(const SkewPoly& p, const SkewPoly& q);

// Two-sided Lagrange interpolation f^{el}(alpha_i) = b_i, f^{er}(beta_j) = d_j
// through the diagonal embedding; nodes must be left (right) P-independent.
struct LagrangeNode {
  Quaternion node;
  Quaternion value;
};
struct LagrangeResult {
  SolveStatus status;
  std::optional<SolutionFamily> family;
};
LagrangeResult lagrange_two_sided(std::span<const LagrangeNode> left,
                                  std::span<const LagrangeNode> right);

}  // namespace quatpol
