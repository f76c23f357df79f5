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

#include "interp.hpp"

#include <stdexcept>

#include "center_solve.hpp"

namespace quatpol {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// sum_t parts[t](z) * z^t, the contraction against the power row/column.
SkewPoly poly_contract(const VectorPoly& vp) {
  SkewPoly acc;
  for (std::size_t t = 0; t < vp.parts.size(); ++t) acc = acc + vp.parts[t].shifted_up(t);
  return acc;
}

struct TwoSidedProblem {
  Matrix a, v, u, b_mat;
  Matrix b, d;
  Matrix ctrb_inv, obsv_inv;
  SkewPoly p, q;
  std::size_t n = 0, k = 0;
};

// Shape checks plus controllability/observability; b and d may be empty
// placeholders for the S-only problem.
std::optional<SolveStatus> validate_two_sided(TwoSidedProblem& prob) {
  if (prob.a.rows() != prob.a.cols() || prob.v.cols() != 1 || prob.v.rows() != prob.a.rows() ||
      prob.b_mat.rows() != prob.b_mat.cols() || prob.u.rows() != 1 ||
      prob.u.cols() != prob.b_mat.rows())
    throw std::invalid_argument("two-sided problem shape mismatch");
  prob.n = prob.a.rows();
  prob.k = prob.b_mat.rows();
  const auto cinv = invert_matrix(ctrb(InputPair{prob.a, prob.v}));
  if (!cinv) return SolveStatus::NotControllable;
  const auto oinv = invert_matrix(obsv(OutputPair{prob.u, prob.b_mat}));
  if (!oinv) return SolveStatus::NotObservable;
  prob.ctrb_inv = *cinv;
  prob.obsv_inv = *oinv;
  prob.p = minpoly_pair(InputPair{prob.a, prob.v}).poly;
  prob.q = minpoly_pair(OutputPair{prob.u, prob.b_mat}).poly;
  return std::nullopt;
}

SkewPoly tsp_polynomial_impl(const TwoSidedProblem& prob, const Matrix& y) {
  const Matrix x = prob.ctrb_inv * y * prob.obsv_inv;
  const std::size_t n = prob.n;
  const std::size_t k = prob.k;

  const SkewPoly f1 = poly_from_coeff_column(prob.ctrb_inv * prob.b) +
                      prob.p * poly_from_coeff_row(x.row_at(n - 1));
  const SkewPoly f2 = poly_from_coeff_row(prob.d * prob.obsv_inv) +
                      poly_from_coeff_column(x.column_at(k - 1)) * prob.q;

  // A_n(z) C^{-1} (b + (zI - A) Y O^{-1} A_k(z)^T)
  VectorPoly w;
  w.column = true;
  {
    const Matrix yo = y * prob.obsv_inv;
    w.parts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.parts.push_back(poly_from_coeff_row(yo.row_at(i)));
  }
  const VectorPoly inner_left =
      VectorPoly::constant_column(prob.b) + w.shifted_up() - apply_matrix_left(prob.a, w);
  const SkewPoly f3 = poly_contract(apply_matrix_left(prob.ctrb_inv, inner_left));

  // (d + A_n(z) C^{-1} Y (zI - B)) O^{-1} A_k(z)^T
  VectorPoly rrow;
  rrow.column = false;
  {
    const Matrix cy = prob.ctrb_inv * y;
    rrow.parts.reserve(k);
    for (std::size_t j = 0; j < k; ++j)
      rrow.parts.push_back(poly_from_coeff_column(cy.column_at(j)));
  }
  const VectorPoly inner_right =
      VectorPoly::constant_row(prob.d) + rrow.shifted_up() - apply_matrix_right(rrow, prob.b_mat);
  const SkewPoly f4 = poly_contract(apply_matrix_right(inner_right, prob.obsv_inv));

  require(f1 == f2, "two-sided formula mismatch (primary displays)");
  require(f1 == f3 && f2 == f4, "two-sided formula mismatch (alternative displays)");
  require(f1.degree() < static_cast<int>(n + k), "two-sided solution degree too high");
  require(eval_tangential_left(prob.v, f1, prob.a) == prob.b, "left condition failed");
  require(eval_tangential_right(f1, prob.u, prob.b_mat) == prob.d, "right condition failed");
  return f1;
}

}  // namespace

OneSidedResult solve_left(const Matrix& a, const Matrix& v, const Matrix& b) {
  if (a.rows() != a.cols() || v.cols() != 1 || v.rows() != a.rows() || b.cols() != 1 ||
      b.rows() != a.rows())
    throw std::invalid_argument("solve_left shape mismatch");
  const MinPolyReport rep = minpoly_pair(InputPair{a, v});
  Matrix krylov(a.rows(), rep.degree);
  Matrix w = v;
  for (std::size_t j = 0; j < rep.degree; ++j) {
    krylov.set_column(j, w);
    w = a * w;
  }
  const GaussSolveResult sol = gauss_solve(krylov, b);
  if (!sol.particular) return {SolveStatus::NoSolution, std::nullopt};
  const SkewPoly f = poly_from_coeff_column(*sol.particular);
  require(eval_tangential_left(v, f, a) == b, "solve_left particular failed to verify");
  SolutionFamily family;
  family.particular = f;
  family.left_modulus = rep.poly;
  return {SolveStatus::Solved, std::move(family)};
}

OneSidedResult solve_right(const Matrix& u, const Matrix& b_mat, const Matrix& d) {
  if (b_mat.rows() != b_mat.cols() || u.rows() != 1 || u.cols() != b_mat.rows() || d.rows() != 1 ||
      d.cols() != b_mat.rows())
    throw std::invalid_argument("solve_right shape mismatch");
  const MinPolyReport rep = minpoly_pair(OutputPair{u, b_mat});
  // Rows u B^j with coefficients on the LEFT; conjugate-transpose into a
  // column system.
  Matrix krylov(b_mat.rows(), rep.degree);
  Matrix w = u;
  for (std::size_t j = 0; j < rep.degree; ++j) {
    krylov.set_column(j, w.conjugate().transpose());
    w = w * b_mat;
  }
  const GaussSolveResult sol = gauss_solve(krylov, d.conjugate().transpose());
  if (!sol.particular) return {SolveStatus::NoSolution, std::nullopt};
  std::vector<Quaternion> coeffs(rep.degree);
  for (std::size_t j = 0; j < rep.degree; ++j) coeffs[j] = sol.particular->at(j, 0).conjugate();
  const SkewPoly f{std::move(coeffs)};
  require(eval_tangential_right(f, u, b_mat) == d, "solve_right particular failed to verify");
  SolutionFamily family;
  family.particular = f;
  family.right_modulus = rep.poly;
  return {SolveStatus::Solved, std::move(family)};
}

OneSidedResult solve_matrix_target(const Matrix& a, const Matrix& target) {
  if (a.rows() != a.cols() || target.rows() != a.rows() || target.cols() != a.cols())
    throw std::invalid_argument("solve_matrix_target shape mismatch");
  const std::size_t n = a.rows();

  // Conditions (c_j h)^{el}(A) = d_j, peeled one at a time; the parameter of
  // each stage is re-substituted into the remaining conditions.
  std::vector<std::pair<Matrix, Matrix>> conds;
  conds.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    conds.emplace_back(Matrix::unit_column(n, j), target.column_at(j));

  SkewPoly f;
  SkewPoly modulus = SkewPoly::one();
  while (!conds.empty()) {
    const auto [c, dd] = conds.front();
    const OneSidedResult stage = solve_left(a, c, dd);
    if (stage.status != SolveStatus::Solved) return {SolveStatus::NoSolution, std::nullopt};
    const SkewPoly f_stage = stage.family->particular;
    const SkewPoly p_stage = *stage.family->left_modulus;
    f = f + modulus * f_stage;
    std::vector<std::pair<Matrix, Matrix>> next;
    next.reserve(conds.size() - 1);
    for (std::size_t j = 1; j < conds.size(); ++j) {
      const auto& [cj, dj] = conds[j];
      next.emplace_back(eval_tangential_left(cj, p_stage, a),
                        dj - eval_tangential_left(cj, f_stage, a));
    }
    conds = std::move(next);
    modulus = modulus * p_stage;
  }
  require(eval_matrix(f, a, Side::Left) == target, "solve_matrix_target failed to verify");
  SolutionFamily family;
  family.particular = f;
  family.left_modulus = modulus;
  return {SolveStatus::Solved, std::move(family)};
}

SylvesterSolution solve_sylvester(const Matrix& a, const Matrix& b, const Matrix& c) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || c.rows() != a.rows() ||
      c.cols() != b.rows())
    throw std::invalid_argument("solve_sylvester shape mismatch");
  const CenterTerm terms[] = {{a, Matrix::identity(b.rows())},
                              {-Matrix::identity(a.rows()), b}};
  const CenterSolveResult res = solve_center_linear(terms, c);
  SylvesterSolution out{res.particular, res.nullspace_basis};

  // Closed form through the central minimal polynomial, whenever mu_A(B) is
  // invertible; it must then be the unique solution.
  const SkewPoly mu = central_minpoly(a);
  const Matrix mu_at_b = eval_matrix(mu, b, Side::Left);
  if (const auto inv = invert_matrix(mu_at_b)) {
    const std::size_t kappa = static_cast<std::size_t>(mu.degree());
    std::vector<Matrix> ap{Matrix::identity(a.rows())};
    std::vector<Matrix> bp{Matrix::identity(b.rows())};
    for (std::size_t t = 0; t + 1 < kappa; ++t) {
      ap.push_back(ap.back() * a);
      bp.push_back(bp.back() * b);
    }
    Matrix y0(a.rows(), b.rows());
    for (std::size_t j = 1; j <= kappa; ++j) {
      const Quaternion& mu_j = mu.coeff(j);
      if (mu_j.is_zero()) continue;
      Matrix inner(a.rows(), b.rows());
      for (std::size_t i = 0; i < j; ++i) inner = inner + ap[i] * (-c) * bp[j - i - 1];
      y0 = y0 + inner.right_scaled(mu_j);
    }
    y0 = y0 * *inv;
    require(a * y0 - y0 * b == c, "closed-form Sylvester solution failed to verify");
    require(out.particular.has_value() && out.nullspace_basis.empty(),
            "closed-form/general Sylvester disagreement on solvability");
    require(*out.particular == y0, "closed-form Sylvester disagrees with realified solve");
  }
  if (out.particular)
    require(a * *out.particular - *out.particular * b == c, "Sylvester particular failed");
  return out;
}

SkewPoly tsp_polynomial(const Matrix& a, const Matrix& v, const Matrix& u, const Matrix& b_mat,
                        const Matrix& b, const Matrix& d, const Matrix& y) {
  TwoSidedProblem prob{a, v, u, b_mat, b, d, {}, {}, {}, {}};
  if (const auto bad = validate_two_sided(prob))
    throw std::invalid_argument("tsp_polynomial requires controllable/observable pairs");
  return tsp_polynomial_impl(prob, y);
}

TwoSidedResult solve_tsp(const Matrix& a, const Matrix& v, const Matrix& u, const Matrix& b_mat,
                         const Matrix& b, const Matrix& d) {
  TwoSidedProblem prob{a, v, u, b_mat, b, d, {}, {}, {}, {}};
  if (const auto bad = validate_two_sided(prob)) return {*bad, std::nullopt};
  if (b.cols() != 1 || b.rows() != prob.n || d.rows() != 1 || d.cols() != prob.k)
    throw std::invalid_argument("solve_tsp target shape mismatch");

  const SylvesterSolution syl = solve_sylvester(a, b_mat, b * u - v * d);
  if (!syl.particular) return {SolveStatus::NoSolution, std::nullopt};

  SolutionFamily family;
  family.particular = tsp_polynomial_impl(prob, *syl.particular);
  family.sylvester_particular = syl.particular;
  family.sylvester_nullspace = syl.nullspace_basis;
  return {SolveStatus::Solved, std::move(family)};
}

AtspResult solve_atsp(const Matrix& a, const Matrix& v, const Matrix& u, const Matrix& b_mat,
                      const Matrix& b, const Matrix& d, const Matrix& s) {
  TwoSidedProblem prob{a, v, u, b_mat, b, d, {}, {}, {}, {}};
  if (const auto bad = validate_two_sided(prob)) return {*bad, std::nullopt};
  if (b.cols() != 1 || b.rows() != prob.n || d.rows() != 1 || d.cols() != prob.k ||
      s.rows() != prob.n || s.cols() != prob.k)
    throw std::invalid_argument("solve_atsp target shape mismatch");

  if (!(a * s - s * b_mat == b * u - v * d)) return {SolveStatus::NoSolution, std::nullopt};
  const SkewPoly f = tsp_polynomial_impl(prob, s);
  require(two_sided_eval(v, f, u, a, b_mat) == s, "ATSP two-sided condition failed");
  return {SolveStatus::Solved, f};
}

TwoSidedOnlyResult solve_two_sided_only(const Matrix& a, const Matrix& v, const Matrix& u,
                                        const Matrix& b_mat, const Matrix& s) {
  TwoSidedProblem prob{a, v, u, b_mat, Matrix(a.rows(), 1), Matrix(1, b_mat.rows()),
                       {}, {}, {}, {}};
  if (const auto bad = validate_two_sided(prob)) return {*bad, std::nullopt};
  if (s.rows() != prob.n || s.cols() != prob.k)
    throw std::invalid_argument("solve_two_sided_only target shape mismatch");

  const Matrix g = prob.ctrb_inv * (a * s - s * b_mat) * prob.obsv_inv;
  for (std::size_t i = 1; i < prob.n; ++i)
    for (std::size_t j = 1; j < prob.k; ++j)
      if (!g.at(i, j).is_zero()) return {SolveStatus::NoSolution, std::nullopt};

  const Matrix x = prob.ctrb_inv * s * prob.obsv_inv;
  const SkewPoly f = poly_from_coeff_column(g.column_at(0)) +
                     prob.p * poly_from_coeff_row(x.row_at(prob.n - 1));
  require(two_sided_eval(v, f, u, a, b_mat) == s, "two-sided-only condition failed");
  require(two_sided_eval(v, f + SkewPoly::one(), u, a, b_mat) == s,
          "free constant changed the two-sided value");
  return {SolveStatus::Solved, ConstantFamily{f}};
}

std::vector<QuasiIdealElement> quasi_ideal_basis(const SkewPoly& p, const SkewPoly& q) {
  if (!p.is_monic() || !q.is_monic() || p.degree() < 1 || q.degree() < 1)
    throw std::invalid_argument("quasi_ideal_basis needs monic polynomials of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t k = static_cast<std::size_t>(q.degree());
  const Matrix cl = companion(p, Side::Left);
  const Matrix cr = companion(q, Side::Right);
  const CenterTerm terms[] = {{cl, Matrix::identity(k)}, {-Matrix::identity(n), cr}};
  const CenterSolveResult res = solve_center_linear(terms, Matrix(n, k));

  std::vector<QuasiIdealElement> out;
  out.reserve(res.nullspace_basis.size());
  for (const Matrix& x : res.nullspace_basis) {
    const SkewPoly f = poly_from_coeff_column(x.column_at(k - 1)) * q;
    require(f == p * poly_from_coeff_row(x.row_at(n - 1)),
            "quasi-ideal element factorization mismatch");
    require(left_divide(f, p).remainder.is_zero() && right_divide(f, q).remainder.is_zero(),
            "quasi-ideal element is not a two-sided multiple");
    require(f.degree() < static_cast<int>(n + k), "quasi-ideal element degree too high");
    out.push_back({x, f});
  }
  return out;
}

LagrangeResult lagrange_two_sided(std::span<const LagrangeNode> left,
                                  std::span<const LagrangeNode> right) {
  // Degenerate case: no conditions at all; every polynomial solves, reported
  // as 0 with free modulus 1.
  if (left.empty() && right.empty()) {
    SolutionFamily family;
    family.particular = SkewPoly::zero();
    family.left_modulus = SkewPoly::one();
    return {SolveStatus::Solved, std::move(family)};
  }

  std::vector<Quaternion> alphas, bs, betas, ds;
  for (const LagrangeNode& nd : left) {
    alphas.push_back(nd.node);
    bs.push_back(nd.value);
  }
  for (const LagrangeNode& nd : right) {
    betas.push_back(nd.node);
    ds.push_back(nd.value);
  }
  if (!alphas.empty() && !p_independent(alphas, Side::Left))
    return {SolveStatus::NodesNotPIndependent, std::nullopt};
  if (!betas.empty() && !p_independent(betas, Side::Right))
    return {SolveStatus::NodesNotPIndependent, std::nullopt};

  LagrangeResult out{SolveStatus::NoSolution, std::nullopt};
  if (right.empty()) {
    const OneSidedResult r = solve_left(Matrix::diagonal(alphas), Matrix::ones_column(alphas.size()),
                                        Matrix::column(bs));
    out = {r.status, r.family};
  } else if (left.empty()) {
    const OneSidedResult r = solve_right(Matrix::ones_row(betas.size()), Matrix::diagonal(betas),
                                         Matrix::row(ds));
    out = {r.status, r.family};
  } else {
    const TwoSidedResult r =
        solve_tsp(Matrix::diagonal(alphas), Matrix::ones_column(alphas.size()),
                  Matrix::ones_row(betas.size()), Matrix::diagonal(betas), Matrix::column(bs),
                  Matrix::row(ds));
    out = {r.status, r.family};
  }
  if (out.status == SolveStatus::Solved) {
    for (const LagrangeNode& nd : left)
      require(eval_scalar(out.family->particular, nd.node, Side::Left) == nd.value,
              "Lagrange left node condition failed");
    for (const LagrangeNode& nd : right)
      require(eval_scalar(out.family->particular, nd.node, Side::Right) == nd.value,
              "Lagrange right node condition failed");
  }
  return out;
}

}  // namespace quatpol
