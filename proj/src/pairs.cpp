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

#include "pairs.hpp"

#include <cassert>
#include <stdexcept>

#include "center_solve.hpp"
#include "random.hpp"

namespace quatpol {

namespace {

void check_input_pair(const InputPair& pair) {
  if (pair.a.rows() != pair.a.cols() || pair.v.cols() != 1 || pair.v.rows() != pair.a.rows())
    throw std::invalid_argument("input pair shape mismatch");
}

void check_output_pair(const OutputPair& pair) {
  if (pair.b.rows() != pair.b.cols() || pair.u.rows() != 1 || pair.u.cols() != pair.b.rows())
    throw std::invalid_argument("output pair shape mismatch");
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

Matrix ctrb(const InputPair& pair) {
  check_input_pair(pair);
  const std::size_t n = pair.a.rows();
  Matrix c(n, n);
  Matrix w = pair.v;
  for (std::size_t j = 0; j < n; ++j) {
    c.set_column(j, w);
    if (j + 1 < n) w = pair.a * w;
  }
  return c;
}

Matrix obsv(const OutputPair& pair) {
  check_output_pair(pair);
  const std::size_t n = pair.b.rows();
  Matrix o(n, n);
  Matrix w = pair.u;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) o.at(i, j) = w.at(0, j);
    if (i + 1 < n) w = w * pair.b;
  }
  return o;
}

MinPolyReport minpoly_pair(const InputPair& pair) {
  check_input_pair(pair);
  const std::size_t n = pair.a.rows();
  std::vector<Matrix> krylov;
  krylov.reserve(n + 1);
  Matrix w = pair.v;
  for (std::size_t j = 0; j <= n; ++j) {
    krylov.push_back(w);
    w = pair.a * w;
  }
  const KrylovDependence dep = krylov_dependence(krylov);
  std::vector<Quaternion> coeffs = dep.coeffs;
  coeffs.push_back(Quaternion::one());
  MinPolyReport report{SkewPoly(std::move(coeffs)), dep.d, dep.d == n};
#ifndef NDEBUG
  assert(eval_tangential_left(pair.v, report.poly, pair.a).is_zero());
  if (report.full) {
    const auto cinv = invert_matrix(ctrb(pair));
    assert(cinv);
    const SkewPoly closed =
        SkewPoly::monomial(Quaternion::one(), n) - poly_from_coeff_column(*cinv * krylov[n]);
    assert(closed == report.poly);
  }
#endif
  return report;
}

MinPolyReport minpoly_pair(const OutputPair& pair) {
  check_output_pair(pair);
  const std::size_t n = pair.b.rows();
  std::vector<Matrix> krylov;
  krylov.reserve(n + 1);
  Matrix w = pair.u;
  for (std::size_t j = 0; j <= n; ++j) {
    krylov.push_back(w);
    w = w * pair.b;
  }
  const KrylovDependence dep = krylov_dependence_rows(krylov);
  std::vector<Quaternion> coeffs = dep.coeffs;
  coeffs.push_back(Quaternion::one());
  MinPolyReport report{SkewPoly(std::move(coeffs)), dep.d, dep.d == n};
#ifndef NDEBUG
  assert(eval_tangential_right(report.poly, pair.u, pair.b).is_zero());
  if (report.full) {
    const auto oinv = invert_matrix(obsv(pair));
    assert(oinv);
    const SkewPoly closed =
        SkewPoly::monomial(Quaternion::one(), n) - poly_from_coeff_row(krylov[n] * *oinv);
    assert(closed == report.poly);
  }
#endif
  return report;
}

std::optional<CanonicalForm> canonical_form(const InputPair& pair) {
  check_input_pair(pair);
  const auto cinv = invert_matrix(ctrb(pair));
  if (!cinv) return std::nullopt;
  const MinPolyReport rep = minpoly_pair(pair);
  CanonicalForm out{companion(rep.poly, Side::Left), *cinv, rep.poly};
  require(out.basis_change * pair.a == out.companion * out.basis_change,
          "canonical_form: intertwining failed");
  require(out.basis_change * pair.v == Matrix::unit_column(pair.a.rows(), 0),
          "canonical_form: T v != e1");
  return out;
}

std::optional<CanonicalForm> canonical_form(const OutputPair& pair) {
  check_output_pair(pair);
  const Matrix o = obsv(pair);
  const auto oinv = invert_matrix(o);
  if (!oinv) return std::nullopt;
  const MinPolyReport rep = minpoly_pair(pair);
  CanonicalForm out{companion(rep.poly, Side::Right), o, rep.poly};
  require(out.basis_change * pair.b == out.companion * out.basis_change,
          "canonical_form: intertwining failed");
  require(pair.u * *oinv == Matrix::unit_row(pair.b.rows(), 0), "canonical_form: u T^-1 != e1^T");
  return out;
}

std::optional<Matrix> pairs_similar(const InputPair& first, const InputPair& second) {
  check_input_pair(first);
  check_input_pair(second);
  if (first.a.rows() != second.a.rows()) return std::nullopt;
  const MinPolyReport r1 = minpoly_pair(first);
  const MinPolyReport r2 = minpoly_pair(second);
  if (!r1.full || !r2.full)
    throw std::invalid_argument("pairs_similar requires controllable pairs");
  if (r1.poly != r2.poly) return std::nullopt;
  const auto c1inv = invert_matrix(ctrb(first));
  Matrix t = ctrb(second) * *c1inv;
  require(t * first.a == second.a * t, "pairs_similar: intertwining failed");
  require(t * first.v == second.v, "pairs_similar: T v != v'");
  return t;
}

std::optional<Matrix> pairs_similar(const OutputPair& first, const OutputPair& second) {
  check_output_pair(first);
  check_output_pair(second);
  if (first.b.rows() != second.b.rows()) return std::nullopt;
  const MinPolyReport r1 = minpoly_pair(first);
  const MinPolyReport r2 = minpoly_pair(second);
  if (!r1.full || !r2.full)
    throw std::invalid_argument("pairs_similar requires observable pairs");
  if (r1.poly != r2.poly) return std::nullopt;
  const auto o2inv = invert_matrix(obsv(second));
  Matrix t = *o2inv * obsv(first);
  require(t * first.b == second.b * t, "pairs_similar: intertwining failed");
  const auto tinv = invert_matrix(t);
  require(tinv && first.u * *tinv == second.u, "pairs_similar: u T^-1 != u'");
  return t;
}

MatrixMinPolys matrix_minpolys(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_minpolys needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<SkewPoly> column_polys, row_polys;
  column_polys.reserve(n);
  row_polys.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    column_polys.push_back(minpoly_pair(InputPair{a, Matrix::unit_column(n, t)}).poly);
    row_polys.push_back(minpoly_pair(OutputPair{Matrix::unit_row(n, t), a}).poly);
  }
  MatrixMinPolys out{lrcm(column_polys), llcm(row_polys)};
  require(eval_matrix(out.left, a, Side::Left).is_zero(), "left minimal polynomial failed");
  require(eval_matrix(out.right, a, Side::Right).is_zero(), "right minimal polynomial failed");
  return out;
}

SkewPoly central_minpoly(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("central_minpoly needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return SkewPoly::one();
  const RationalMatrix r = realify_matrix(a);
  const std::size_t dim = 16 * n * n;

  std::vector<RationalMatrix> powers{RationalMatrix::identity(4 * n)};
  auto flatten = [&](const RationalMatrix& m) {
    std::vector<Rational> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < 4 * n; ++i)
      for (std::size_t j = 0; j < 4 * n; ++j) v.push_back(m.at(i, j));
    return v;
  };

  for (std::size_t m = 1; m <= 4 * n; ++m) {
    powers.push_back(powers.back() * r);
    RationalMatrix basis(dim, m);
    for (std::size_t t = 0; t < m; ++t) {
      const auto col = flatten(powers[t]);
      for (std::size_t i = 0; i < dim; ++i) basis.at(i, t) = col[i];
    }
    const RationalSolve sol = solve_rational_system(basis, flatten(powers[m]));
    if (!sol.consistent) continue;
    std::vector<Quaternion> coeffs(m + 1);
    for (std::size_t t = 0; t < m; ++t) coeffs[t] = Quaternion(-sol.particular[t]);
    coeffs[m] = Quaternion::one();
    SkewPoly mu(std::move(coeffs));
    require(eval_matrix(mu, a, Side::Left).is_zero(), "central_minpoly does not annihilate");
    return mu;
  }
  throw std::logic_error("central_minpoly: no dependence found");  // unreachable
}

namespace {

SkewPoly common_multiple(std::span<const SkewPoly> fs, Side side) {
  if (fs.empty()) throw std::invalid_argument("lcm of an empty family");
  std::vector<Matrix> blocks, vectors;
  for (const SkewPoly& f : fs) {
    if (!f.is_monic()) throw std::invalid_argument("lcm inputs must be monic");
    if (f.degree() == 0) continue;  // <1> is the whole ring
    blocks.push_back(companion(f, side));
    const std::size_t nf = static_cast<std::size_t>(f.degree());
    vectors.push_back(side == Side::Left ? Matrix::unit_column(nf, 0) : Matrix::unit_row(nf, 0));
  }
  if (blocks.empty()) return SkewPoly::one();
  const Matrix big = block_diag(blocks);
  SkewPoly result = side == Side::Left
                        ? minpoly_pair(InputPair{big, vstack(vectors)}).poly
                        : minpoly_pair(OutputPair{hstack(vectors), big}).poly;
  for (const SkewPoly& f : fs) {
    if (f.degree() == 0) continue;
    const DivisionResult div =
        side == Side::Left ? left_divide(result, f) : right_divide(result, f);
    require(div.remainder.is_zero(), "common multiple misses a factor");
  }
  return result;
}

}  // namespace

SkewPoly lrcm(std::span<const SkewPoly> fs) { return common_multiple(fs, Side::Left); }
SkewPoly llcm(std::span<const SkewPoly> fs) { return common_multiple(fs, Side::Right); }

bool p_independent(std::span<const Quaternion> nodes, Side side) {
  if (nodes.empty()) throw std::invalid_argument("p_independent needs at least one node");
  std::vector<SkewPoly> linear;
  linear.reserve(nodes.size());
  for (const Quaternion& alpha : nodes) linear.push_back(rho(alpha));
  const SkewPoly m = side == Side::Left ? lrcm(linear) : llcm(linear);
  return m.degree() == static_cast<int>(nodes.size());
}

Matrix vandermonde(std::span<const Quaternion> nodes, Side side) {
  const std::size_t n = nodes.size();
  Matrix v(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    Quaternion power = Quaternion::one();
    for (std::size_t e = 0; e < n; ++e) {
      if (side == Side::Left)
        v.at(t, e) = power;  // [alpha_i^{j-1}]
      else
        v.at(e, t) = power;  // [beta_j^{i-1}]
      power = power * nodes[t];
    }
  }
  return v;
}

Matrix gamma_matrix(std::span<const Quaternion> gammas) {
  if (gammas.empty()) throw std::invalid_argument("gamma_matrix needs at least one entry");
  Matrix g(gammas.size(), gammas.size());
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    g.at(i, i) = gammas[i];
    if (i) g.at(i, i - 1) = Quaternion::one();
  }
  return g;
}

std::optional<Matrix> find_cyclic_vector(const Matrix& a, std::size_t trials, std::uint64_t seed) {
  if (a.rows() != a.cols()) throw std::invalid_argument("find_cyclic_vector needs a square matrix");
  const std::size_t n = a.rows();
  auto controllable = [&](const Matrix& v) {
    return invert_matrix(ctrb(InputPair{a, v})).has_value();
  };
  for (std::size_t t = 0; t < n; ++t) {
    Matrix v = Matrix::unit_column(n, t);
    if (controllable(v)) return v;
  }
  if (n > 0) {
    Matrix v = Matrix::ones_column(n);
    if (controllable(v)) return v;
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = random_quaternion(rng, 5, 5);
    if (controllable(v)) return v;
  }
  return std::nullopt;
}

namespace {

// Coprimeness certificates by degree additivity of the one-sided lcms.
bool left_coprime_certified(const SkewPoly& f, const SkewPoly& h_prime) {
  const SkewPoly hn = h_prime.monic_right();  // preserves left divisors
  const SkewPoly fs[] = {f, hn};
  return lrcm(fs).degree() == f.degree() + hn.degree();
}

bool right_coprime_certified(const SkewPoly& h, const SkewPoly& f) {
  const SkewPoly hn = h.monic_left();  // preserves right divisors
  const SkewPoly fs[] = {hn, f};
  return llcm(fs).degree() == hn.degree() + f.degree();
}

}  // namespace

PolySimilarity polys_similar(const SkewPoly& f, const SkewPoly& g, std::size_t trials,
                             std::uint64_t seed) {
  if (!f.is_monic() || !g.is_monic())
    throw std::invalid_argument("polys_similar requires monic polynomials");
  if (f.degree() != g.degree()) return {PolySimilarity::Verdict::TriviallyNot, {}, {}};
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 0) return {PolySimilarity::Verdict::Witness, SkewPoly::one(), SkewPoly::one()};

  // Intertwiner space: stacked (h; h') with g h - h' f = 0, deg h, deg h' < n.
  std::vector<CenterTerm> terms;
  {
    Matrix gh(2 * n, 2 * n);
    for (std::size_t m = 0; m < 2 * n; ++m)
      for (std::size_t t = 0; t < n && t <= m; ++t)
        if (m - t <= static_cast<std::size_t>(g.degree())) gh.at(m, t) = g.coeff(m - t);
    terms.push_back({std::move(gh), Matrix::identity(1)});
  }
  for (std::size_t j = 0; j <= n; ++j) {
    if (f.coeff(j).is_zero()) continue;
    Matrix shift(2 * n, 2 * n);
    for (std::size_t t = 0; t < n; ++t)
      if (t + j < 2 * n) shift.at(t + j, n + t) = -Quaternion::one();
    Matrix fj(1, 1);
    fj.at(0, 0) = f.coeff(j);
    terms.push_back({std::move(shift), std::move(fj)});
  }
  const CenterSolveResult space = solve_center_linear(terms, Matrix(2 * n, 1));
  if (space.nullspace_basis.empty()) return {PolySimilarity::Verdict::TriviallyNot, {}, {}};

  auto split = [n](const Matrix& stacked) {
    std::vector<Quaternion> hc(n), hpc(n);
    for (std::size_t t = 0; t < n; ++t) {
      hc[t] = stacked.at(t, 0);
      hpc[t] = stacked.at(n + t, 0);
    }
    return std::pair<SkewPoly, SkewPoly>{SkewPoly(std::move(hc)), SkewPoly(std::move(hpc))};
  };

  auto certify = [&](const SkewPoly& h, const SkewPoly& hp) {
    return !h.is_zero() && !hp.is_zero() && g * h == hp * f && left_coprime_certified(f, hp) &&
           right_coprime_certified(h, f);
  };

  if (f == g) return {PolySimilarity::Verdict::Witness, SkewPoly::one(), SkewPoly::one()};
  for (const Matrix& basis : space.nullspace_basis) {
    const auto [h, hp] = split(basis);
    if (certify(h, hp)) return {PolySimilarity::Verdict::Witness, h, hp};
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix candidate(2 * n, 1);
    bool nonzero = false;
    for (const Matrix& basis : space.nullspace_basis) {
      const Rational c(rng.range(-3, 3));
      if (c == 0) continue;
      nonzero = true;
      candidate = candidate + basis.right_scaled(Quaternion(c));
    }
    if (!nonzero) continue;
    const auto [h, hp] = split(candidate);
    if (certify(h, hp)) return {PolySimilarity::Verdict::Witness, h, hp};
  }
  return {PolySimilarity::Verdict::NoWitnessFound, {}, {}};
}

}  // namespace quatpol
