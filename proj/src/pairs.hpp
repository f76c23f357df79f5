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

#include <cstdint>
#include <optional>
#include <span>

#include "poly.hpp"

namespace quatpol {

// Input pair (A, v): A is n x n, v is an n x 1 column. Carrier of left
// tangential interpolation conditions.
struct InputPair {
  Matrix a;
  Matrix v;
};

// Output pair (u, B): u is a 1 x n row, B is n x n.
struct OutputPair {
  Matrix u;
  Matrix b;
};

// Columns v, Av, ..., A^{n-1}v.
Matrix ctrb(const InputPair& pair);
// Rows u, uB, ..., uB^{n-1}.
Matrix obsv(const OutputPair& pair);

struct MinPolyReport {
  SkewPoly poly;       // monic generator of the pair's ideal
  std::size_t degree;  // = deg poly
  bool full;           // degree == n, i.e. controllable (resp. observable)
};

// Monic generator of {p : (v p)^{el}(A) = 0}, via the least right-dependent
// Krylov prefix. When the pair is controllable this equals
// z^n - A_n(z) C^{-1} A^n v, asserted in builds with assertions on.
MinPolyReport minpoly_pair(const InputPair& pair);
// Mirror for {p : (p u)^{er}(B) = 0} (left coefficients along rows).
MinPolyReport minpoly_pair(const OutputPair& pair);

struct CanonicalForm {
  Matrix companion;     // C_l(P) (resp. C_r(P))
  Matrix basis_change;  // T with T A T^{-1} = companion and T v = e_1 (u T^{-1} = e_1^T)
  SkewPoly minpoly;
};

// nullopt when the pair is not controllable (resp. not observable).
std::optional<CanonicalForm> canonical_form(const InputPair& pair);
std::optional<CanonicalForm> canonical_form(const OutputPair& pair);

// Exact similarity witness T (T A T^{-1} = A', T v = v'); nullopt when the
// minimal polynomials differ. Both pairs must be controllable (observable).
std::optional<Matrix> pairs_similar(const InputPair& first, const InputPair& second);
std::optional<Matrix> pairs_similar(const OutputPair& first, const OutputPair& second);

struct MatrixMinPolys {
  SkewPoly left;   // generator of {p : p^{el}(A) = 0}
  SkewPoly right;  // generator of {p : p^{er}(A) = 0}
};

// Left minimal polynomial as lrcm of the column-pair minimal polynomials,
// right as llcm of the row-pair ones.
MatrixMinPolys matrix_minpolys(const Matrix& a);

// Least-degree monic polynomial with rational coefficients annihilating A,
// computed by Krylov dependence among the powers of realify_matrix(A).
SkewPoly central_minpoly(const Matrix& a);

// Least right/left common multiple: the monic generator of the intersection
// of the right (left) ideals. Computed as the minimal polynomial of the
// block companion pair, which needs no coprimeness assumption.
SkewPoly lrcm(std::span<const SkewPoly> fs);
SkewPoly llcm(std::span<const SkewPoly> fs);

// Left (right) P-independence: deg lrcm(rho_a1, ..., rho_an) = n
// (equivalently, the left (right) Vandermonde matrix is invertible).
bool p_independent(std::span<const Quaternion> nodes, Side side);

// Left Vandermonde [alpha_i^{j-1}] / right Vandermonde [beta_j^{i-1}].
Matrix vandermonde(std::span<const Quaternion> nodes, Side side);

// Two-diagonal matrix: diagonal gamma_1..gamma_n, ones on the subdiagonal.
Matrix gamma_matrix(std::span<const Quaternion> gammas);

// Tries e_1..e_n and (1,...,1)^T deterministically, then `trials` random
// candidates with small rational entries. A returned v is verified exactly;
// nullopt carries no claim that A is non-cyclic.
std::optional<Matrix> find_cyclic_vector(const Matrix& a, std::size_t trials, std::uint64_t seed);

struct PolySimilarity {
  enum class Verdict {
    Witness,         // g h = h' f with both coprimeness certificates verified
    TriviallyNot,    // degree mismatch, or the intertwiner space is zero
    NoWitnessFound,  // inconclusive: no certified candidate within `trials`
  };
  Verdict verdict;
  SkewPoly h;        // set only for Witness
  SkewPoly h_prime;  // set only for Witness
};

// Witness-based similarity test for monic f, g: searches the center-linear
// space of pairs (h, h') with g h = h' f, deg h < deg f, deg h' < deg g, and
// certifies coprimeness by lrcm/llcm degree additivity.
PolySimilarity polys_similar(const SkewPoly& f, const SkewPoly& g, std::size_t trials,
                             std::uint64_t seed);

}  // namespace quatpol
