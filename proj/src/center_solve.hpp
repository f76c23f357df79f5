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

#include "matrix.hpp"

namespace quatpol {

// One summand of a map X -> sum_t L_t * X * R_t. Such maps are linear over
// the center only, so they are solved after realification over the rationals.
struct CenterTerm {
  Matrix left;   // n x n
  Matrix right;  // k x k
};

struct CenterSolveResult {
  std::optional<Matrix> particular;    // n x k; absent when inconsistent
  std::vector<Matrix> nullspace_basis; // basis of the kernel as a RATIONAL span
};

Matrix apply_center_operator(std::span<const CenterTerm> terms, const Matrix& x);

// Realifies the operator to a 4nk x 4nk rational system and solves exactly.
// Soundness (operator(particular) == rhs, operator(basis element) == 0) is
// asserted on every call in builds with assertions enabled.
CenterSolveResult solve_center_linear(std::span<const CenterTerm> terms, const Matrix& rhs);

}  // namespace quatpol
