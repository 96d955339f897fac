/*
 * Copyright 2026 the kred developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include <gmpxx.h>

#include "intmat.hpp"

namespace kred {

using RationalVector = std::vector<mpq_class>;
using IntVector = std::vector<mpz_class>;

/* true iff prod_r (A - r I) is exactly the zero matrix. With distinct roots
 * this certifies that A is diagonalizable with spectrum inside the list. */
bool annihilation_check(const IntMatrix& a, const std::vector<long>& roots);

/* dim - rank(A - r I); the exact eigenvalue multiplicity once
 * annihilation_check holds. */
std::size_t eigen_multiplicity(const IntMatrix& a, long r);

/* Exact basis of the right kernel, one vector per free column of the reduced
 * echelon form, free columns in ascending order. */
std::vector<RationalVector> kernel_basis(const IntMatrix& a);

/* kernel_basis vectors scaled to coprime integers, first nonzero entry
 * positive. */
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

}  // namespace kred
