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

#include "intmat.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace kred {

/* Symmetric powers in the exterior-power basis, M-mode: rows[k] = [S^k],
 * built by the alternating recursion
 *   [S^k] = sum_{1 <= i <= min(k,n)} (-1)^(i+1) [S^(k-i)] [Lambda^i]. */
struct SymTable {
    int n = 0;
    std::vector<RingElement> rows;
};

SymTable build_sym_table(int n, int max_k);

RingElement expand_sym(int n, int k);

/* Coefficients reduced mod 2 into {0,1}; zero terms dropped. */
RingElement mod2_reduce(const RingElement& x);

/* sum_{0 <= i <= min(k,n)} (-1)^i [S^(k-i)] [Lambda^i], recomputed through
 * general ring multiplication. Zero exactly when the row construction is
 * consistent; kept as an independently routed check. */
RingElement koszul_residual(int n, int k);

/* (K+1) x 2^n integer matrix whose row k holds the coordinates of [S^k]
 * in basis order. */
IntMatrix sym_coordinate_matrix(int n, int max_k);

/* ranks[k] = rank of the span of rows 0..k; nondecreasing, bounded by 2^n. */
std::vector<std::size_t> sym_rank_profile(int n, int max_k);

/* Integer basis of the left kernel of the coordinate matrix: covectors c
 * with sum_k c_k [S^k] = 0 across k <= max_k. Empty iff the profile reaches
 * the full 2^n. */
std::vector<IntVector> left_null_covectors(int n, int max_k);

}  // namespace kred
