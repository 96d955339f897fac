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

#include "toperator.hpp"

#include <stdexcept>

#include "ring.hpp"

namespace kred {

namespace {

/* Columns-as-images matrix of x -> x * sum_i [Lambda^i] on the given basis. */
IntMatrix operator_matrix(Mode mode) {
    const std::size_t dim =
        std::size_t(1) << (mode.kind == ModeKind::M ? mode.n : mode.n - 1);
    IntMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        RingElement image =
            mult_by_sum_lambda(RingElement::basis_class(mode, Partition::from_mask(col)));
        for (const auto& [mask, c] : image.coeffs()) m.at(mask, col) = c;
    }
    return m;
}

}  // namespace

TMatrices build_t_matrices(int n) {
    if (n < 0) throw std::invalid_argument("build_t_matrices: n must be nonnegative");
    TMatrices out;
    out.n = n;
    if (n == 0) {
        /* One basis class, sent to itself: every matrix degenerates to [1]. */
        IntMatrix one(1, 1);
        one.at(0, 0) = 1;
        out.mult_M = one;
        out.mult_GL = one;
        out.t = one;
        out.tau_printed = one;
        return out;
    }
    out.mult_M = operator_matrix(Mode{ModeKind::M, n});
    out.mult_GL = operator_matrix(Mode{ModeKind::GL, n});
    out.t = out.mult_M.transpose();
    out.tau_printed = out.mult_GL;
    return out;
}

TBlocks block_decompose(const IntMatrix& t, int n) {
    if (n < 1) throw std::invalid_argument("block_decompose: n must be >= 1");
    const std::size_t dim = std::size_t(1) << n, half = dim >> 1;
    if (t.rows() != dim || t.cols() != dim)
        throw std::invalid_argument("block_decompose: matrix is not 2^n x 2^n");
    TBlocks b;
    b.t_prev = t.block(0, 0, half, half);
    b.delta = t.block(0, half, half, half);
    b.lower_left = t.block(half, 0, half, half);
    b.tau_block = t.block(half, half, half, half);
    return b;
}

}  // namespace kred
