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

#include "intmat.hpp"

namespace kred {

/* Matrices of multiplication by sum_i [Lambda^i] on the basis, both modes.
 * mult_M and mult_GL hold columns-as-images in basis order; t is the
 * transpose of mult_M; tau_printed is mult_GL itself, the layout used by the
 * published n <= 6 tables. */
struct TMatrices {
    int n = 0;
    IntMatrix mult_M;       /* 2^n x 2^n */
    IntMatrix mult_GL;      /* 2^(n-1) x 2^(n-1); 1x1 [1] at n = 0 */
    IntMatrix t;            /* transpose(mult_M) */
    IntMatrix tau_printed;  /* = mult_GL */
};

/* n >= 0; n = 0 degenerates to the 1x1 matrix [1] everywhere. */
TMatrices build_t_matrices(int n);

/* Quadrants of t at the split index 2^(n-1). The basis order puts every
 * partition without the part n first, so multiplication leaves the lower
 * left identically zero and the diagonal blocks are t_{n-1} and
 * t_{n-1} + delta. */
struct TBlocks {
    IntMatrix t_prev;      /* upper left */
    IntMatrix delta;       /* upper right */
    IntMatrix lower_left;  /* zero */
    IntMatrix tau_block;   /* lower right; equals transpose(mult_GL) */
};

TBlocks block_decompose(const IntMatrix& t, int n);

}  // namespace kred
