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

#include "sym.hpp"

#include <algorithm>
#include <stdexcept>

namespace kred {

namespace {

/* One incremental step: x * [Lambda^i] by appending the part to each term
 * and renormalizing. Deliberately not routed through multiply(), so the
 * residual check below exercises a different path. */
RingElement append_lambda(const RingElement& x, int i) {
    RingElement out(x.mode());
    for (const auto& [mask, c] : x.coeffs()) {
        std::vector<int> exps = Partition::from_mask(mask).parts();
        exps.push_back(i);
        out.add_scaled(normalize(std::move(exps), x.mode()), c);
    }
    return out;
}

}  // namespace

SymTable build_sym_table(int n, int max_k) {
    if (n < 0) throw std::invalid_argument("build_sym_table: n must be nonnegative");
    if (max_k < 0) throw std::invalid_argument("build_sym_table: max_k must be nonnegative");
    const Mode mode{ModeKind::M, n};
    SymTable t;
    t.n = n;
    t.rows.reserve(max_k + 1);
    t.rows.push_back(RingElement::unit(mode));
    for (int k = 1; k <= max_k; ++k) {
        RingElement row(mode);
        for (int i = 1; i <= std::min(k, n); ++i)
            row.add_scaled(append_lambda(t.rows[k - i], i), i % 2 ? 1 : -1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RingElement expand_sym(int n, int k) {
    return build_sym_table(n, k).rows.back();
}

RingElement mod2_reduce(const RingElement& x) {
    RingElement out(x.mode());
    for (const auto& [mask, c] : x.coeffs())
        if (mpz_odd_p(c.get_mpz_t())) out.add_term(mask, 1);
    return out;
}

RingElement koszul_residual(int n, int k) {
    if (k < 1) throw std::invalid_argument("koszul_residual: k must be >= 1");
    SymTable t = build_sym_table(n, k);
    const Mode mode{ModeKind::M, n};
    RingElement acc = RingElement::zero(mode);
    for (int i = 0; i <= std::min(k, n); ++i)
        acc.add_scaled(multiply(t.rows[k - i], lambda_class(i, mode)), i % 2 ? -1 : 1);
    return acc;
}

IntMatrix sym_coordinate_matrix(int n, int max_k) {
    SymTable t = build_sym_table(n, max_k);
    IntMatrix m(max_k + 1, std::size_t(1) << n);
    for (int k = 0; k <= max_k; ++k)
        for (const auto& [mask, c] : t.rows[k].coeffs()) m.at(k, mask) = c;
    return m;
}

std::vector<std::size_t> sym_rank_profile(int n, int max_k) {
    IntMatrix m = sym_coordinate_matrix(n, max_k);
    std::vector<std::size_t> ranks;
    ranks.reserve(max_k + 1);
    for (int k = 0; k <= max_k; ++k) ranks.push_back(m.block(0, 0, k + 1, m.cols()).rank());
    return ranks;
}

std::vector<IntVector> left_null_covectors(int n, int max_k) {
    return integer_kernel_basis(sym_coordinate_matrix(n, max_k).transpose());
}

}  // namespace kred
