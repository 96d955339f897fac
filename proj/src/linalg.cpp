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

#include "linalg.hpp"

#include <stdexcept>

namespace kred {

bool annihilation_check(const IntMatrix& a, const std::vector<long>& roots) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("annihilation_check: matrix not square");
    IntMatrix prod = IntMatrix::identity(a.rows());
    for (long r : roots) {
        IntMatrix factor = a - IntMatrix::identity(a.rows()) * mpz_class(r);
        prod = prod * factor;
        if (prod.is_zero()) return true;
    }
    return prod.is_zero();
}

std::size_t eigen_multiplicity(const IntMatrix& a, long r) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("eigen_multiplicity: matrix not square");
    IntMatrix shifted = a - IntMatrix::identity(a.rows()) * mpz_class(r);
    return a.rows() - shifted.rank();
}

std::vector<RationalVector> kernel_basis(const IntMatrix& in) {
    const std::size_t rows = in.rows(), cols = in.cols();
    std::vector<RationalVector> a(rows, RationalVector(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = in.at(r, c);

    /* Reduced echelon form, first-nonzero pivoting. */
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[pr]);
        mpq_class inv = a[pr][pc];
        for (std::size_t c = pc; c < cols; ++c) a[pr][c] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc] == 0) continue;
            mpq_class f = a[r][pc];
            for (std::size_t c = pc; c < cols; ++c) a[r][c] -= f * a[pr][c];
        }
        pivot_col.push_back(pc);
        ++pr;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, mpq_class(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& in) {
    std::vector<IntVector> out;
    for (const RationalVector& v : kernel_basis(in)) {
        mpz_class scale = 1;
        for (const mpq_class& x : v) scale = lcm(scale, x.get_den());
        IntVector w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpq_class scaled = v[i] * scale;
            w[i] = scaled.get_num();
        }
        mpz_class content = 0;
        for (const mpz_class& x : w) content = gcd(content, x);
        if (content > 1)
            for (mpz_class& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        for (const mpz_class& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (mpz_class& y : w) y = -y;
            break;
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace kred
