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

#include "young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kred {

namespace {

Perm identity_perm(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/* Every permutation moving each block within itself: the direct product of
 * full symmetric groups on the blocks. */
std::vector<Perm> block_symmetric_group(const std::vector<std::vector<int>>& blocks, int d) {
    std::vector<Perm> acc{identity_perm(d)};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> images = block;
        std::vector<Perm> expanded;
        do {
            for (const Perm& base : acc) {
                Perm p = base;
                for (std::size_t i = 0; i < block.size(); ++i) p[block[i]] = base[images[i]];
                expanded.push_back(std::move(p));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        acc = std::move(expanded);
    }
    return acc;
}

}  // namespace

YoungStabilizers young_stabilizers(const Parts& lambda, int size_cap) {
    if (!is_weakly_decreasing(lambda))
        throw std::invalid_argument("young_stabilizers: parts must be weakly decreasing");
    const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (d > size_cap)
        throw ResourceLimit("young_stabilizers: diagram size exceeds cap");

    /* Row-major filling: cell (i, j) holds entry offset(i) + j. */
    std::vector<int> offset(lambda.size() + 1, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) offset[i + 1] = offset[i] + lambda[i];

    std::vector<std::vector<int>> row_blocks, col_blocks;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        std::vector<int> row(lambda[i]);
        std::iota(row.begin(), row.end(), offset[i]);
        row_blocks.push_back(std::move(row));
    }
    const int width = lambda.empty() ? 0 : lambda[0];
    for (int j = 0; j < width; ++j) {
        std::vector<int> col;
        for (std::size_t i = 0; i < lambda.size() && lambda[i] > j; ++i)
            col.push_back(offset[i] + j);
        col_blocks.push_back(std::move(col));
    }

    YoungStabilizers out;
    out.lambda = lambda;
    out.row_group = block_symmetric_group(row_blocks, d);
    out.column_group = block_symmetric_group(col_blocks, d);
    return out;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::multiplied_by(const F2Matrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("F2Matrix multiply: shape mismatch");
    F2Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t* dst = &out.bits_[r * out.words_];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t chunk = bits_[r * words_ + w];
            while (chunk) {
                const std::size_t k = w * 64 + std::size_t(__builtin_ctzll(chunk));
                chunk &= chunk - 1;
                const std::uint64_t* src = &other.bits_[k * other.words_];
                for (std::size_t j = 0; j < other.words_; ++j) dst[j] ^= src[j];
            }
        }
    }
    return out;
}

std::size_t F2Matrix::rank() const {
    F2Matrix a = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t piv = rank;
        while (piv < rows_ && !a.get(piv, c)) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t w = 0; w < words_; ++w)
                std::swap(a.bits_[piv * words_ + w], a.bits_[rank * words_ + w]);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (!a.get(r, c)) continue;
            for (std::size_t w = 0; w < words_; ++w)
                a.bits_[r * words_ + w] ^= a.bits_[rank * words_ + w];
        }
        ++rank;
    }
    return rank;
}

F2Matrix algebra_action_matrix(const std::vector<Perm>& perms, int m, int d,
                               std::size_t budget) {
    if (m < 1 || d < 0)
        throw std::invalid_argument("algebra_action_matrix: need m >= 1, d >= 0");
    std::size_t dim = 1;
    for (int i = 0; i < d; ++i) {
        if (dim > budget / std::size_t(m))
            throw ResourceLimit("algebra_action_matrix: tensor dimension exceeds budget");
        dim *= std::size_t(m);
    }

    F2Matrix out(dim, dim);
    std::vector<int> digits(d), permuted(d);
    for (const Perm& p : perms) {
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("algebra_action_matrix: permutation degree mismatch");
        for (std::size_t w = 0; w < dim; ++w) {
            std::size_t rem = w;
            for (int i = d; i-- > 0;) {
                digits[i] = static_cast<int>(rem % m);
                rem /= m;
            }
            for (int i = 0; i < d; ++i) permuted[p[i]] = digits[i];
            std::size_t img = 0;
            for (int i = 0; i < d; ++i) img = img * m + permuted[i];
            out.flip(w, img);
        }
    }
    return out;
}

std::size_t jk_image_dim(const Parts& lambda, int m, std::size_t budget) {
    YoungStabilizers st = young_stabilizers(lambda);
    const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
    F2Matrix col = algebra_action_matrix(st.column_group, m, d, budget);
    F2Matrix row = algebra_action_matrix(st.row_group, m, d, budget);
    return col.multiplied_by(row).multiplied_by(col).rank();
}

}  // namespace kred
