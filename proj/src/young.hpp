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

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace kred {

/* Permutation of {0,...,d-1}: p[i] is the image of i. */
using Perm = std::vector<int>;

/* Row and column stabilizers of the row-major canonical filling of the
 * Young diagram, as explicit permutation lists. */
struct YoungStabilizers {
    Parts lambda;
    std::vector<Perm> row_group;
    std::vector<Perm> column_group;
};

/* lambda weakly decreasing; |lambda| beyond size_cap raises ResourceLimit
 * (the groups are materialized in full). */
YoungStabilizers young_stabilizers(const Parts& lambda, int size_cap = 8);

/* Dense matrix over F2, rows bit-packed into 64-bit words. */
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0), words_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_) {}

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return bits_[r * words_ + c / 64] >> (c % 64) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = bits_[r * words_ + c / 64];
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    void flip(std::size_t r, std::size_t c) {
        bits_[r * words_ + c / 64] ^= std::uint64_t(1) << (c % 64);
    }

    F2Matrix multiplied_by(const F2Matrix& other) const;
    std::size_t rank() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

inline constexpr std::size_t kTensorBudget = std::size_t(1) << 15;

/* Matrix over F2 of the group-algebra sum of the permutations acting by
 * place permutation on the d-fold tensor power of an m-dimensional space,
 * row-vector convention in the lexicographic tensor basis. */
F2Matrix algebra_action_matrix(const std::vector<Perm>& perms, int m, int d,
                               std::size_t budget = kTensorBudget);

/* Dimension over F2 of the image of (column sum)(row sum)(column sum)
 * acting on tensors, for the canonical filling of lambda with |lambda|
 * tensor factors of dimension m. */
std::size_t jk_image_dim(const Parts& lambda, int m, std::size_t budget = kTensorBudget);

}  // namespace kred
