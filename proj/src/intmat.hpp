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

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace kred {

/* Dense arbitrary-precision integer matrix, row major. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;

    /* Copies src into this matrix with its top-left corner at (r0, c0). */
    void place(std::size_t r0, std::size_t c0, const IntMatrix& src);
    /* Extracts the rows x cols submatrix with top-left corner at (r0, c0). */
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator*(const mpz_class& c) const;

    bool is_zero() const;
    mpz_class trace() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /* Rank over the rationals, by fraction-free one-step elimination
     * (exact divisions only; deterministic first-nonzero pivot choice). */
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> data_;
};

}  // namespace kred
