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

#include "intmat.hpp"

#include <stdexcept>

namespace kred {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

void IntMatrix::place(std::size_t r0, std::size_t c0, const IntMatrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
        throw std::invalid_argument("place: block does not fit");
    for (std::size_t r = 0; r < src.rows_; ++r)
        for (std::size_t c = 0; c < src.cols_; ++c) at(r0 + r, c0 + c) = src.at(r, c);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0,
                           std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_)
        throw std::invalid_argument("block: range out of bounds");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + other.data_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix subtract: shape mismatch");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - other.data_[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix multiply: shape mismatch");
    IntMatrix m(rows_, other.cols_);
    mpz_class acc;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < other.cols_; ++c) {
            acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc += at(r, k) * other.at(k, c);
            m.at(r, c) = acc;
        }
    }
    return m;
}

IntMatrix IntMatrix::operator*(const mpz_class& c) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

mpz_class IntMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    mpz_class t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::size_t IntMatrix::rank() const {
    IntMatrix a = *this;
    mpz_class prev = 1;
    std::size_t rank = 0;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
        std::size_t piv = pr;
        while (piv < rows_ && a.at(piv, pc) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != pr)
            for (std::size_t c = pc; c < cols_; ++c) std::swap(a.at(piv, c), a.at(pr, c));
        for (std::size_t r = pr + 1; r < rows_; ++r) {
            for (std::size_t c = pc + 1; c < cols_; ++c) {
                mpz_class num = a.at(pr, pc) * a.at(r, c) - a.at(r, pc) * a.at(pr, c);
                mpz_divexact(a.at(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(r, pc) = 0;
        }
        prev = a.at(pr, pc);
        ++rank;
        ++pr;
    }
    return rank;
}

}  // namespace kred
