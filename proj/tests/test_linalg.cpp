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

#include <doctest.h>

#include <random>

#include "linalg.hpp"
#include "toperator.hpp"

using namespace kred;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

bool is_zero_product(const IntMatrix& a, const RationalVector& v) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpq_class acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += mpq_class(a.at(r, c)) * v[c];
        if (acc != 0) return false;
    }
    return true;
}

bool is_zero_product(const IntMatrix& a, const IntVector& v) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpz_class acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += a.at(r, c) * v[c];
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("annihilation of a diagonal matrix") {
    IntMatrix d = from_rows({{1, 0}, {0, 2}});
    CHECK(annihilation_check(d, {1, 2}));
    CHECK(annihilation_check(d, {1, 2, 5}));
    CHECK_FALSE(annihilation_check(d, {1}));
    CHECK_FALSE(annihilation_check(d, {3, 4}));
}

TEST_CASE("annihilation rejects non-square input") {
    IntMatrix bad(2, 3);
    CHECK_THROWS_AS(annihilation_check(bad, {1}), std::invalid_argument);
    CHECK_THROWS_AS(eigen_multiplicity(bad, 1), std::invalid_argument);
}

TEST_CASE("eigen multiplicity counts diagonal entries") {
    IntMatrix d = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    CHECK(eigen_multiplicity(d, 1) == 2);
    CHECK(eigen_multiplicity(d, 2) == 1);
    CHECK(eigen_multiplicity(d, 3) == 0);
}

TEST_CASE("eigen multiplicity on a non-diagonal matrix") {
    /* [[2,1],[0,2]] is a Jordan block: geometric multiplicity 1. */
    IntMatrix j = from_rows({{2, 1}, {0, 2}});
    CHECK(eigen_multiplicity(j, 2) == 1);
    CHECK_FALSE(annihilation_check(j, {2}));
    CHECK(annihilation_check(j * j - j * mpz_class(4) + IntMatrix::identity(2) * mpz_class(4),
                             {0}));
}

TEST_CASE("kernel of a rank-one matrix") {
    IntMatrix a = from_rows({{1, 2}, {2, 4}});
    auto basis = kernel_basis(a);
    REQUIRE(basis.size() == 1);
    CHECK(is_zero_product(a, basis[0]));
    CHECK(basis[0][1] != 0);
}

TEST_CASE("kernel basis spans: rank plus nullity equals columns") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix a(5, 7);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 7; ++c) a.at(r, c) = entry(rng);
        auto basis = kernel_basis(a);
        CHECK(a.rank() + basis.size() == 7);
        for (const auto& v : basis) CHECK(is_zero_product(a, v));
    }
}

TEST_CASE("integer kernel vectors are primitive") {
    IntMatrix a = from_rows({{2, 4, 6}, {1, 2, 3}});
    auto basis = integer_kernel_basis(a);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(is_zero_product(a, v));
        mpz_class g = 0;
        for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        CHECK(g == 1);
        /* first nonzero entry normalized positive */
        for (const auto& x : v) {
            if (x == 0) continue;
            CHECK(x > 0);
            break;
        }
    }
}

TEST_CASE("integer kernel matches rational kernel dimension") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(4, 6);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 6; ++c) a.at(r, c) = entry(rng);
        CHECK(integer_kernel_basis(a).size() == kernel_basis(a).size());
    }
}

TEST_CASE("fixed-point space of the duplication operator") {
    for (int n = 1; n <= 5; ++n) {
        IntMatrix t = build_t_matrices(n).t;
        auto fixed = integer_kernel_basis(t - IntMatrix::identity(t.rows()));
        CHECK(fixed.size() == std::size_t(1) << (n - 1));
        for (const auto& v : fixed)
            CHECK(is_zero_product(t - IntMatrix::identity(t.rows()), v));
    }
}

}  // TEST_SUITE
