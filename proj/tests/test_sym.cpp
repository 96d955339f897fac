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

#include "notation.hpp"
#include "sym.hpp"

using namespace kred;

namespace {

const Mode kM4{ModeKind::M, 4};

RingElement parse4(const std::string& text) {
    return parse_paper_notation(text, kM4, {}).element;
}

/* C(n, k) as an exact integer. */
mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

TEST_SUITE("sym") {

TEST_CASE("low-degree rows") {
    CHECK(expand_sym(4, 0) == RingElement::unit(kM4));
    CHECK(expand_sym(4, 1) == parse4("(1)"));
    CHECK(expand_sym(4, 2) == parse4("(1)+(2)"));
    CHECK(expand_sym(4, 3) == parse4("(1)+2(2)+(3)"));
    CHECK(expand_sym(4, 4) == parse4("(1)+(2)+(2,1)+(4)"));
    CHECK(expand_sym(4, 5) == parse4("(1)+2(2)+(2,1)+(3,1)"));
}

TEST_CASE("a deeper frozen row") {
    CHECK(expand_sym(4, 10) ==
          parse4("(1)+3(2)+3(2,1)+5(3,1)+4(3,2)-2(4)-1(4,1)+3(4,2)+(4,3)"));
}

TEST_CASE("table rows are incremental prefixes") {
    SymTable table = build_sym_table(3, 12);
    REQUIRE(table.rows.size() == 13);
    for (int k = 0; k <= 12; ++k) CHECK(table.rows[k] == expand_sym(3, k));
}

TEST_CASE("mod-2 reduction keeps exactly the odd coefficients") {
    RingElement x = parse4("(1)+2(2)-3(3)+(4,1)");
    RingElement r = mod2_reduce(x);
    CHECK(r == parse4("(1)+(3)+(4,1)"));
    CHECK(render_paper_notation(mod2_reduce(expand_sym(4, 7))) == "(1)+(3,2)");
    CHECK(render_paper_notation(mod2_reduce(expand_sym(4, 9))) == "(1)+(3)+(3,1)+(4,1)");
}

TEST_CASE("alternating residual vanishes on a small grid") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 15; ++k) CHECK(koszul_residual(n, k).is_zero());
}

TEST_CASE("residual requires a positive degree") {
    CHECK_THROWS_AS(koszul_residual(3, 0), std::invalid_argument);
}

TEST_CASE("coefficients against the total dimension") {
    /* The classes evaluate to binomial dimensions; each row must account
     * for the full symmetric-power dimension. */
    for (int n = 1; n <= 5; ++n) {
        SymTable table = build_sym_table(n, 30);
        for (int k = 0; k <= 30; ++k) {
            mpz_class total = 0;
            for (const auto& [mask, coeff] : table.rows[k].coeffs()) {
                mpz_class dim = 1;
                const Partition p = Partition::from_mask(mask);
                for (int part : p.parts())
                    dim *= binom(static_cast<unsigned long>(n), static_cast<unsigned long>(part));
                total += coeff * dim;
            }
            CHECK(total == binom(static_cast<unsigned long>(n + k - 1),
                                 static_cast<unsigned long>(k)));
        }
    }
}

TEST_CASE("rows are stable in the rank once it exceeds the degree") {
    for (int k = 0; k <= 8; ++k) {
        const RingElement base = expand_sym(8, k);
        for (int n = k; n <= 8; ++n) {
            if (n < 1) continue;
            CHECK(expand_sym(n, k).coeffs() == base.coeffs());
        }
    }
}

TEST_CASE("coordinate matrix lays out rows in basis order") {
    IntMatrix m = sym_coordinate_matrix(2, 4);
    REQUIRE(m.rows() == 5);
    REQUIRE(m.cols() == 4);
    for (int k = 0; k <= 4; ++k) {
        RingElement row = expand_sym(2, k);
        for (std::uint64_t mask = 0; mask < 4; ++mask)
            CHECK(m.at(k, mask) == row.coeff(mask));
    }
}

TEST_CASE("rank profile anchor") {
    CHECK(sym_rank_profile(2, 4) == std::vector<std::size_t>{1, 2, 3, 3, 4});
}

TEST_CASE("rank profile is monotone and capped by the basis size") {
    auto profile = sym_rank_profile(3, 20);
    for (std::size_t k = 1; k < profile.size(); ++k) {
        CHECK(profile[k] >= profile[k - 1]);
        CHECK(profile[k] <= profile[k - 1] + 1);
    }
    CHECK(profile.back() <= 8);
}

TEST_CASE("left null covectors annihilate the coordinate matrix") {
    auto covs = left_null_covectors(2, 4);
    REQUIRE(covs.size() == 1);
    IntMatrix m = sym_coordinate_matrix(2, 4);
    for (const auto& v : covs) {
        REQUIRE(v.size() == m.rows());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_class acc = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) acc += v[r] * m.at(r, c);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("full-rank coordinate matrix has no covectors") {
    CHECK(left_null_covectors(2, 2).empty());
}

}  // TEST_SUITE
