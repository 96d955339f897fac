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

#include <algorithm>

#include "partition.hpp"
#include "test_util.hpp"

using namespace kred;
using kred::testutil::partitions_of;

TEST_SUITE_BEGIN("partition");

TEST_CASE("construction and bitmask") {
    CHECK(Partition().empty());
    CHECK(Partition().mask() == 0);
    CHECK(Partition().str() == "(0)");
    CHECK(Partition(Parts{3, 1}).mask() == 5);
    CHECK(Partition(Parts{3, 1}).str() == "(3,1)");
    CHECK(Partition(Parts{3, 1}).weight() == 4);
    CHECK(Partition(Parts{3, 1}).length() == 2);

    CHECK_THROWS_AS(Partition(Parts{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(Parts{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(Parts{0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(Parts{-1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(Parts{64}), std::invalid_argument);
}

TEST_CASE("mask round trip is a bijection") {
    for (std::uint64_t m = 0; m < 1024; ++m) {
        Partition p = Partition::from_mask(m);
        CHECK(p.mask() == m);
        CHECK(is_strictly_decreasing(p.parts()));
        CHECK(Partition(p.parts()).mask() == m);
    }
}

TEST_CASE("basis enumeration sizes and order") {
    for (int n = 0; n <= 12; ++n) {
        BasisOrder b = enumerate_basis(n, ModeKind::M);
        CHECK(b.table.size() == (std::size_t(1) << n));
        for (std::size_t i = 0; i < b.table.size(); ++i) CHECK(b.table[i].mask() == i);
    }
    for (int n = 1; n <= 12; ++n) {
        BasisOrder b = enumerate_basis(n, ModeKind::GL);
        CHECK(b.table.size() == (std::size_t(1) << (n - 1)));
        for (std::size_t i = 0; i < b.table.size(); ++i) CHECK(b.table[i].mask() == i);
    }
    CHECK_THROWS_AS(enumerate_basis(0, ModeKind::GL), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis(-1, ModeKind::M), std::invalid_argument);
}

TEST_CASE("basis order for n=4 matches the published listing") {
    const std::vector<Parts> expect = {
        {}, {1}, {2}, {2, 1}, {3}, {3, 1}, {3, 2}, {3, 2, 1},
        {4}, {4, 1}, {4, 2}, {4, 2, 1}, {4, 3}, {4, 3, 1}, {4, 3, 2}, {4, 3, 2, 1}};
    BasisOrder b = enumerate_basis(4, ModeKind::M);
    REQUIRE(b.table.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(b.table[i].parts() == expect[i]);

    CHECK(enumerate_basis(0, ModeKind::M).table == std::vector<Partition>{Partition()});
}

TEST_CASE("GL labels carry the leading part") {
    BasisOrder b = enumerate_basis(5, ModeKind::GL);
    CHECK(b.label(0) == "(5)");
    CHECK(b.label(1) == "(5,1)");
    CHECK(b.label(2) == "(5,2)");
    CHECK(b.label(15) == "(5,4,3,2,1)");
    CHECK(b.label_parts(3) == Parts{5, 2, 1});

    BasisOrder m = enumerate_basis(3, ModeKind::M);
    CHECK(m.label(0) == "(0)");
    CHECK(m.label(5) == "(3,1)");
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Parts{3, 1}) == Parts{2, 1, 1});
    CHECK(conjugate(Parts{}) == Parts{});
    CHECK(conjugate(Parts{3, 3}) == Parts{2, 2, 2});
    for (int n = 1; n <= 8; ++n) {
        Parts staircase;
        for (int p = n; p >= 1; --p) staircase.push_back(p);
        CHECK(conjugate(staircase) == staircase);
    }
    CHECK_THROWS_AS(conjugate(Parts{1, 2}), std::invalid_argument);
}

TEST_CASE("conjugate is an involution up to size 30") {
    for (int m = 0; m <= 30; ++m)
        for (const auto& p : partitions_of(m)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("difference index") {
    CHECK(harris_shank_index(Parts{1}) == std::vector<int>{1});
    for (int n = 2; n <= 8; ++n) {
        Parts staircase, single{n};
        for (int p = n; p >= 1; --p) staircase.push_back(p);
        CHECK(harris_shank_index(staircase) == std::vector<int>(n, 1));
        std::vector<int> expect(n, 0);
        expect.back() = 1;
        CHECK(harris_shank_index(single) == expect);
    }
    CHECK(harris_shank_index(Parts{}) == std::vector<int>{});
    CHECK(harris_shank_index(Parts{3, 1}) == std::vector<int>{1, 0, 1});
}

TEST_CASE("difference index entries are 0/1 exactly for strict partitions") {
    for (int m = 1; m <= 12; ++m) {
        for (const auto& p : partitions_of(m)) {
            auto idx = harris_shank_index(p);
            bool all01 = std::all_of(idx.begin(), idx.end(),
                                     [](int v) { return v == 0 || v == 1; });
            CHECK(all01 == is_strictly_decreasing(p));
        }
    }
}

TEST_CASE("dominance examples") {
    CHECK(dominance_compare(Parts{4}, Parts{3, 1}) == DomRel::lower);
    CHECK(dominance_compare(Parts{3, 1}, Parts{3, 1}) == DomRel::equal);
    CHECK(dominance_compare(Parts{4, 1, 1}, Parts{3, 3}) == DomRel::incomparable);
    CHECK(dominance_compare(Parts{3, 3}, Parts{4, 1, 1}) == DomRel::incomparable);
    CHECK(dominance_compare(Parts{2}, Parts{3}) == DomRel::lower);
    CHECK(dominance_compare(Parts{3}, Parts{2}) == DomRel::greater);
}

TEST_CASE("the one-row partition is minimal in each grade") {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& mu : partitions_of(n)) {
            DomRel r = dominance_compare(Parts{n}, mu);
            CHECK((r == DomRel::lower || r == DomRel::equal));
        }
    }
}

TEST_CASE("dominance is antisymmetric") {
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                DomRel ab = dominance_compare(a, b);
                DomRel ba = dominance_compare(b, a);
                if (ab == DomRel::lower) CHECK(ba == DomRel::greater);
                if (ab == DomRel::equal) CHECK(ba == DomRel::equal);
                if (ab == DomRel::incomparable) CHECK(ba == DomRel::incomparable);
            }
        }
    }
}

TEST_SUITE_END();
