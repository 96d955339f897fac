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

using namespace kred;

namespace {

const Mode kM4{ModeKind::M, 4};
const Mode kGL3{ModeKind::GL, 3};

std::string round_trip(const std::string& text, Mode mode = kM4) {
    return render_paper_notation(parse_paper_notation(text, mode, {}).element);
}

}  // namespace

TEST_SUITE("notation") {

TEST_CASE("canonical round trips") {
    CHECK(round_trip("(1)+(2)+(2,1)+(4)") == "(1)+(2)+(2,1)+(4)");
    CHECK(round_trip("1(0)") == "1(0)");
    CHECK(round_trip("0") == "0");
    CHECK(round_trip("(1)+2(2)-1(4,1)") == "(1)+2(2)-1(4,1)");
}

TEST_CASE("normalizations applied while parsing") {
    CHECK(round_trip("(4)+(1)") == "(1)+(4)");          /* term order */
    CHECK(round_trip("-(4,1)") == "-1(4,1)");           /* bare minus */
    CHECK(round_trip("(2)+(2)") == "2(2)");             /* merged terms */
    CHECK(round_trip("(2)-(2)") == "0");                /* cancellation */
    CHECK(round_trip(" ( 1 ) + 2 ( 2 ) ") == "(1)+2(2)");
    CHECK(round_trip("3(0)") == "3(0)");
    CHECK(round_trip("(0)") == "1(0)");
}

TEST_CASE("quotient-ring labels carry the leading part") {
    CHECK(round_trip("(3,2)", kGL3) == "(3,2)");
    CHECK(round_trip("(3)", kGL3) == "(3)");
    CHECK(round_trip("(3,2,1)+(3)", kGL3) == "(3)+(3,2,1)");
    CHECK_THROWS_AS(parse_paper_notation("(2,1)", kGL3, {}), ParseError);
}

TEST_CASE("mode bounds are enforced") {
    CHECK_THROWS_AS(parse_paper_notation("(5)", kM4, {}), ParseError);
    CHECK_NOTHROW(parse_paper_notation("(4)", kM4, {}));
}

TEST_CASE("errata substitution is recorded with its position") {
    ParsedElement p = parse_paper_notation("(1)+(2,3)", kM4, default_errata());
    REQUIRE(p.errata.size() == 1);
    CHECK(p.errata[0].from == "(2,3)");
    CHECK(p.errata[0].to == "(3,2)");
    CHECK(p.errata[0].position == 4);
    CHECK(render_paper_notation(p.element) == "(1)+(3,2)");

    /* without the catalogue the raw token is rejected */
    CHECK_THROWS_AS(parse_paper_notation("(1)+(2,3)", kM4, {}), ParseError);
}

TEST_CASE("parse errors carry offsets") {
    try {
        parse_paper_notation("(1)+(1,1)", kM4, {});
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_paper_notation("", kM4, {}), ParseError);
    CHECK_THROWS_AS(parse_paper_notation("(1)+", kM4, {}), ParseError);
    CHECK_THROWS_AS(parse_paper_notation("(1)(2)", kM4, {}), ParseError);
    CHECK_THROWS_AS(parse_paper_notation("x(1)", kM4, {}), ParseError);
    CHECK_THROWS_AS(parse_paper_notation("(1", kM4, {}), ParseError);
}

TEST_CASE("render styles") {
    RingElement unit = RingElement::unit(kM4);
    CHECK(render_paper_notation(unit) == "1(0)");
    RenderStyle bare;
    bare.explicit_unit_coeff = false;
    CHECK(render_paper_notation(unit, bare) == "(0)");
    CHECK(render_paper_notation(unit * mpz_class(-1)) == "-1(0)");
}

TEST_CASE("partition tokens") {
    CHECK(parse_partition_token("(3,1)") == Parts{3, 1});
    CHECK(parse_partition_token("3,1") == Parts{3, 1});
    CHECK(parse_partition_token("(0)") == Parts{});
    CHECK(parse_partition_token(" ( 5 , 2 , 1 ) ") == Parts{5, 2, 1});
    CHECK_THROWS_AS(parse_partition_token("(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_partition_token("(2,2)"), ParseError);
    CHECK_THROWS_AS(parse_partition_token(""), ParseError);
    CHECK_THROWS_AS(parse_partition_token("(2,3)"), ParseError);
}

TEST_CASE("partition lists") {
    auto list = parse_partition_list("(5), (5,1), (0)");
    REQUIRE(list.size() == 3);
    CHECK(list[0] == Parts{5});
    CHECK(list[1] == Parts{5, 1});
    CHECK(list[2] == Parts{});
    CHECK_THROWS_AS(parse_partition_list("(5),"), ParseError);
    CHECK_THROWS_AS(parse_partition_list("(5) (3)"), ParseError);
}

}  // TEST_SUITE
