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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace kred {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/* Catalogued table corrections: literal partition token -> replacement. */
using ErrataMap = std::map<std::string, std::string>;

ErrataMap default_errata();

struct ErratumApplication {
    std::string from;
    std::string to;
    std::size_t position = 0;
};

struct ParsedElement {
    RingElement element;
    std::vector<ErratumApplication> errata;
};

/* Additive coefficient(partition) syntax: "(1)+2(2)-1(4,1)", "1(0)", "0".
 * Coefficients default to 1; whitespace is ignored. GL-mode tokens must
 * carry the leading part n, which is stripped to the stored tail. Tokens
 * matching an erratum key are replaced and the application recorded. */
ParsedElement parse_paper_notation(const std::string& text, Mode mode,
                                   const ErrataMap& errata = {});

struct RenderStyle {
    bool explicit_unit_coeff = true;  /* print the unit as "1(0)", not "(0)" */
};

/* Terms in basis order; coefficient 1 omitted except on the unit;
 * -1 printed as an explicit "-1"; the zero element is "0". */
std::string render_paper_notation(const RingElement& x, const RenderStyle& style = {});

/* One partition token: "(3,1)", "3,1", or "(0)". */
Parts parse_partition_token(const std::string& text);

/* Comma-separated partition tokens, each parenthesized: "(5), (5,1), (0)". */
std::vector<Parts> parse_partition_list(const std::string& text);

}  // namespace kred
