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

#include "notation.hpp"

#include <cctype>

namespace kred {

ErrataMap default_errata() {
    return {{"(2,3)", "(3,2)"}};
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }
};

/* "(a,b,c)" with optional internal whitespace -> canonical "(a,b,c)". */
std::string lex_paren_token(Cursor& cur) {
    const std::size_t start = cur.pos;
    if (cur.done() || cur.peek() != '(') throw ParseError("expected '('", start);
    std::string token = "(";
    ++cur.pos;
    for (;;) {
        if (cur.done()) throw ParseError("unterminated parenthesis", start);
        char c = cur.text[cur.pos++];
        if (c == ')') {
            token += ')';
            return token;
        }
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == ',') {
            token += c;
            continue;
        }
        throw ParseError("unexpected character in partition token", cur.pos - 1);
    }
}

Parts parts_from_token(const std::string& token, std::size_t position) {
    /* token is canonical "(digits,digits,...)" */
    if (token == "(0)") return {};
    Parts parts;
    std::size_t i = 1;
    while (i < token.size() && token[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw ParseError("expected digit in partition token", position);
        long v = 0;
        while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
            v = v * 10 + (token[i] - '0');
            if (v > 63) throw ParseError("partition part exceeds supported bound 63", position);
            ++i;
        }
        parts.push_back(static_cast<int>(v));
        if (i < token.size() && token[i] == ',') ++i;
    }
    if (parts.empty()) throw ParseError("empty partition token", position);
    return parts;
}

}  // namespace

ParsedElement parse_paper_notation(const std::string& text, Mode mode,
                                   const ErrataMap& errata) {
    ParsedElement out{RingElement(mode), {}};
    Cursor cur{text};

    if (cur.done()) throw ParseError("empty input", 0);

    /* A lone "0" is the zero element. */
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.done()) return out;
        cur.pos = save;
    }

    bool first = true;
    while (!cur.done()) {
        mpz_class sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1;
            ++cur.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        if (cur.done()) throw ParseError("dangling sign", cur.pos);
        mpz_class coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string digits;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                digits += cur.text[cur.pos++];
            coeff = mpz_class(digits);
        }

        const std::size_t token_pos = cur.pos;
        std::string token = lex_paren_token(cur);
        if (auto it = errata.find(token); it != errata.end()) {
            out.errata.push_back({token, it->second, token_pos});
            token = it->second;
        }
        Parts parts = parts_from_token(token, token_pos);

        if (mode.kind == ModeKind::GL) {
            if (parts.empty() || parts.front() != mode.n)
                throw ParseError("expected leading part " + std::to_string(mode.n), token_pos);
            parts.erase(parts.begin());
        }
        if (!is_strictly_decreasing(parts) && !parts.empty())
            throw ParseError("parts not strictly decreasing", token_pos);
        const int cap = mode.kind == ModeKind::M ? mode.n : mode.n - 1;
        for (int p : parts)
            if (p > cap) throw ParseError("part exceeds basis bound", token_pos);

        out.element.add_term(Partition(parts).mask(), sign * coeff);
    }
    return out;
}

std::string render_paper_notation(const RingElement& x, const RenderStyle& style) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [mask, c] : x.coeffs()) {
        const bool is_unit_term = mask == 0 && x.mode().kind == ModeKind::M;
        std::string mag;
        if (c < 0)
            mag = (-c == 1 ? std::string("1") : mpz_class(-c).get_str());
        else if (c != 1)
            mag = c.get_str();
        else if (is_unit_term && style.explicit_unit_coeff)
            mag = "1";

        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        out += mag;

        Parts label = Partition::from_mask(mask).parts();
        if (x.mode().kind == ModeKind::GL) label.insert(label.begin(), x.mode().n);
        out += parts_str(label);
    }
    return out;
}

Parts parse_partition_token(const std::string& text) {
    std::string canon;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) canon += c;
    if (canon.empty()) throw ParseError("empty partition token", 0);
    if (canon.front() != '(') canon = "(" + canon + ")";
    Cursor cur{canon};
    std::string token = lex_paren_token(cur);
    if (!cur.done()) throw ParseError("trailing characters after partition", cur.pos);
    Parts parts = parts_from_token(token, 0);
    if (!is_strictly_decreasing(parts) && !parts.empty())
        throw ParseError("parts not strictly decreasing", 0);
    return parts;
}

std::vector<Parts> parse_partition_list(const std::string& text) {
    std::vector<Parts> out;
    Cursor cur{text};
    bool first = true;
    while (!cur.done()) {
        if (!first) {
            if (cur.peek() != ',') throw ParseError("expected ',' between partitions", cur.pos);
            ++cur.pos;
        }
        first = false;
        if (cur.done()) throw ParseError("dangling ','", cur.pos);
        const std::size_t pos = cur.pos;
        std::string token = lex_paren_token(cur);
        Parts parts = parts_from_token(token, pos);
        if (!is_strictly_decreasing(parts) && !parts.empty())
            throw ParseError("parts not strictly decreasing", pos);
        out.push_back(std::move(parts));
    }
    return out;
}

}  // namespace kred
