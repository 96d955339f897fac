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

#include "kred/kred.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "format.hpp"
#include "linalg.hpp"
#include "notation.hpp"
#include "ring.hpp"
#include "series.hpp"
#include "spectrum.hpp"
#include "sym.hpp"
#include "tables.hpp"
#include "toperator.hpp"
#include "young.hpp"

struct kred_elem {
    kred::RingElement v;
};

struct kred_mat {
    kred::IntMatrix v;
};

namespace {

thread_local std::string g_error;

char* dup_cstr(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <typename Fn>
kred_status guarded(Fn&& fn) {
    g_error.clear();
    try {
        fn();
        return KRED_OK;
    } catch (const kred::ParseError& e) {
        g_error = e.what();
        return KRED_ERR_PARSE;
    } catch (const kred::ResourceLimit& e) {
        g_error = e.what();
        return KRED_ERR_LIMIT;
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return KRED_ERR_NOMEM;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return KRED_ERR_INVALID;
    } catch (const std::out_of_range& e) {
        g_error = e.what();
        return KRED_ERR_INVALID;
    } catch (const std::domain_error& e) {
        g_error = e.what();
        return KRED_ERR_INVALID;
    } catch (const std::exception& e) {
        g_error = e.what();
        return KRED_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown failure";
        return KRED_ERR_INTERNAL;
    }
}

kred_status require(bool ok, const char* msg) {
    if (ok) return KRED_OK;
    g_error = msg;
    return KRED_ERR_INVALID;
}

kred::Mode to_mode(kred_mode mode, int n) {
    if (mode != KRED_MODE_M && mode != KRED_MODE_GL)
        throw std::invalid_argument("unknown mode");
    return kred::Mode{mode == KRED_MODE_M ? kred::ModeKind::M : kred::ModeKind::GL, n};
}

kred::OutFormat to_format(kred_format fmt) {
    switch (fmt) {
        case KRED_FORMAT_PAPER: return kred::OutFormat::Paper;
        case KRED_FORMAT_JSON: return kred::OutFormat::Json;
        case KRED_FORMAT_CSV: return kred::OutFormat::Csv;
    }
    throw std::invalid_argument("unknown format");
}

/* "c0,c1,..." with optional spaces; empty input means the empty list. */
std::vector<mpz_class> parse_int_list(const char* text) {
    std::vector<mpz_class> out;
    if (!text) throw std::invalid_argument("null list");
    std::string s(text);
    std::size_t pos = 0;
    if (s.find_first_not_of(" \t") == std::string::npos) return out;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw kred::ParseError("empty number in list", pos);
        tok = tok.substr(a, b - a + 1);
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw kred::ParseError("invalid integer: " + tok, pos);
        out.push_back(std::move(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_exponent_list(const char* text) {
    std::vector<int> out;
    for (const mpz_class& v : parse_int_list(text)) {
        if (v <= 0 || !v.fits_sint_p())
            throw std::invalid_argument("denominator exponents must be small positive integers");
        out.push_back(static_cast<int>(v.get_si()));
    }
    return out;
}

/* Weakly decreasing positive parts, "3,1,1" or "(3,1,1)". */
kred::Parts parse_weak_partition(const char* text) {
    if (!text) throw std::invalid_argument("null partition");
    std::string s(text);
    std::string cleaned;
    for (char c : s)
        if (c != ' ' && c != '\t') cleaned += c;
    if (cleaned.size() >= 2 && cleaned.front() == '(' && cleaned.back() == ')')
        cleaned = cleaned.substr(1, cleaned.size() - 2);
    kred::Parts parts;
    if (cleaned == "0" || cleaned.empty()) return parts;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        std::string tok =
            cleaned.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw kred::ParseError("invalid partition part: " + tok, pos);
        long v = std::strtol(tok.c_str(), nullptr, 10);
        if (v <= 0) throw kred::ParseError("partition parts must be positive", pos);
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!kred::is_weakly_decreasing(parts))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    return parts;
}

kred::RationalForm parse_form(const char* numerator, const char* denominator) {
    kred::RationalForm f;
    f.numerator = kred::poly_trim(parse_int_list(numerator));
    f.denominator_exponents = parse_exponent_list(denominator);
    return f;
}

}  // namespace

extern "C" {

const char* kred_version(void) { return "1.0.0"; }

const char* kred_last_error(void) { return g_error.c_str(); }

void kred_string_free(char* s) { std::free(s); }

void kred_elem_free(kred_elem* e) { delete e; }

void kred_mat_free(kred_mat* m) { delete m; }

kred_status kred_elem_parse(kred_mode mode, int n, const char* text, kred_elem** out) {
    if (kred_status st = require(text && out, "null argument")) return st;
    return guarded([&] {
        kred::ParsedElement p =
            kred::parse_paper_notation(text, to_mode(mode, n), kred::default_errata());
        *out = new kred_elem{std::move(p.element)};
    });
}

kred_status kred_elem_render(const kred_elem* e, char** out) {
    if (kred_status st = require(e && out, "null argument")) return st;
    return guarded([&] { *out = dup_cstr(kred::render_paper_notation(e->v)); });
}

kred_status kred_elem_mul(const kred_elem* a, const kred_elem* b, kred_elem** out) {
    if (kred_status st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new kred_elem{kred::multiply(a->v, b->v)}; });
}

kred_status kred_elem_add(const kred_elem* a, const kred_elem* b, kred_elem** out) {
    if (kred_status st = require(a && b && out, "null argument")) return st;
    return guarded([&] {
        kred::RingElement sum = a->v;
        sum += b->v;
        *out = new kred_elem{std::move(sum)};
    });
}

kred_status kred_elem_mod2(const kred_elem* e, kred_elem** out) {
    if (kred_status st = require(e && out, "null argument")) return st;
    return guarded([&] { *out = new kred_elem{kred::mod2_reduce(e->v)}; });
}

kred_status kred_elem_equal(const kred_elem* a, const kred_elem* b, int* out) {
    if (kred_status st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = a->v == b->v ? 1 : 0; });
}

kred_status kred_elem_is_zero(const kred_elem* e, int* out) {
    if (kred_status st = require(e && out, "null argument")) return st;
    return guarded([&] { *out = e->v.is_zero() ? 1 : 0; });
}

kred_status kred_sym_row(int n, int k, kred_elem** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new kred_elem{kred::expand_sym(n, k)}; });
}

kred_status kred_koszul_residual(int n, int k, kred_elem** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new kred_elem{kred::koszul_residual(n, k)}; });
}

kred_status kred_mult_by_sum_lambda(const kred_elem* e, kred_elem** out) {
    if (kred_status st = require(e && out, "null argument")) return st;
    return guarded([&] { *out = new kred_elem{kred::mult_by_sum_lambda(e->v)}; });
}

kred_status kred_straighten_pair(kred_mode mode, int n, int k, kred_elem** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new kred_elem{kred::straighten_pair(k, to_mode(mode, n))}; });
}

kred_status kred_t_matrix(int n, kred_mat** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new kred_mat{kred::build_t_matrices(n).t}; });
}

kred_status kred_tau_matrix(int n, kred_mat** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new kred_mat{kred::build_t_matrices(n).tau_printed}; });
}

kred_status kred_mat_rows(const kred_mat* m, size_t* out) {
    if (kred_status st = require(m && out, "null argument")) return st;
    *out = m->v.rows();
    return KRED_OK;
}

kred_status kred_mat_cols(const kred_mat* m, size_t* out) {
    if (kred_status st = require(m && out, "null argument")) return st;
    *out = m->v.cols();
    return KRED_OK;
}

kred_status kred_mat_entry(const kred_mat* m, size_t row, size_t col, char** out) {
    if (kred_status st = require(m && out, "null argument")) return st;
    if (kred_status st = require(row < m->v.rows() && col < m->v.cols(), "index out of range"))
        return st;
    return guarded([&] { *out = dup_cstr(m->v.at(row, col).get_str()); });
}

kred_status kred_mat_rank(const kred_mat* m, size_t* out) {
    if (kred_status st = require(m && out, "null argument")) return st;
    return guarded([&] { *out = m->v.rank(); });
}

kred_status kred_eigen_multiplicity(int n, long eigenvalue, size_t* out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        kred::IntMatrix t = kred::build_t_matrices(n).t;
        *out = kred::eigen_multiplicity(t, eigenvalue);
    });
}

kred_status kred_annihilates(int n, int* out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        kred::IntMatrix t = kred::build_t_matrices(n).t;
        std::vector<long> roots;
        for (int i = 0; i <= n; ++i) roots.push_back(1L << i);
        *out = kred::annihilation_check(t, roots) ? 1 : 0;
    });
}

kred_status kred_sym_rows_render(int n, int max_k, int mod2, kred_format fmt, char** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out = dup_cstr(kred::render_sym_rows(n, max_k, mod2 != 0, to_format(fmt))); });
}

kred_status kred_tau_render(int n, kred_format fmt, char** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_cstr(kred::render_tau(n, to_format(fmt))); });
}

kred_status kred_t_render(int n, int with_blocks, kred_format fmt, char** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out = dup_cstr(kred::render_tmat(n, with_blocks != 0, to_format(fmt))); });
}

kred_status kred_eigen_report(int n, int with_kernel, int with_timings, kred_format fmt,
                              char** out, int* pass) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        bool ok = false;
        std::string text = kred::render_eigen_report(n, with_kernel != 0, with_timings != 0,
                                                     to_format(fmt), &ok);
        *out = dup_cstr(text);
        if (pass) *pass = ok ? 1 : 0;
    });
}

kred_status kred_rank_profile_render(int n, int max_k, int with_covectors, kred_format fmt,
                                     char** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        *out = dup_cstr(kred::render_rank_profile(n, max_k, with_covectors != 0, to_format(fmt)));
    });
}

kred_status kred_series_steinberg_render(int n, int order, kred_format fmt, char** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out = dup_cstr(kred::render_series_steinberg(n, order, to_format(fmt))); });
}

kred_status kred_series_chi_render(int j, int order, kred_format fmt, char** out) {
    if (kred_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_cstr(kred::render_series_chi(j, order, to_format(fmt))); });
}

kred_status kred_series_expand_render(const char* numerator, const char* denominator,
                                      int order, kred_format fmt, char** out) {
    if (kred_status st = require(numerator && denominator && out, "null argument")) return st;
    return guarded([&] {
        *out = dup_cstr(
            kred::render_series_expand(parse_form(numerator, denominator), order, to_format(fmt)));
    });
}

kred_status kred_series_pole_order_render(const char* numerator, const char* denominator,
                                          kred_format fmt, char** out) {
    if (kred_status st = require(numerator && denominator && out, "null argument")) return st;
    return guarded([&] {
        *out = dup_cstr(
            kred::render_series_pole_order(parse_form(numerator, denominator), to_format(fmt)));
    });
}

kred_status kred_connectivity_render(const char* lambda, kred_format fmt, char** out) {
    if (kred_status st = require(lambda && out, "null argument")) return st;
    return guarded([&] {
        kred::Parts parts = kred::parse_partition_token(lambda);
        *out = dup_cstr(kred::render_connectivity(parts, to_format(fmt)));
    });
}

kred_status kred_simple_dim_render(const char* lambda, int m, kred_format fmt, char** out) {
    if (kred_status st = require(lambda && out, "null argument")) return st;
    return guarded([&] {
        kred::Parts parts = parse_weak_partition(lambda);
        *out = dup_cstr(kred::render_simple_dim(parts, m, to_format(fmt)));
    });
}

kred_status kred_verify_tables(const char* dir, kred_format fmt, char** out, int* pass) {
    if (kred_status st = require(dir && out, "null argument")) return st;
    return guarded([&] {
        kred::VerifyReport report;
        try {
            report = kred::verify_paper_tables(dir);
        } catch (const std::exception& e) {
            report.pass = false;
            report.lines.push_back(std::string("FAIL: ") + e.what());
            report.lines.push_back("verification FAILED");
        }
        *out = dup_cstr(kred::render_verify(report, to_format(fmt)));
        if (pass) *pass = report.pass ? 1 : 0;
    });
}

}  // extern "C"
