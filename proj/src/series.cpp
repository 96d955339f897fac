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

#include "series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kred {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool poly_is_zero(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const mpz_class& c) { return c == 0; });
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

namespace {

/* 1 - q^d */
Poly one_minus_qd(int d) {
    Poly p(d + 1);
    p[0] = 1;
    p[d] = -1;
    return p;
}

/* Exact quotient p / divisor, or nullopt if the division leaves a
 * remainder. Divisor leading coefficient must be a unit (+-1). */
std::optional<Poly> poly_divide_exact(Poly p, const Poly& divisor_in) {
    Poly divisor = poly_trim(divisor_in);
    if (divisor.empty()) throw std::invalid_argument("poly_divide_exact: zero divisor");
    const mpz_class& lead = divisor.back();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("poly_divide_exact: divisor leading coefficient not a unit");
    p = poly_trim(std::move(p));
    if (p.empty()) return Poly{};
    if (p.size() < divisor.size()) return std::nullopt;
    Poly q(p.size() - divisor.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class c = p[i + divisor.size() - 1] * lead;  /* lead is +-1 */
        if (c == 0) continue;
        q[i] = c;
        for (std::size_t j = 0; j < divisor.size(); ++j) p[i + j] -= c * divisor[j];
    }
    if (!poly_is_zero(p)) return std::nullopt;
    return poly_trim(std::move(q));
}

Poly denominator_product(const std::vector<int>& exponents) {
    Poly out{1};
    for (int d : exponents) out = poly_mul(out, one_minus_qd(d));
    return out;
}

}  // namespace

PowerSeries expand(const RationalForm& form, int order) {
    if (order < 0) throw std::invalid_argument("expand: order must be nonnegative");
    for (int d : form.denominator_exponents)
        if (d <= 0) throw std::invalid_argument("expand: denominator exponents must be positive");
    PowerSeries s;
    s.coeff.assign(order + 1, 0);
    for (std::size_t i = 0; i < form.numerator.size() && i <= std::size_t(order); ++i)
        s.coeff[i] = form.numerator[i];
    /* Multiplying by 1/(1-q^d) is the running sum with stride d. */
    for (int d : form.denominator_exponents)
        for (int i = d; i <= order; ++i) s.coeff[i] += s.coeff[i - d];
    return s;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int order) {
    if (order > a.order() || order > b.order())
        throw std::invalid_argument("series_mul: factors truncated below requested order");
    PowerSeries s;
    s.coeff.assign(order + 1, 0);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) s.coeff[i + j] += a.coeff[i] * b.coeff[j];
    return s;
}

RationalForm steinberg_form(int n) {
    if (n < 1) throw std::invalid_argument("steinberg_form: n must be >= 1");
    RationalForm f;
    const long shift = (2L << n) - n - 2;  /* sum of 2^i - 1, i = 1..n */
    f.numerator.assign(shift + 1, 0);
    f.numerator[shift] = 1;
    for (int i = 1; i <= n; ++i) f.denominator_exponents.push_back((1 << i) - 1);
    return f;
}

long connectivity(const Partition& lambda) {
    long deg = 0;
    const Parts& ps = lambda.parts();
    for (std::size_t i = 0; i < ps.size(); ++i) deg += (1L << i) * ps[i];
    return deg;
}

int pole_order_at_one(const RationalForm& form) {
    Poly num = poly_trim(form.numerator);
    if (num.empty()) return 0;
    int mult = 0;
    for (;;) {
        mpz_class at_one = 0;
        for (const mpz_class& c : num) at_one += c;
        if (at_one != 0) break;
        /* Quotient by (1 - q) is the prefix-sum sequence, top dropped. */
        Poly q(num.size() - 1);
        mpz_class acc = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        num = poly_trim(std::move(q));
        ++mult;
        if (num.empty()) break;
    }
    return static_cast<int>(form.denominator_exponents.size()) - mult;
}

PowerSeries chi_series(int j, int order) {
    if (j <= 0 || j % 2 == 0)
        throw std::invalid_argument("chi_series: index must be odd and positive");
    if (order < 0) throw std::invalid_argument("chi_series: order must be nonnegative");
    PowerSeries s;
    s.coeff.assign(order + 1, 0);
    for (long d = j; d <= order; d *= 2) s.coeff[d] = 1;
    return s;
}

RationalForm eigenvector_denominator_form(int n) {
    if (n < 1)
        throw std::invalid_argument("eigenvector_denominator_form: n must be >= 1");
    Poly prod{1};
    for (int i = 2; i <= n; ++i) {  /* the i = 1 factor is the constant 1 */
        Poly factor((1 << i) - 1, 1);
        prod = poly_mul(prod, factor);
    }
    return RationalForm{std::move(prod), {}};
}

bool forms_equal(const RationalForm& a, const RationalForm& b) {
    Poly lhs = poly_mul(poly_trim(a.numerator), denominator_product(b.denominator_exponents));
    Poly rhs = poly_mul(poly_trim(b.numerator), denominator_product(a.denominator_exponents));
    return lhs == rhs;
}

RationalForm reduce_form(const RationalForm& form) {
    RationalForm out;
    out.numerator = poly_trim(form.numerator);
    std::vector<int> pending = form.denominator_exponents;
    std::sort(pending.begin(), pending.end());
    for (int d : pending) {
        if (!poly_is_zero(out.numerator)) {
            if (auto q = poly_divide_exact(out.numerator, one_minus_qd(d))) {
                out.numerator = std::move(*q);
                continue;
            }
        }
        out.denominator_exponents.push_back(d);
    }
    return out;
}

RationalForm form_mul(const RationalForm& a, const RationalForm& b) {
    RationalForm out;
    out.numerator = poly_mul(a.numerator, b.numerator);
    out.denominator_exponents = a.denominator_exponents;
    out.denominator_exponents.insert(out.denominator_exponents.end(),
                                     b.denominator_exponents.begin(),
                                     b.denominator_exponents.end());
    std::sort(out.denominator_exponents.begin(), out.denominator_exponents.end());
    return out;
}

}  // namespace kred
