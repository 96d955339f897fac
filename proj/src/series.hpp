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

#include <vector>

#include <gmpxx.h>

#include "partition.hpp"

namespace kred {

/* Dense integer polynomial in q, index = degree, trailing zeros trimmed;
 * the zero polynomial is the empty vector. */
using Poly = std::vector<mpz_class>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
bool poly_is_zero(const Poly& p);

/* numerator / prod_j (1 - q^(d_j)), exponents sorted ascending. Forms are
 * never reduced implicitly; see reduce_form. */
struct RationalForm {
    Poly numerator;
    std::vector<int> denominator_exponents;
};

/* Truncated q-expansion; coeff[d] for 0 <= d <= order (inclusive cap). */
struct PowerSeries {
    std::vector<mpz_class> coeff;
    int order() const { return static_cast<int>(coeff.size()) - 1; }
};

/* Exact expansion to the requested order via geometric accumulation,
 * one denominator factor at a time. */
PowerSeries expand(const RationalForm& form, int order);

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int order);

/* q^(2^(n+1)-n-2) / prod_{1<=i<=n} (1 - q^(2^i - 1)). */
RationalForm steinberg_form(int n);

/* sum_i 2^(i-1) lambda_i: the degree of the first nonzero coefficient of
 * the series attached to the partition. */
long connectivity(const Partition& lambda);

/* Count of denominator factors minus the multiplicity of the root q = 1 in
 * the numerator. Zero numerator returns 0 by convention. */
int pole_order_at_one(const RationalForm& form);

/* Series with coefficient 1 exactly at the degrees j * 2^h <= order. */
PowerSeries chi_series(int j, int order);

/* prod_{1<=i<=n} (1 + q + ... + q^(2^i - 2)) as an expanded polynomial;
 * the i = 1 factor is the constant 1. */
RationalForm eigenvector_denominator_form(int n);

/* Exact equality by cross-multiplying numerators against the opposite
 * denominator products. */
bool forms_equal(const RationalForm& a, const RationalForm& b);

/* Cancels denominator factors that divide the numerator exactly; the only
 * reduction utility, never applied implicitly. */
RationalForm reduce_form(const RationalForm& form);

RationalForm form_mul(const RationalForm& a, const RationalForm& b);

}  // namespace kred
