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

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "partition.hpp"

namespace kred {

/* Ring element in the exterior-power basis: a finitely supported integer
 * combination of basis partitions. Keys are partition bitmasks, so map
 * iteration follows basis order. GL-mode keys are tails (leading n implicit).
 * Immutable value semantics; no stored coefficient is zero. */
class RingElement {
public:
    explicit RingElement(Mode mode) : mode_(mode) {}

    static RingElement zero(Mode mode) { return RingElement(mode); }
    static RingElement unit(Mode mode);
    static RingElement basis_class(Mode mode, const Partition& p);

    const Mode& mode() const noexcept { return mode_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t term_count() const noexcept { return coeffs_.size(); }
    const std::map<std::uint64_t, mpz_class>& coeffs() const noexcept { return coeffs_; }

    mpz_class coeff(std::uint64_t mask) const;
    mpz_class coeff(const Partition& p) const { return coeff(p.mask()); }

    void add_term(std::uint64_t mask, const mpz_class& c);
    void add_scaled(const RingElement& other, const mpz_class& c);
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement operator*(const mpz_class& c) const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    Mode mode_;
    std::map<std::uint64_t, mpz_class> coeffs_;
};

/* One straightening rewrite: the duplicated-pair multiset and one of the
 * multisets it produced (mode reductions already applied). */
struct RewriteStep {
    std::vector<int> before;
    std::vector<int> after;
};
using RewriteObserver = std::function<void(const RewriteStep&)>;

/* Chooses which duplicated part value to rewrite; the argument lists the
 * duplicated values ascending. Default (empty function) picks the largest. */
using PairPicker = std::function<int(const std::vector<int>&)>;

/* Expresses the product of Lambda^k over the exponent multiset in the basis,
 * rewriting duplicated pairs via
 *   [L^k x L^k] = [L^k] + 2[L^(k+1) x L^(k-1)] - 2[L^(k+2) x L^(k-2)] + ...
 * with mode reductions applied to every term. Result is independent of the
 * rewrite order. Exponents must be nonnegative; zeros are absorbed. */
RingElement normalize(std::vector<int> exponents, Mode mode,
                      const PairPicker& pick = {}, const RewriteObserver& observe = {});

/* The normalized right-hand side of the rewrite relation for the pair {k,k}. */
RingElement straighten_pair(int k, Mode mode);

/* [Lambda^i] as an element (mode reductions applied: unit at i = 0, and in
 * GL-mode at i = n; zero above n). */
RingElement lambda_class(int i, Mode mode);

RingElement multiply(const RingElement& a, const RingElement& b);

/* a * sum_{0 <= i <= n} [Lambda^i] in a's mode. */
RingElement mult_by_sum_lambda(const RingElement& a);

}  // namespace kred
