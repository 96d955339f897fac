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

#include "ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace kred {

RingElement RingElement::unit(Mode mode) {
    RingElement e(mode);
    e.add_term(0, 1);
    return e;
}

RingElement RingElement::basis_class(Mode mode, const Partition& p) {
    const int cap = mode.kind == ModeKind::M ? mode.n : mode.n - 1;
    for (int part : p.parts()) {
        if (part > cap)
            throw std::invalid_argument("basis_class: part exceeds basis bound");
    }
    RingElement e(mode);
    e.add_term(p.mask(), 1);
    return e;
}

mpz_class RingElement::coeff(std::uint64_t mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void RingElement::add_term(std::uint64_t mask, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void RingElement::add_scaled(const RingElement& other, const mpz_class& c) {
    if (mode_ != other.mode_)
        throw std::invalid_argument("add_scaled: mode mismatch");
    if (c == 0) return;
    for (const auto& [mask, v] : other.coeffs_) add_term(mask, v * c);
}

RingElement& RingElement::operator+=(const RingElement& other) {
    add_scaled(other, 1);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    add_scaled(other, -1);
    return *this;
}

RingElement RingElement::operator*(const mpz_class& c) const {
    RingElement e(mode_);
    if (c != 0)
        for (const auto& [mask, v] : coeffs_) e.coeffs_.emplace(mask, v * c);
    return e;
}

namespace {

/* Drops zero parts and applies mode reductions to a single part. Returns
 * false if the part kills the whole product. */
bool reduce_part(int part, const Mode& mode, std::vector<int>& out) {
    if (part == 0) return true;
    if (part > mode.n) return false;
    if (mode.kind == ModeKind::GL && part == mode.n) return true;
    out.push_back(part);
    return true;
}

/* Sorted-descending multiset of parts. */
using Multiset = std::vector<int>;

void sort_desc(Multiset& m) { std::sort(m.begin(), m.end(), std::greater<int>()); }

std::vector<int> duplicated_values(const Multiset& m) {
    std::vector<int> dups;
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] == m[i + 1] && (dups.empty() || dups.back() != m[i])) dups.push_back(m[i]);
    std::sort(dups.begin(), dups.end());
    return dups;
}

}  // namespace

RingElement normalize(std::vector<int> exponents, Mode mode,
                      const PairPicker& pick, const RewriteObserver& observe) {
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("normalize: negative exponent");

    Multiset start;
    for (int e : exponents)
        if (!reduce_part(e, mode, start)) return RingElement::zero(mode);
    sort_desc(start);

    std::map<Multiset, mpz_class> work;
    work[start] = 1;

    RingElement result(mode);
    while (!work.empty()) {
        /* Move normal forms (strictly decreasing keys) out; rewrite the rest. */
        auto it = work.begin();
        bool found = false;
        for (; it != work.end(); ++it) {
            if (!duplicated_values(it->first).empty()) { found = true; break; }
        }
        if (!found) {
            for (const auto& [key, c] : work) {
                std::uint64_t mask = 0;
                for (int part : key) mask |= std::uint64_t(1) << (part - 1);
                result.add_term(mask, c);
            }
            break;
        }

        const Multiset before = it->first;
        const mpz_class c = it->second;
        work.erase(it);
        if (c == 0) continue;

        const std::vector<int> dups = duplicated_values(before);
        int k = dups.back();
        if (pick) {
            k = pick(dups);
            if (std::find(dups.begin(), dups.end(), k) == dups.end())
                throw std::invalid_argument("normalize: picker chose a non-duplicated value");
        }

        Multiset rest = before;
        auto r1 = std::find(rest.begin(), rest.end(), k);
        rest.erase(r1);
        auto r2 = std::find(rest.begin(), rest.end(), k);
        rest.erase(r2);

        auto emit = [&](Multiset term, const mpz_class& coeff) {
            sort_desc(term);
            if (observe) observe(RewriteStep{before, term});
            auto [wit, inserted] = work.try_emplace(term, coeff);
            if (!inserted) {
                wit->second += coeff;
                if (wit->second == 0) work.erase(wit);
            }
        };

        /* [L^k x L^k] -> [L^k] + sum_i (-1)^(i-1) 2 [L^(k+i) x L^(k-i)] */
        {
            Multiset term = rest;
            term.push_back(k);
            emit(std::move(term), c);
        }
        for (int i = 1; i <= k; ++i) {
            const int hi = k + i, lo = k - i;
            if (hi > mode.n) break;  /* hi only grows; every later term dies */
            Multiset term = rest;
            reduce_part(hi, mode, term);  /* hi <= n here, never kills */
            reduce_part(lo, mode, term);
            emit(std::move(term), (i % 2 == 1 ? 2 : -2) * c);
        }
    }
    return result;
}

RingElement straighten_pair(int k, Mode mode) {
    if (k <= 0) throw std::invalid_argument("straighten_pair: k must be positive");
    return normalize({k, k}, mode);
}

RingElement lambda_class(int i, Mode mode) {
    if (i < 0) throw std::invalid_argument("lambda_class: negative degree");
    std::vector<int> reduced;
    if (!reduce_part(i, mode, reduced)) return RingElement::zero(mode);
    if (reduced.empty()) return RingElement::unit(mode);
    return RingElement::basis_class(mode, Partition(Parts{reduced[0]}));
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.mode() != b.mode())
        throw std::invalid_argument("multiply: mode mismatch");
    RingElement out(a.mode());
    for (const auto& [ma, ca] : a.coeffs()) {
        const Parts pa = Partition::from_mask(ma).parts();
        for (const auto& [mb, cb] : b.coeffs()) {
            const Parts pb = Partition::from_mask(mb).parts();
            std::vector<int> exps = pa;
            exps.insert(exps.end(), pb.begin(), pb.end());
            out.add_scaled(normalize(std::move(exps), a.mode()), ca * cb);
        }
    }
    return out;
}

RingElement mult_by_sum_lambda(const RingElement& a) {
    RingElement out(a.mode());
    for (int i = 0; i <= a.mode().n; ++i)
        out += multiply(a, lambda_class(i, a.mode()));
    return out;
}

}  // namespace kred
