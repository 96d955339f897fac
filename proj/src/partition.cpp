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

#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kred {

bool is_weakly_decreasing(const Parts& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

bool is_strictly_decreasing(const Parts& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i + 1 < parts.size() && parts[i] <= parts[i + 1]) return false;
    }
    return true;
}

std::string parts_str(const Parts& parts) {
    if (parts.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    out += ')';
    return out;
}

Partition::Partition(Parts parts) : parts_(std::move(parts)) {
    if (!is_strictly_decreasing(parts_))
        throw std::invalid_argument("partition parts must be strictly decreasing and positive: " +
                                    parts_str(parts_));
    if (!parts_.empty() && parts_.front() > 63)
        throw std::invalid_argument("partition part exceeds supported bound 63");
    for (int p : parts_) mask_ |= std::uint64_t{1} << (p - 1);
}

Partition Partition::from_mask(std::uint64_t mask) {
    Partition out;
    out.mask_ = mask;
    for (int p = 64; p >= 1; --p)
        if (mask >> (p - 1) & 1) out.parts_.push_back(p);
    return out;
}

int Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Parts BasisOrder::label_parts(int index) const {
    const Partition& p = table.at(static_cast<std::size_t>(index));
    if (kind == ModeKind::M) return p.parts();
    Parts out;
    out.reserve(p.parts().size() + 1);
    out.push_back(n);
    out.insert(out.end(), p.parts().begin(), p.parts().end());
    return out;
}

BasisOrder enumerate_basis(int n, ModeKind kind) {
    if (n < 0) throw std::invalid_argument("enumerate_basis: n must be nonnegative");
    if (kind == ModeKind::GL && n == 0)
        throw std::invalid_argument("enumerate_basis: GL-mode requires n >= 1");
    if (n > 20) throw std::invalid_argument("enumerate_basis: n > 20 not supported");

    BasisOrder out;
    out.n = n;
    out.kind = kind;
    const std::uint64_t count =
        std::uint64_t{1} << (kind == ModeKind::M ? n : n - 1);
    out.table.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask)
        out.table.push_back(Partition::from_mask(mask));
    return out;
}

Parts conjugate(const Parts& lambda) {
    if (!is_weakly_decreasing(lambda))
        throw std::invalid_argument("conjugate: input must be weakly decreasing with positive parts");
    Parts out;
    if (lambda.empty()) return out;
    out.reserve(lambda.front());
    for (int j = 1; j <= lambda.front(); ++j) {
        int count = 0;
        for (int part : lambda)
            if (part >= j) ++count;
        out.push_back(count);
    }
    return out;
}

std::vector<int> harris_shank_index(const Parts& lambda) {
    Parts c = conjugate(lambda);
    std::vector<int> out;
    if (c.empty()) return out;
    out.reserve(c.size());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) out.push_back(c[i] - c[i + 1]);
    out.push_back(c.back());
    return out;
}

DomRel dominance_compare(const Parts& a, const Parts& b) {
    if (!is_weakly_decreasing(a) || !is_weakly_decreasing(b))
        throw std::invalid_argument("dominance_compare: inputs must be weakly decreasing");
    const long sum_a = std::accumulate(a.begin(), a.end(), 0L);
    const long sum_b = std::accumulate(b.begin(), b.end(), 0L);
    if (sum_a < sum_b) return DomRel::lower;
    if (sum_a > sum_b) return DomRel::greater;

    bool a_dominates = true, b_dominates = true;
    long pa = 0, pb = 0;
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa < pb) a_dominates = false;
        if (pb < pa) b_dominates = false;
    }
    if (a_dominates && b_dominates) return DomRel::equal;
    if (a_dominates) return DomRel::lower;
    if (b_dominates) return DomRel::greater;
    return DomRel::incomparable;
}

}  // namespace kred
