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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kred {

using Parts = std::vector<int>;

bool is_weakly_decreasing(const Parts& parts);
bool is_strictly_decreasing(const Parts& parts);

/* "(0)" for the empty partition, "(3,1)" otherwise. */
std::string parts_str(const Parts& parts);

/* Strictly decreasing partition (2-regular). Doubles as a basis key: the
 * bitmask sum(2^(part-1)) is a bijection onto the unsigned integers, and
 * sorting by it reproduces the table ordering used throughout. */
class Partition {
public:
    Partition() = default;
    explicit Partition(Parts parts);
    static Partition from_mask(std::uint64_t mask);

    std::uint64_t mask() const noexcept { return mask_; }
    const Parts& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    std::string str() const { return parts_str(parts_); }

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.mask_ == b.mask_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.mask_ <=> b.mask_;
    }

private:
    Parts parts_;
    std::uint64_t mask_ = 0;
};

enum class ModeKind { M, GL };

/* Ambient ring: R(M_n) reduces Lambda^k = 0 for k > n; R(GL_n) additionally
 * identifies Lambda^n with the unit (the determinant is trivial over F2). */
struct Mode {
    ModeKind kind = ModeKind::M;
    int n = 0;
    friend bool operator==(const Mode&, const Mode&) = default;
};

/* Basis table in bitmask order. M-mode: the 2^n strict partitions with parts
 * <= n. GL-mode: the 2^(n-1) tails mu of (n, mu), parts <= n-1; the implicit
 * leading n is restored by label(). Index in the table equals the bitmask. */
struct BasisOrder {
    int n = 0;
    ModeKind kind = ModeKind::M;
    std::vector<Partition> table;

    Parts label_parts(int index) const;
    std::string label(int index) const { return parts_str(label_parts(index)); }
};

BasisOrder enumerate_basis(int n, ModeKind kind);

/* Transpose of the Young diagram; accepts any weakly decreasing partition. */
Parts conjugate(const Parts& lambda);

/* Difference indexing of the conjugate: (c1-c2, ..., c_{h-1}-c_h, c_h).
 * Entries all lie in {0,1} exactly when lambda is strictly decreasing. */
std::vector<int> harris_shank_index(const Parts& lambda);

enum class DomRel { lower, greater, equal, incomparable };

/* Dominance, graded by total size; within equal size, a is lower than b when
 * every partial sum of a is >= the one of b. This orientation makes (n) the
 * smallest partition of n. */
DomRel dominance_compare(const Parts& a, const Parts& b);

}  // namespace kred
