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

#include <cstddef>
#include <vector>

#include "toperator.hpp"

namespace kred {

struct EigenCheck {
    long eigenvalue = 0;
    std::size_t multiplicity = 0;
    std::size_t expected = 0;
    bool ok = false;
};

/* Spectral analysis of t_n against the conjectured pattern: roots 2^0..2^n,
 * multiplicity 2^(n-1-i) for 2^i with i < n, and 1 for 2^n. Annihilation by
 * the product of (t - 2^i I) plus full multiplicity count certify
 * diagonalizability with exactly that spectrum. */
struct ConjectureReport {
    int n = 0;
    bool annihilates = false;
    std::vector<EigenCheck> checks;
    std::size_t multiplicity_sum = 0;
    bool pass = false;
    double build_seconds = 0;
    double annihilation_seconds = 0;
    double multiplicity_seconds = 0;
};

ConjectureReport conjecture_report(int n);

}  // namespace kred
