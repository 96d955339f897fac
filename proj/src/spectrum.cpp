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

#include "spectrum.hpp"

#include <chrono>
#include <stdexcept>

#include "linalg.hpp"

namespace kred {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ConjectureReport conjecture_report(int n) {
    if (n < 1) throw std::invalid_argument("conjecture_report: n must be >= 1");
    ConjectureReport rep;
    rep.n = n;

    auto t0 = std::chrono::steady_clock::now();
    TMatrices tm = build_t_matrices(n);
    rep.build_seconds = seconds_since(t0);

    std::vector<long> roots;
    for (int i = 0; i <= n; ++i) roots.push_back(1L << i);

    t0 = std::chrono::steady_clock::now();
    rep.annihilates = annihilation_check(tm.t, roots);
    rep.annihilation_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    for (int i = 0; i <= n; ++i) {
        EigenCheck c;
        c.eigenvalue = roots[i];
        c.expected = i < n ? std::size_t(1) << (n - 1 - i) : 1;
        c.multiplicity = eigen_multiplicity(tm.t, c.eigenvalue);
        c.ok = c.multiplicity == c.expected;
        rep.multiplicity_sum += c.multiplicity;
        rep.checks.push_back(c);
    }
    rep.multiplicity_seconds = seconds_since(t0);

    rep.pass = rep.annihilates && rep.multiplicity_sum == (std::size_t(1) << n);
    for (const EigenCheck& c : rep.checks) rep.pass = rep.pass && c.ok;
    return rep;
}

}  // namespace kred
