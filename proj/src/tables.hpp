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

#include <string>
#include <vector>

#include "intmat.hpp"
#include "notation.hpp"

namespace kred {

/* One published operator table: basis labels plus the integer matrix. */
struct TauFixture {
    int n = 0;
    std::vector<Parts> basis;
    IntMatrix matrix;
};

/* The published reference tables as shipped in the data directory. */
struct PaperTables {
    std::vector<ParsedElement> s_rows;   /* integral rows, M-mode n = 4 */
    std::vector<ParsedElement> sq_rows;  /* mod-2 rows */
    std::vector<TauFixture> tau;
    ErrataMap errata;
    std::map<std::string, std::string> errata_notes;
};

/* Reads s_table.txt, sq_table.txt, tau_matrices.txt, errata.json. Throws
 * ParseError / runtime_error on malformed fixtures. */
PaperTables load_paper_tables(const std::string& dir);

struct VerifyReport {
    std::vector<std::string> lines;
    bool pass = false;
};

/* Recomputes every fixture from first principles and compares. A fixture
 * mismatch in a tau table is tolerated only as a catalogued typo: n >= 4
 * and the recomputed matrix certified by both the trace identity and the
 * block identities. Erratum applications must be confirmed by the mod-2
 * cross-check. */
VerifyReport verify_paper_tables(const std::string& dir);

}  // namespace kred
