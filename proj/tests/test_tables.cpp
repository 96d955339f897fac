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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tables.hpp"

using namespace kred;

namespace {

namespace fs = std::filesystem;

#ifndef KRED_DATA_DIR
#error "KRED_DATA_DIR must point at the fixture directory"
#endif

const std::string kData = KRED_DATA_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

/* Copies the fixture set into a fresh temp dir, applying one substitution
 * to one file on the way. */
struct FixtureCopy {
    fs::path dir;
    FixtureCopy(const std::string& file, const std::string& from, const std::string& to) {
        dir = fs::temp_directory_path() /
              fs::path("kred_tables_" + std::to_string(counter()++));
        fs::create_directories(dir);
        for (const char* name :
             {"s_table.txt", "sq_table.txt", "tau_matrices.txt", "errata.json"}) {
            std::string text = slurp(kData + "/" + name);
            if (name == file) {
                std::size_t at = text.find(from);
                REQUIRE(at != std::string::npos);
                text = text.substr(0, at) + to + text.substr(at + from.size());
            }
            spit(dir / name, text);
        }
    }
    ~FixtureCopy() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

bool has_line_with(const VerifyReport& rep, const std::string& needle) {
    for (const std::string& line : rep.lines)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("shipped fixtures load completely") {
    PaperTables t = load_paper_tables(kData);
    CHECK(t.s_rows.size() == 27);
    CHECK(t.sq_rows.size() == 27);
    REQUIRE(t.tau.size() == 7);
    for (int n = 0; n <= 6; ++n) {
        CHECK(t.tau[n].n == n);
        const std::size_t dim = n == 0 ? 1 : std::size_t(1) << (n - 1);
        CHECK(t.tau[n].basis.size() == dim);
        CHECK(t.tau[n].matrix.rows() == dim);
    }
    CHECK(t.errata.count("(2,3)") == 1);
    CHECK(t.errata_notes.count("(2,3)") == 1);
}

TEST_CASE("corrections apply exactly twice in the integral table") {
    PaperTables t = load_paper_tables(kData);
    std::size_t applications = 0;
    for (const auto& row : t.s_rows) applications += row.errata.size();
    CHECK(applications == 2);
    for (const auto& row : t.sq_rows) CHECK(row.errata.empty());
}

TEST_CASE("shipped fixtures verify") {
    VerifyReport rep = verify_paper_tables(kData);
    CHECK(rep.pass);
    CHECK(has_line_with(rep, "verification PASSED"));
    CHECK(has_line_with(rep, "s-table: 27/27"));
    CHECK(has_line_with(rep, "sq-table: 27/27"));
    CHECK(has_line_with(rep, "tau_6 matches recomputation"));
}

TEST_CASE("missing directory fails gracefully") {
    VerifyReport rep = verify_paper_tables("/nonexistent/kred");
    CHECK_FALSE(rep.pass);
    CHECK(has_line_with(rep, "verification FAILED"));
}

TEST_CASE("a corrupted integral row fails") {
    FixtureCopy fc("s_table.txt", "s_4 = (1)+(2)+(2,1)+(4)", "s_4 = (1)+(2)+(2,1)+2(4)");
    VerifyReport rep = verify_paper_tables(fc.dir.string());
    CHECK_FALSE(rep.pass);
    CHECK(has_line_with(rep, "s_4 differs"));
}

TEST_CASE("a corrupted mod-2 row fails") {
    FixtureCopy fc("sq_table.txt", "sq_7 = (1)+(3,2)", "sq_7 = (1)+(3,1)");
    VerifyReport rep = verify_paper_tables(fc.dir.string());
    CHECK_FALSE(rep.pass);
    CHECK(has_line_with(rep, "sq_7 differs"));
}

TEST_CASE("a corrupted hand-anchored operator table fails") {
    /* tau_2 row "2 2": no triage below rank four. */
    FixtureCopy fc("tau_matrices.txt", "2 2\n1 3", "2 1\n1 3");
    VerifyReport rep = verify_paper_tables(fc.dir.string());
    CHECK_FALSE(rep.pass);
    CHECK(has_line_with(rep, "tau_2 differs"));
}

TEST_CASE("a deviating high-rank cell is noted once certified") {
    /* Perturbing one tau_5 cell engages the triage path: the recomputation
     * is certified by the trace and block identities, so the deviating cell
     * is reported, not fatal. */
    FixtureCopy fc("tau_matrices.txt", "0 -8 -32 -152", "0 -8 -32 -151");
    VerifyReport rep = verify_paper_tables(fc.dir.string());
    CHECK(rep.pass);
    CHECK(has_line_with(rep, "tau_5: 1 fixture cell(s) differ"));
}

TEST_CASE("an undocumented erratum fails") {
    /* Strip the note; the substitution still applies but is no longer
     * justified, which must fail. */
    FixtureCopy fc("errata.json", "\"(2,3)\": \"Token", "\"(9,9)\": \"Token");
    VerifyReport rep = verify_paper_tables(fc.dir.string());
    CHECK_FALSE(rep.pass);
    CHECK(has_line_with(rep, "no catalogued justification note"));
}

TEST_CASE("a truncated operator file fails") {
    std::string tau = slurp(kData + "/tau_matrices.txt");
    std::size_t at = tau.find("tau_6");
    REQUIRE(at != std::string::npos);
    FixtureCopy fc("errata.json", "{", "{");  /* plain copy */
    spit(fc.dir / "tau_matrices.txt", tau.substr(0, at));
    VerifyReport rep = verify_paper_tables(fc.dir.string());
    CHECK_FALSE(rep.pass);
    CHECK(has_line_with(rep, "tau tables missing"));
}

}  // TEST_SUITE
