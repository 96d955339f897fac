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

/* Command-line front end; talks to the core exclusively through the C API. */

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "kred/kred.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

kred_format to_format(const std::string& name) {
    if (name == "paper") return KRED_FORMAT_PAPER;
    if (name == "json") return KRED_FORMAT_JSON;
    return KRED_FORMAT_CSV;
}

/* Prints the rendered text on success; otherwise reports the failure on
 * stderr and returns the usage exit code. */
int emit(kred_status st, char* text) {
    if (st != KRED_OK) {
        std::fprintf(stderr, "error: %s\n", kred_last_error());
        return kExitUsage;
    }
    std::fputs(text, stdout);
    kred_string_free(text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in truncated exterior-power rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kred_version()));

    std::string format = "paper";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"paper", "json", "csv"}))
        ->capture_default_str();

    /* sym */
    auto* sym = app.add_subcommand("sym", "Symmetric-power rows in the exterior basis");
    int sym_n = 4, sym_max_k = 26;
    bool sym_mod2 = false;
    sym->add_option("--n", sym_n, "Rank")->required();
    sym->add_option("--max-k", sym_max_k, "Largest symmetric power")->required();
    sym->add_flag("--mod2", sym_mod2, "Reduce coefficients mod 2");

    /* tau */
    auto* tau = app.add_subcommand("tau", "Printed operator matrix on the quotient ring");
    int tau_n = 2;
    tau->add_option("--n", tau_n, "Rank")->required();

    /* tmat */
    auto* tmat = app.add_subcommand("tmat", "Duplication operator matrix");
    int tmat_n = 2;
    bool tmat_blocks = false;
    tmat->add_option("--n", tmat_n, "Rank")->required();
    tmat->add_flag("--blocks", tmat_blocks, "Append the recursive block decomposition");

    /* eigen */
    auto* eigen = app.add_subcommand("eigen", "Spectrum report for the duplication operator");
    int eigen_n = 2;
    bool eigen_kernel = false, eigen_timings = false;
    eigen->add_option("--n", eigen_n, "Rank")->required();
    eigen->add_flag("--kernel-at-1", eigen_kernel, "Include an integer basis of ker(t - I)");
    eigen->add_flag("--timings", eigen_timings, "Include wall-clock timings");

    /* rank-sym */
    auto* ranksym = app.add_subcommand("rank-sym", "Rank profile of the symmetric-power rows");
    int rs_n = 4, rs_max_k = 26;
    bool rs_covectors = false;
    ranksym->add_option("--n", rs_n, "Rank")->required();
    ranksym->add_option("--max-k", rs_max_k, "Largest symmetric power")->required();
    ranksym->add_flag("--null-covectors", rs_covectors, "Include left null covectors");

    /* series */
    auto* series = app.add_subcommand("series", "Power-series utilities");
    series->require_subcommand(1);

    auto* steinberg = series->add_subcommand("steinberg", "Top-summand closed-form series");
    int st_n = 1, st_order = 40;
    steinberg->add_option("--n", st_n, "Rank")->required();
    steinberg->add_option("--order", st_order, "Expansion order")->capture_default_str();

    auto* chi = series->add_subcommand("chi", "Indicator series supported on j * 2^h");
    int chi_j = 1, chi_order = 40;
    chi->add_option("--j", chi_j, "Odd positive seed")->required();
    chi->add_option("--order", chi_order, "Expansion order")->capture_default_str();

    auto* expand = series->add_subcommand("expand", "Expand numerator / prod(1 - q^d)");
    std::string ex_num = "1", ex_den;
    int ex_order = 20;
    expand->add_option("--numerator", ex_num, "Comma-separated coefficients from degree 0")
        ->capture_default_str();
    expand->add_option("--denominator", ex_den, "Comma-separated exponents d");
    expand->add_option("--order", ex_order, "Expansion order")->capture_default_str();

    auto* pole = series->add_subcommand("pole-order", "Pole order at q = 1");
    std::string po_num = "1", po_den;
    pole->add_option("--numerator", po_num, "Comma-separated coefficients from degree 0")
        ->capture_default_str();
    pole->add_option("--denominator", po_den, "Comma-separated exponents d");

    auto* conn = series->add_subcommand("connectivity", "First nonzero degree for a partition");
    std::string conn_lambda;
    conn->add_option("--lambda", conn_lambda, "Strictly decreasing parts, e.g. 5,2,1")
        ->required();

    /* simple-dim */
    auto* simple = app.add_subcommand("simple-dim", "Image dimension of the Young idempotent");
    std::string sd_lambda;
    int sd_m = 1;
    simple->add_option("--lambda", sd_lambda, "Weakly decreasing parts, e.g. 2,1")->required();
    simple->add_option("--dim", sd_m, "Dimension of the underlying space")->required();

    /* verify-paper-tables */
    auto* verify = app.add_subcommand("verify-paper-tables",
                                      "Recompute and check the shipped reference tables");
    std::string verify_dir;
    verify->add_option("--data", verify_dir, "Directory with the table fixtures")->required();

    /* Let --format appear after a subcommand name. */
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        /* --help and --version exit 0; every other parse problem is usage. */
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    const kred_format fmt = to_format(format);
    char* text = nullptr;

    kred_status st = KRED_ERR_INVALID;
    int pass = 1;
    if (*sym) {
        st = kred_sym_rows_render(sym_n, sym_max_k, sym_mod2, fmt, &text);
    } else if (*tau) {
        st = kred_tau_render(tau_n, fmt, &text);
    } else if (*tmat) {
        st = kred_t_render(tmat_n, tmat_blocks, fmt, &text);
    } else if (*eigen) {
        st = kred_eigen_report(eigen_n, eigen_kernel, eigen_timings, fmt, &text, &pass);
    } else if (*ranksym) {
        st = kred_rank_profile_render(rs_n, rs_max_k, rs_covectors, fmt, &text);
    } else if (*steinberg) {
        st = kred_series_steinberg_render(st_n, st_order, fmt, &text);
    } else if (*chi) {
        st = kred_series_chi_render(chi_j, chi_order, fmt, &text);
    } else if (*expand) {
        st = kred_series_expand_render(ex_num.c_str(), ex_den.c_str(), ex_order, fmt, &text);
    } else if (*pole) {
        st = kred_series_pole_order_render(po_num.c_str(), po_den.c_str(), fmt, &text);
    } else if (*conn) {
        st = kred_connectivity_render(conn_lambda.c_str(), fmt, &text);
    } else if (*simple) {
        st = kred_simple_dim_render(sd_lambda.c_str(), sd_m, fmt, &text);
    } else if (*verify) {
        st = kred_verify_tables(verify_dir.c_str(), fmt, &text, &pass);
    } else {
        return kExitUsage;
    }
    int code = emit(st, text);
    if (code != kExitOk) return code;
    return pass ? kExitOk : kExitVerifyFailed;
}
