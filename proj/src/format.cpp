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

#include "format.hpp"

#include <stdexcept>

#include <json.hpp>

#include "linalg.hpp"
#include "spectrum.hpp"
#include "sym.hpp"
#include "toperator.hpp"
#include "young.hpp"

namespace kred {

namespace {

using ojson = nlohmann::ordered_json;

/* Integers within the JSON-safe double range stay numbers; larger values
 * become decimal strings. */
ojson json_int(const mpz_class& v) {
    if (v.fits_slong_p()) {
        long l = v.get_si();
        if (l >= -(1L << 53) && l <= (1L << 53)) return l;
    }
    return v.get_str();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ojson basis_json(const BasisOrder& basis) {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < basis.table.size(); ++i)
        arr.push_back(basis.label_parts(static_cast<int>(i)));
    return arr;
}

std::string basis_line(const BasisOrder& basis) {
    std::string out = "basis:";
    for (std::size_t i = 0; i < basis.table.size(); ++i) {
        out += i ? ", " : " ";
        out += basis.label(static_cast<int>(i));
    }
    return out;
}

std::string matrix_grid(const IntMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += m.at(r, c).get_str();
        }
        out += '\n';
    }
    return out;
}

ojson matrix_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_int(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_csv(const IntMatrix& m, const BasisOrder& basis) {
    std::string out;
    for (std::size_t c = 0; c < basis.table.size(); ++c) {
        out += ',';
        out += csv_quote(basis.label(static_cast<int>(c)));
    }
    out += '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += csv_quote(basis.label(static_cast<int>(r)));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out += ',';
            out += m.at(r, c).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string series_text(const PowerSeries& s) {
    std::string out = "coefficients:";
    for (const mpz_class& c : s.coeff) {
        out += ' ';
        out += c.get_str();
    }
    out += '\n';
    return out;
}

std::string series_csv(const PowerSeries& s) {
    std::string out = "degree,coefficient\n";
    for (std::size_t d = 0; d < s.coeff.size(); ++d)
        out += std::to_string(d) + "," + s.coeff[d].get_str() + "\n";
    return out;
}

ojson series_json_fields(const PowerSeries& s) {
    ojson arr = ojson::array();
    for (const mpz_class& c : s.coeff) arr.push_back(json_int(c));
    return arr;
}

std::string form_text(const RationalForm& f) {
    std::string out = "numerator:";
    for (const mpz_class& c : f.numerator) {
        out += ' ';
        out += c.get_str();
    }
    out += "\ndenominator_exponents:";
    for (int d : f.denominator_exponents) out += ' ' + std::to_string(d);
    out += '\n';
    return out;
}

ojson form_json_fields(const RationalForm& f) {
    ojson o;
    ojson num = ojson::array();
    for (const mpz_class& c : f.numerator) num.push_back(json_int(c));
    o["numerator"] = std::move(num);
    o["denominator_exponents"] = f.denominator_exponents;
    return o;
}

/* Scalars print bare in text mode so the CLI output stays script-friendly. */
std::string scalar_out(const std::string& label, long long value, OutFormat fmt) {
    switch (fmt) {
        case OutFormat::Paper:
            return std::to_string(value) + "\n";
        case OutFormat::Json: {
            ojson o;
            o[label] = value;
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv:
            return label + "\n" + std::to_string(value) + "\n";
    }
    return {};
}

}  // namespace

OutFormat parse_format(const std::string& name) {
    if (name == "paper") return OutFormat::Paper;
    if (name == "json") return OutFormat::Json;
    if (name == "csv") return OutFormat::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_sym_rows(int n, int max_k, bool mod2, OutFormat fmt) {
    SymTable table = build_sym_table(n, max_k);
    BasisOrder basis = enumerate_basis(n, ModeKind::M);
    std::vector<RingElement> rows;
    rows.reserve(table.rows.size());
    for (const RingElement& r : table.rows) rows.push_back(mod2 ? mod2_reduce(r) : r);

    const std::string prefix = mod2 ? "sq_" : "s_";
    switch (fmt) {
        case OutFormat::Paper: {
            std::string out;
            for (std::size_t k = 0; k < rows.size(); ++k)
                out += prefix + std::to_string(k) + " = " + render_paper_notation(rows[k]) + "\n";
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["n"] = n;
            o["mode"] = "M";
            o["basis"] = basis_json(basis);
            ojson rr = ojson::array();
            for (const RingElement& row : rows) {
                ojson coords = ojson::array();
                for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
                    coords.push_back(json_int(row.coeff(mask)));
                rr.push_back(std::move(coords));
            }
            o["rows"] = std::move(rr);
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv: {
            std::string out = "k";
            for (std::size_t c = 0; c < basis.table.size(); ++c)
                out += "," + csv_quote(basis.label(static_cast<int>(c)));
            out += '\n';
            for (std::size_t k = 0; k < rows.size(); ++k) {
                out += std::to_string(k);
                for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
                    out += "," + rows[k].coeff(mask).get_str();
                out += '\n';
            }
            return out;
        }
    }
    return {};
}

std::string render_tau(int n, OutFormat fmt) {
    TMatrices tm = build_t_matrices(n);
    switch (fmt) {
        case OutFormat::Paper: {
            std::string out = "tau_" + std::to_string(n) + "\n";
            if (n >= 1)
                out += basis_line(enumerate_basis(n, ModeKind::GL)) + "\n";
            else
                out += "basis: (0)\n";
            out += matrix_grid(tm.tau_printed);
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["n"] = n;
            o["mode"] = "GL";
            if (n >= 1)
                o["basis"] = basis_json(enumerate_basis(n, ModeKind::GL));
            else
                o["basis"] = ojson::array({ojson::array()});
            o["entries"] = matrix_json(tm.tau_printed);
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv: {
            if (n >= 1) return matrix_csv(tm.tau_printed, enumerate_basis(n, ModeKind::GL));
            return ",\"(0)\"\n\"(0)\",1\n";
        }
    }
    return {};
}

std::string render_tmat(int n, bool blocks, OutFormat fmt) {
    TMatrices tm = build_t_matrices(n);
    BasisOrder basis = enumerate_basis(n, ModeKind::M);
    std::string out;
    switch (fmt) {
        case OutFormat::Paper: {
            out = "t_" + std::to_string(n) + "\n" + basis_line(basis) + "\n" +
                  matrix_grid(tm.t);
            if (blocks && n >= 1) {
                TBlocks b = block_decompose(tm.t, n);
                out += "split_index: " + std::to_string(std::size_t(1) << (n - 1)) + "\n";
                out += "t_prev:\n" + matrix_grid(b.t_prev);
                out += "delta:\n" + matrix_grid(b.delta);
                out += "lower_left_is_zero: ";
                out += b.lower_left.is_zero() ? "true" : "false";
                out += "\ntau_block_equals_t_prev_plus_delta: ";
                out += (b.tau_block == b.t_prev + b.delta) ? "true" : "false";
                out += "\ntau_block_equals_transposed_quotient_operator: ";
                out += (b.tau_block == tm.mult_GL.transpose()) ? "true" : "false";
                out += "\n";
            }
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["n"] = n;
            o["mode"] = "M";
            o["basis"] = basis_json(basis);
            o["entries"] = matrix_json(tm.t);
            if (blocks && n >= 1) {
                TBlocks b = block_decompose(tm.t, n);
                ojson bj;
                bj["split_index"] = std::size_t(1) << (n - 1);
                bj["t_prev"] = matrix_json(b.t_prev);
                bj["delta"] = matrix_json(b.delta);
                bj["lower_left_is_zero"] = b.lower_left.is_zero();
                bj["tau_block_equals_t_prev_plus_delta"] = b.tau_block == b.t_prev + b.delta;
                bj["tau_block_equals_transposed_quotient_operator"] =
                    b.tau_block == tm.mult_GL.transpose();
                o["blocks"] = std::move(bj);
            }
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv:
            return matrix_csv(tm.t, basis);
    }
    return {};
}

std::string render_eigen_report(int n, bool kernel_at_1, bool timings, OutFormat fmt,
                                bool* pass_out) {
    ConjectureReport rep = conjecture_report(n);
    if (pass_out) *pass_out = rep.pass;

    std::vector<IntVector> kernel;
    if (kernel_at_1) {
        TMatrices tm = build_t_matrices(n);
        kernel = integer_kernel_basis(tm.t - IntMatrix::identity(tm.t.rows()));
    }

    switch (fmt) {
        case OutFormat::Paper: {
            std::string out = "eigen n=" + std::to_string(n) + "\n";
            out += "annihilates: ";
            out += rep.annihilates ? "true" : "false";
            out += '\n';
            for (const EigenCheck& c : rep.checks) {
                out += "eigenvalue " + std::to_string(c.eigenvalue) + ": multiplicity " +
                       std::to_string(c.multiplicity) + " expected " +
                       std::to_string(c.expected) + (c.ok ? " ok" : " MISMATCH") + "\n";
            }
            out += "multiplicity_sum: " + std::to_string(rep.multiplicity_sum) + "\n";
            if (kernel_at_1) {
                out += "kernel_at_1_dimension: " + std::to_string(kernel.size()) + "\n";
                for (const IntVector& v : kernel) {
                    out += "kernel_vector:";
                    for (const mpz_class& x : v) out += ' ' + x.get_str();
                    out += '\n';
                }
            }
            if (timings) {
                out += "build_seconds: " + std::to_string(rep.build_seconds) + "\n";
                out += "annihilation_seconds: " + std::to_string(rep.annihilation_seconds) + "\n";
                out += "multiplicity_seconds: " + std::to_string(rep.multiplicity_seconds) + "\n";
            }
            out += "pass: ";
            out += rep.pass ? "true" : "false";
            out += '\n';
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["n"] = n;
            o["annihilates"] = rep.annihilates;
            ojson checks = ojson::array();
            for (const EigenCheck& c : rep.checks) {
                ojson cj;
                cj["eigenvalue"] = c.eigenvalue;
                cj["multiplicity"] = c.multiplicity;
                cj["expected"] = c.expected;
                cj["ok"] = c.ok;
                checks.push_back(std::move(cj));
            }
            o["checks"] = std::move(checks);
            o["multiplicity_sum"] = rep.multiplicity_sum;
            if (kernel_at_1) {
                ojson kv = ojson::array();
                for (const IntVector& v : kernel) {
                    ojson row = ojson::array();
                    for (const mpz_class& x : v) row.push_back(json_int(x));
                    kv.push_back(std::move(row));
                }
                o["kernel_at_1"] = {{"dimension", kernel.size()}, {"basis", std::move(kv)}};
            }
            if (timings) {
                o["timings"] = {{"build_seconds", rep.build_seconds},
                                {"annihilation_seconds", rep.annihilation_seconds},
                                {"multiplicity_seconds", rep.multiplicity_seconds}};
            }
            o["pass"] = rep.pass;
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv: {
            std::string out = "eigenvalue,multiplicity,expected,ok\n";
            for (const EigenCheck& c : rep.checks)
                out += std::to_string(c.eigenvalue) + "," + std::to_string(c.multiplicity) +
                       "," + std::to_string(c.expected) + "," + (c.ok ? "true" : "false") + "\n";
            return out;
        }
    }
    return {};
}

std::string render_rank_profile(int n, int max_k, bool covectors, OutFormat fmt) {
    std::vector<std::size_t> profile = sym_rank_profile(n, max_k);
    std::vector<IntVector> null_basis;
    if (covectors) null_basis = left_null_covectors(n, max_k);

    switch (fmt) {
        case OutFormat::Paper: {
            std::string out = "rank profile n=" + std::to_string(n) +
                              " max_k=" + std::to_string(max_k) + "\n";
            for (std::size_t k = 0; k < profile.size(); ++k)
                out += "k=" + std::to_string(k) + " rank=" + std::to_string(profile[k]) + "\n";
            if (covectors) {
                out += "null_covectors: " + std::to_string(null_basis.size()) + "\n";
                for (const IntVector& v : null_basis) {
                    out += "covector:";
                    for (const mpz_class& x : v) out += ' ' + x.get_str();
                    out += '\n';
                }
            }
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["n"] = n;
            o["max_k"] = max_k;
            o["ranks"] = profile;
            if (covectors) {
                ojson cv = ojson::array();
                for (const IntVector& v : null_basis) {
                    ojson row = ojson::array();
                    for (const mpz_class& x : v) row.push_back(json_int(x));
                    cv.push_back(std::move(row));
                }
                o["null_covectors"] = std::move(cv);
            }
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv: {
            std::string out = "k,rank\n";
            for (std::size_t k = 0; k < profile.size(); ++k)
                out += std::to_string(k) + "," + std::to_string(profile[k]) + "\n";
            return out;
        }
    }
    return {};
}

std::string render_series_steinberg(int n, int order, OutFormat fmt) {
    RationalForm f = steinberg_form(n);
    PowerSeries s = expand(f, order);
    switch (fmt) {
        case OutFormat::Paper:
            return form_text(f) + series_text(s);
        case OutFormat::Json: {
            ojson o = form_json_fields(f);
            o["order"] = order;
            o["coefficients"] = series_json_fields(s);
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv:
            return series_csv(s);
    }
    return {};
}

std::string render_series_chi(int j, int order, OutFormat fmt) {
    PowerSeries s = chi_series(j, order);
    switch (fmt) {
        case OutFormat::Paper: {
            std::string out = series_text(s);
            out += "support:";
            for (std::size_t d = 0; d < s.coeff.size(); ++d)
                if (s.coeff[d] != 0) out += ' ' + std::to_string(d);
            out += '\n';
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["j"] = j;
            o["order"] = order;
            o["coefficients"] = series_json_fields(s);
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv:
            return series_csv(s);
    }
    return {};
}

std::string render_series_expand(const RationalForm& form, int order, OutFormat fmt) {
    PowerSeries s = expand(form, order);
    switch (fmt) {
        case OutFormat::Paper:
            return series_text(s);
        case OutFormat::Json: {
            ojson o = form_json_fields(form);
            o["order"] = order;
            o["coefficients"] = series_json_fields(s);
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv:
            return series_csv(s);
    }
    return {};
}

std::string render_series_pole_order(const RationalForm& form, OutFormat fmt) {
    return scalar_out("pole_order_at_one", pole_order_at_one(form), fmt);
}

std::string render_connectivity(const Parts& lambda, OutFormat fmt) {
    return scalar_out("connectivity", connectivity(Partition(lambda)), fmt);
}

std::string render_simple_dim(const Parts& lambda, int m, OutFormat fmt) {
    const std::size_t dim = jk_image_dim(lambda, m);
    switch (fmt) {
        case OutFormat::Paper:
            return std::to_string(dim) + "\n";
        case OutFormat::Json: {
            ojson o;
            o["lambda"] = lambda;
            o["m"] = m;
            o["image_dimension"] = dim;
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv:
            return "lambda,m,image_dimension\n" + csv_quote(parts_str(lambda)) + "," +
                   std::to_string(m) + "," + std::to_string(dim) + "\n";
    }
    return {};
}

std::string render_verify(const VerifyReport& rep, OutFormat fmt) {
    switch (fmt) {
        case OutFormat::Paper: {
            std::string out;
            for (const std::string& line : rep.lines) out += line + "\n";
            return out;
        }
        case OutFormat::Json: {
            ojson o;
            o["pass"] = rep.pass;
            o["lines"] = rep.lines;
            return o.dump(2) + "\n";
        }
        case OutFormat::Csv: {
            std::string out = "line\n";
            for (const std::string& line : rep.lines) out += csv_quote(line) + "\n";
            return out;
        }
    }
    return {};
}

}  // namespace kred
