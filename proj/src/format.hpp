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

#include "partition.hpp"
#include "series.hpp"
#include "tables.hpp"

namespace kred {

enum class OutFormat { Paper, Json, Csv };

/* "paper" | "json" | "csv" */
OutFormat parse_format(const std::string& name);

/* Every renderer produces byte-deterministic output for fixed inputs. */

std::string render_sym_rows(int n, int max_k, bool mod2, OutFormat fmt);

std::string render_tau(int n, OutFormat fmt);
std::string render_tmat(int n, bool blocks, OutFormat fmt);

/* pass_out (optional) receives the overall verdict. */
std::string render_eigen_report(int n, bool kernel_at_1, bool timings, OutFormat fmt,
                                bool* pass_out = nullptr);

std::string render_rank_profile(int n, int max_k, bool covectors, OutFormat fmt);

std::string render_series_steinberg(int n, int order, OutFormat fmt);
std::string render_series_chi(int j, int order, OutFormat fmt);
std::string render_series_expand(const RationalForm& form, int order, OutFormat fmt);
std::string render_series_pole_order(const RationalForm& form, OutFormat fmt);
std::string render_connectivity(const Parts& lambda, OutFormat fmt);

std::string render_simple_dim(const Parts& lambda, int m, OutFormat fmt);

std::string render_verify(const VerifyReport& rep, OutFormat fmt);

}  // namespace kred
