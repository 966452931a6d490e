/*
Copyright 2026 the gencode authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <optional>
#include <string>

#include "gencode/codebook.hpp"
#include "gencode/container.hpp"
#include "gencode/frequency.hpp"
#include "gencode/merge_weights.hpp"
#include "gencode/tilted_solver.hpp"

namespace gencode {

enum class PayoffKind {
    max_avg = 0,
    max_avg_redundancy = 1,
    exp_avg = 2,
    exp_avg_redundancy = 3,
};

PayoffKind parse_payoff(const std::string& name);
const char* payoff_name(PayoffKind kind);

/// A complete code design for one (payoff, alpha, t) choice: model,
/// breakpoints, design weights (the implied codeword probabilities),
/// real and rounded lengths, and the canonical codebook.
struct CodeDesign {
    FrequencyReport source;
    SourceModel model;
    BreakpointTable table;
    PayoffKind payoff = PayoffKind::max_avg;
    double alpha = 0.0;
    std::optional<double> t;
    std::vector<double> design_weights;
    LengthVector real_lengths;
    LengthVector int_lengths;
    std::vector<std::uint8_t> slot_symbols;  // byte value per sorted slot
    Codebook codebook;
};

CodeDesign make_design(const FrequencyReport& report, PayoffKind payoff,
                       double alpha, std::optional<double> t);

/// Key-value design document with stable field order; deterministic for
/// identical inputs.
std::string render_design_document(const CodeDesign& d);

/// CSV sweep over alpha (and optionally t). For the max/average payoff
/// the exact breakpoints are inserted so every kink appears as a row.
/// Columns: [t,]alpha,w1..wn,max_length,avg_length.
std::string render_sweep_csv(const FrequencyReport& report, PayoffKind payoff,
                             double step, const std::vector<double>& ts);

/// CSV comparison of designs at the given alphas (and t values for the
/// exponential payoff) against Shannon and Huffman baselines.
std::string render_compare_report(const FrequencyReport& report,
                                  const std::vector<double>& alphas,
                                  const std::vector<double>& ts);

std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> data,
                                         PayoffKind payoff, double alpha,
                                         std::optional<double> t);

std::vector<std::uint8_t> decompress_bytes(
    std::span<const std::uint8_t> container);

}  // namespace gencode
