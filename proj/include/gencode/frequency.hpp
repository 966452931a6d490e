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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gencode/model.hpp"

namespace gencode {

/// Symbol statistics for model building. Zero-count symbols are excluded;
/// symbols[i] is the byte value of slot i in counts/probs.
struct FrequencyReport {
    std::vector<std::uint8_t> symbols;
    std::vector<double> counts;
    double total = 0.0;
    std::vector<double> probs;
};

FrequencyReport byte_histogram(std::span<const std::uint8_t> data);

/// Parses a text frequency file: whitespace-separated non-negative
/// numbers, position = symbol id (at most 256 entries).
FrequencyReport parse_frequency_text(std::string_view text);

SourceModel to_model(const FrequencyReport& report, int base = 2);

/// Byte value of the model's sorted slot i.
std::uint8_t symbol_for_slot(const FrequencyReport& report,
                             const SourceModel& m, int i);

}  // namespace gencode
