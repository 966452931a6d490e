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

#include "gencode/frequency.hpp"

#include <array>
#include <sstream>
#include <string>

namespace gencode {

namespace {

FrequencyReport from_dense_counts(std::span<const double> dense) {
    FrequencyReport r;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] == 0.0) {
            continue;
        }
        if (!(dense[i] > 0.0)) {
            throw NonPositiveProbability("count at symbol " +
                                         std::to_string(i) + " is negative");
        }
        r.symbols.push_back(static_cast<std::uint8_t>(i));
        r.counts.push_back(dense[i]);
        r.total += dense[i];
    }
    if (r.symbols.size() < 2) {
        throw AlphabetTooSmall("need at least 2 distinct symbols");
    }
    r.probs.reserve(r.counts.size());
    for (double c : r.counts) {
        r.probs.push_back(c / r.total);
    }
    return r;
}

}  // namespace

FrequencyReport byte_histogram(std::span<const std::uint8_t> data) {
    std::array<double, 256> dense{};
    for (std::uint8_t b : data) {
        dense[b] += 1.0;
    }
    return from_dense_counts(dense);
}

FrequencyReport parse_frequency_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<double> dense;
    double v;
    while (in >> v) {
        dense.push_back(v);
        if (dense.size() > 256) {
            throw InadmissibleInput("frequency file has more than 256 entries");
        }
    }
    if (!in.eof()) {
        throw InadmissibleInput("malformed frequency file");
    }
    return from_dense_counts(dense);
}

SourceModel to_model(const FrequencyReport& report, int base) {
    return validate_and_sort(report.probs, base);
}

std::uint8_t symbol_for_slot(const FrequencyReport& report,
                             const SourceModel& m, int i) {
    return report.symbols[m.perm[i]];
}

}  // namespace gencode
