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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gencode/model.hpp"

namespace gencode {

/// Ceiling rounding of admissible real lengths, with a 1e-9 guard so
/// lengths that are integral up to noise stay put. Output lengths are at
/// least 1 and remain Kraft-admissible.
LengthVector integer_lengths(const LengthVector& real);

/// Canonical binary prefix code. Entries are held in canonical order
/// (sorted by length, then symbol id); codes of equal length are
/// consecutive integers and shorter codes lexicographically precede
/// longer ones.
struct Codebook {
    struct Entry {
        std::uint8_t symbol;
        std::uint8_t length;
        std::uint64_t code;  // value of the MSB-first bit pattern
    };

    std::vector<Entry> entries;
    int max_length = 0;
    std::array<std::int16_t, 256> slot_of{};  // symbol -> entry index, -1 absent

    // per-length decode tables (index 0 unused)
    std::vector<std::uint64_t> first_code;
    std::vector<std::int32_t> first_entry;
    std::vector<std::int32_t> count;
};

/// Builds the canonical code for parallel arrays of integer lengths and
/// symbol ids. Only base 2 is supported for the codec path.
Codebook canonical_assign(std::span<const int> lengths,
                          std::span<const std::uint8_t> symbols, int base = 2);

/// Integer-optimal average-length baseline (binary). Ties merge the two
/// lowest-weight nodes, preferring earlier-created ones; leaves are
/// created in sorted-model order, internal nodes after all leaves.
/// Lengths are returned in sorted-model order.
LengthVector huffman_baseline(const SourceModel& m);

/// MSB-first bit buffer; the final partial byte is zero-padded.
struct BitBuffer {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_count = 0;
};

BitBuffer encode(const Codebook& cb, std::span<const std::uint8_t> symbols);

/// Decodes exactly `count` symbols; trailing padding bits are ignored.
std::vector<std::uint8_t> decode(const Codebook& cb,
                                 std::span<const std::uint8_t> bytes,
                                 std::uint64_t count);

}  // namespace gencode
