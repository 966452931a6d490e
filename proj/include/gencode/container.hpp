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
#include <utility>
#include <vector>

#include "gencode/errors.hpp"

namespace gencode {

// Compressed-file layout, all multi-byte fields little-endian:
//   magic "GCC1" | version u8 | flags u8 | alpha f64 | t f64 (NaN when
//   the design has no t) | symbol count u64 | table size u16 |
//   (byte value u8, code length u8) per distinct symbol | payload bits.

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr char kContainerMagic[4] = {'G', 'C', 'C', '1'};

struct ContainerHeader {
    std::uint8_t version = kContainerVersion;
    std::uint8_t flags = 0;
    double alpha = 0.0;
    double t = 0.0;
    std::uint64_t symbol_count = 0;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> table;
};

void append_header(std::vector<std::uint8_t>& out, const ContainerHeader& h);

/// Parses a header starting at pos, advancing pos past it. Field bytes
/// round-trip exactly (doubles are moved bitwise).
ContainerHeader parse_header(std::span<const std::uint8_t> data,
                             std::size_t& pos);

}  // namespace gencode
