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

#include "gencode/container.hpp"

#include <bit>
#include <cstring>

namespace gencode {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t get_u64(std::span<const std::uint8_t> data, std::size_t pos) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(data[pos + i]) << (8 * i);
    }
    return v;
}

void need(std::span<const std::uint8_t> data, std::size_t pos,
          std::size_t bytes) {
    if (data.size() < pos + bytes) {
        throw TruncatedStream("container header is truncated");
    }
}

}  // namespace

void append_header(std::vector<std::uint8_t>& out, const ContainerHeader& h) {
    out.insert(out.end(), std::begin(kContainerMagic),
               std::end(kContainerMagic));
    out.push_back(h.version);
    out.push_back(h.flags);
    put_u64(out, std::bit_cast<std::uint64_t>(h.alpha));
    put_u64(out, std::bit_cast<std::uint64_t>(h.t));
    put_u64(out, h.symbol_count);
    put_u16(out, static_cast<std::uint16_t>(h.table.size()));
    for (const auto& [symbol, length] : h.table) {
        out.push_back(symbol);
        out.push_back(length);
    }
}

ContainerHeader parse_header(std::span<const std::uint8_t> data,
                             std::size_t& pos) {
    need(data, pos, 4 + 1 + 1 + 8 + 8 + 8 + 2);
    if (std::memcmp(data.data() + pos, kContainerMagic, 4) != 0) {
        throw BadMagic("not a gencode container");
    }
    pos += 4;

    ContainerHeader h;
    h.version = data[pos++];
    if (h.version != kContainerVersion) {
        throw UnsupportedVersion("container version " +
                                 std::to_string(int(h.version)));
    }
    h.flags = data[pos++];
    h.alpha = std::bit_cast<double>(get_u64(data, pos));
    pos += 8;
    h.t = std::bit_cast<double>(get_u64(data, pos));
    pos += 8;
    h.symbol_count = get_u64(data, pos);
    pos += 8;
    const std::uint16_t table_size =
        static_cast<std::uint16_t>(data[pos] | (data[pos + 1] << 8));
    pos += 2;
    if (table_size == 0 || table_size > 256) {
        throw KraftViolation("container code table has bad size " +
                             std::to_string(table_size));
    }
    need(data, pos, std::size_t{2} * table_size);
    h.table.reserve(table_size);
    for (int i = 0; i < table_size; ++i) {
        h.table.emplace_back(data[pos], data[pos + 1]);
        pos += 2;
    }
    return h;
}

}  // namespace gencode
