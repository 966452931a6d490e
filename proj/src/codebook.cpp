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

#include "gencode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace gencode {

namespace {

constexpr int kMaxCodeLength = 63;

}  // namespace

LengthVector integer_lengths(const LengthVector& real) {
    if (kraft_sum(real) > 1.0 + 1e-9) {
        throw InadmissibleInput("real lengths violate the Kraft inequality");
    }
    LengthVector out;
    out.base = real.base;
    out.integral = true;
    out.values.reserve(real.values.size());
    for (double v : real.values) {
        if (v < -1e-12) {
            throw InadmissibleInput("negative codeword length");
        }
        out.values.push_back(std::max(1.0, std::ceil(v - 1e-9)));
    }
    // The epsilon guard can only push the sum past 1 when the input was
    // already at the boundary; refuse rather than redistribute.
    if (kraft_sum(out) > 1.0 + 1e-12) {
        throw InadmissibleInput("rounded lengths violate the Kraft inequality");
    }
    return out;
}

Codebook canonical_assign(std::span<const int> lengths,
                          std::span<const std::uint8_t> symbols, int base) {
    if (base != 2) {
        throw InadmissibleInput("canonical codebooks are binary only");
    }
    if (lengths.size() != symbols.size() || lengths.empty() ||
        lengths.size() > 256) {
        throw InadmissibleInput("bad code table shape");
    }

    // Kraft check in integers: sum of 2^(63-l) must not exceed 2^63.
    std::uint64_t acc = 0;
    for (int l : lengths) {
        if (l < 1 || l > kMaxCodeLength) {
            throw KraftViolation("code length " + std::to_string(l) +
                                 " out of range");
        }
        acc += std::uint64_t{1} << (kMaxCodeLength - l);
        if (acc > (std::uint64_t{1} << kMaxCodeLength)) {
            throw KraftViolation("code lengths exceed the Kraft budget");
        }
    }

    Codebook cb;
    cb.slot_of.fill(-1);
    cb.entries.resize(lengths.size());
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        cb.entries[i] = {symbols[i], static_cast<std::uint8_t>(lengths[i]), 0};
    }
    std::sort(cb.entries.begin(), cb.entries.end(),
              [](const Codebook::Entry& a, const Codebook::Entry& b) {
                  return std::tie(a.length, a.symbol) <
                         std::tie(b.length, b.symbol);
              });

    cb.max_length = cb.entries.back().length;
    cb.first_code.assign(cb.max_length + 1, 0);
    cb.first_entry.assign(cb.max_length + 1, 0);
    cb.count.assign(cb.max_length + 1, 0);

    std::uint64_t code = 0;
    int cur = cb.entries.front().length;
    for (std::size_t i = 0; i < cb.entries.size(); ++i) {
        Codebook::Entry& e = cb.entries[i];
        if (e.length > cur) {
            code <<= (e.length - cur);
            cur = e.length;
        }
        e.code = code++;
        if (cb.slot_of[e.symbol] != -1) {
            throw KraftViolation("duplicate symbol in code table");
        }
        cb.slot_of[e.symbol] = static_cast<std::int16_t>(i);
        if (cb.count[e.length]++ == 0) {
            cb.first_code[e.length] = e.code;
            cb.first_entry[e.length] = static_cast<std::int32_t>(i);
        }
    }
    return cb;
}

LengthVector huffman_baseline(const SourceModel& m) {
    if (m.base != 2) {
        throw InadmissibleInput("the Huffman baseline is binary only");
    }
    const int n = m.size();

    struct Node {
        double weight;
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * n - 1);

    using QueueItem = std::pair<double, int>;  // (weight, creation index)
    std::priority_queue<QueueItem, std::vector<QueueItem>,
                        std::greater<QueueItem>>
        queue;
    for (int i = 0; i < n; ++i) {
        nodes.push_back({m.probs[i]});
        queue.emplace(m.probs[i], i);
    }
    while (queue.size() > 1) {
        const auto [wa, a] = queue.top();
        queue.pop();
        const auto [wb, b] = queue.top();
        queue.pop();
        const int id = static_cast<int>(nodes.size());
        nodes.push_back({wa + wb, a, b});
        queue.emplace(wa + wb, id);
    }

    std::vector<int> depth(nodes.size(), 0);
    for (int i = static_cast<int>(nodes.size()) - 1; i >= n; --i) {
        depth[nodes[i].left] = depth[i] + 1;
        depth[nodes[i].right] = depth[i] + 1;
    }

    LengthVector l;
    l.base = 2;
    l.integral = true;
    l.values.resize(n);
    for (int i = 0; i < n; ++i) {
        l.values[i] = depth[i];
    }
    return l;
}

BitBuffer encode(const Codebook& cb, std::span<const std::uint8_t> symbols) {
    BitBuffer out;
    std::uint8_t cur = 0;
    int used = 0;
    for (std::uint8_t s : symbols) {
        const int slot = cb.slot_of[s];
        if (slot < 0) {
            throw UnknownSymbol("symbol " + std::to_string(int(s)) +
                                " is not in the codebook");
        }
        const Codebook::Entry& e = cb.entries[slot];
        for (int b = e.length - 1; b >= 0; --b) {
            cur = static_cast<std::uint8_t>((cur << 1) | ((e.code >> b) & 1));
            if (++used == 8) {
                out.bytes.push_back(cur);
                cur = 0;
                used = 0;
            }
        }
        out.bit_count += e.length;
    }
    if (used > 0) {
        out.bytes.push_back(static_cast<std::uint8_t>(cur << (8 - used)));
    }
    return out;
}

std::vector<std::uint8_t> decode(const Codebook& cb,
                                 std::span<const std::uint8_t> bytes,
                                 std::uint64_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(count);
    const std::uint64_t total_bits = std::uint64_t{8} * bytes.size();
    std::uint64_t pos = 0;
    std::uint64_t code = 0;
    int len = 0;
    while (out.size() < count) {
        if (pos == total_bits) {
            throw TruncatedStream("bitstream ended mid-symbol");
        }
        const int bit = (bytes[pos >> 3] >> (7 - (pos & 7))) & 1;
        ++pos;
        code = (code << 1) | static_cast<std::uint64_t>(bit);
        ++len;
        if (len > cb.max_length) {
            throw TruncatedStream("undecodable bit pattern");
        }
        if (cb.count[len] > 0 && code >= cb.first_code[len] &&
            code - cb.first_code[len] <
                static_cast<std::uint64_t>(cb.count[len])) {
            out.push_back(
                cb.entries[cb.first_entry[len] + (code - cb.first_code[len])]
                    .symbol);
            code = 0;
            len = 0;
        }
    }
    return out;
}

}  // namespace gencode
