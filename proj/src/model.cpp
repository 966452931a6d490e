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

#include "gencode/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gencode {

SourceModel validate_and_sort(std::vector<double> raw_probs, int base) {
    if (base < 2) {
        throw InadmissibleInput("code alphabet size must be at least 2");
    }

    std::vector<double> probs;
    std::vector<int> index;
    probs.reserve(raw_probs.size());
    for (std::size_t i = 0; i < raw_probs.size(); ++i) {
        const double p = raw_probs[i];
        if (p == 0.0) {
            continue;  // exact zeros are simply absent symbols
        }
        if (!(p > 0.0)) {
            throw NonPositiveProbability("probability at index " +
                                         std::to_string(i) + " is not > 0");
        }
        probs.push_back(p);
        index.push_back(static_cast<int>(i));
    }
    if (probs.size() < 2) {
        throw AlphabetTooSmall("need at least 2 symbols with positive mass");
    }

    const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9) {
        throw SumNotOne("probabilities sum to " + std::to_string(sum));
    }
    for (double& p : probs) {
        p /= sum;
    }

    // stable sort keeps tied probabilities in original order
    std::vector<int> order(probs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return probs[a] > probs[b]; });

    SourceModel m;
    m.base = base;
    m.probs.resize(probs.size());
    m.perm.resize(probs.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        m.probs[i] = probs[order[i]];
        m.perm[i] = index[order[i]];
    }
    return m;
}

double entropy(const SourceModel& m) {
    const double ln_base = std::log(static_cast<double>(m.base));
    double h = 0.0;
    for (double p : m.probs) {
        h -= p * std::log(p);
    }
    return h / ln_base;
}

double kraft_sum(std::span<const double> lengths, int base) {
    const double ln_base = std::log(static_cast<double>(base));
    double s = 0.0;
    for (double l : lengths) {
        s += std::exp(-l * ln_base);
    }
    return s;
}

double kraft_sum(const LengthVector& l) { return kraft_sum(l.values, l.base); }

bool kraft_admissible(const LengthVector& l, double tol) {
    return kraft_sum(l) <= 1.0 + tol;
}

LengthVector shannon_lengths(const SourceModel& m) {
    const double ln_base = std::log(static_cast<double>(m.base));
    LengthVector l;
    l.base = m.base;
    l.values.reserve(m.probs.size());
    for (double p : m.probs) {
        l.values.push_back(-std::log(p) / ln_base);
    }
    return l;
}

double max_length(const LengthVector& l) {
    return *std::max_element(l.values.begin(), l.values.end());
}

double average_length(const LengthVector& l, const SourceModel& m) {
    if (l.size() != m.size()) {
        throw InadmissibleInput("length vector does not match model size");
    }
    double avg = 0.0;
    for (int i = 0; i < m.size(); ++i) {
        avg += l.values[i] * m.probs[i];
    }
    return avg;
}

}  // namespace gencode
