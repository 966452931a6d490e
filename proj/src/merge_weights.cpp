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

#include "gencode/merge_weights.hpp"

#include <cmath>
#include <numeric>

#include "gencode/payoffs.hpp"

namespace gencode {

int BreakpointTable::segment(double alpha) const {
    int k = 0;
    for (int j = 1; j < size(); ++j) {
        if (alphas[j] <= alpha + kAlphaTol) {
            k = j;
        }
    }
    return k;
}

BreakpointTable breakpoints(const SourceModel& m) {
    const int n = m.size();
    const auto& p = m.probs;

    // head[i] = p[0] + ... + p[i-1]
    std::vector<double> head(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        head[i + 1] = head[i] + p[i];
    }

    BreakpointTable t;
    t.alphas.assign(n, 0.0);
    t.slopes.assign(n, 0.0);
    t.entry_weights.assign(n, 0.0);
    t.tail_sums.assign(n, 0.0);

    double tail = 0.0;
    for (int k = 0; k < n; ++k) {
        tail += p[n - 1 - k];
        t.tail_sums[k] = tail;
        t.slopes[k] = (k == n - 1) ? 0.0 : head[n - 1 - k] / (k + 1);
        t.entry_weights[k] = (1.0 - t.alphas[k]) * p[n - 1 - k];
        if (k < n - 1) {
            // The merged-class weight grows with slope slopes[k]; the next
            // symbol's weight (1-alpha) p shrinks. alpha_{k+1} is where
            // they intersect. Equal adjacent probabilities give a
            // zero-length segment; the denominator is positive as long as
            // any symbol remains outside the class.
            const double num = p[n - 2 - k] - p[n - 1 - k];
            const double den = t.slopes[k] + p[n - 2 - k];
            t.alphas[k + 1] = t.alphas[k] + (1.0 - t.alphas[k]) * num / den;
        }
    }
    return t;
}

MergedClass merged_class(const SourceModel& m, const BreakpointTable& table,
                         double alpha) {
    detail::check_alpha(alpha);
    MergedClass c;
    c.k = table.segment(alpha);
    c.members.resize(c.k + 1);
    std::iota(c.members.begin(), c.members.end(), m.size() - 1 - c.k);
    return c;
}

MergedClass merged_class(const SourceModel& m, double alpha) {
    return merged_class(m, breakpoints(m), alpha);
}

WeightProfile weights(const SourceModel& m, const BreakpointTable& table,
                      double alpha) {
    detail::check_alpha(alpha);
    const int n = m.size();
    const int k = table.segment(alpha);

    WeightProfile w;
    w.alpha = alpha;
    w.k = k;
    w.weights.resize(n);
    for (int i = 0; i < n - 1 - k; ++i) {
        w.weights[i] = (1.0 - alpha) * m.probs[i];
    }
    const double merged =
        table.entry_weights[k] + (alpha - table.alphas[k]) * table.slopes[k];
    for (int i = n - 1 - k; i < n; ++i) {
        w.weights[i] = merged;
    }
    w.merged.resize(k + 1);
    std::iota(w.merged.begin(), w.merged.end(), n - 1 - k);
    return w;
}

WeightProfile weights(const SourceModel& m, double alpha) {
    return weights(m, breakpoints(m), alpha);
}

LengthVector optimal_lengths_p1(const SourceModel& m,
                                const BreakpointTable& table, double alpha) {
    detail::check_alpha(alpha);
    const int n = m.size();
    const int k = table.segment(alpha);
    const double ln_base = std::log(static_cast<double>(m.base));

    LengthVector l;
    l.base = m.base;
    l.values.resize(n);
    for (int i = 0; i < n - 1 - k; ++i) {
        l.values[i] = -std::log((1.0 - alpha) * m.probs[i]) / ln_base;
    }
    const double merged =
        (alpha + (1.0 - alpha) * table.tail_sums[k]) / (k + 1);
    const double merged_len = -std::log(merged) / ln_base;
    for (int i = n - 1 - k; i < n; ++i) {
        l.values[i] = merged_len;
    }
    return l;
}

LengthVector optimal_lengths_p1(const SourceModel& m, double alpha) {
    return optimal_lengths_p1(m, breakpoints(m), alpha);
}

}  // namespace gencode
