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

#include <vector>

#include "gencode/model.hpp"

namespace gencode {

// Solver for the max/average tradeoff. As alpha grows from 0 the lowest
// weights coalesce one by one into a merged class sharing the common
// minimum weight; between consecutive merge points every weight is affine
// in alpha. Optimal real-valued lengths are -log_D of the weights.

/// Absolute tolerance when locating alpha among breakpoints; exact hits
/// go to the higher segment.
inline constexpr double kAlphaTol = 1e-12;

/// Merge points alpha_0 = 0 <= alpha_1 <= ... <= alpha_{n-1} < 1 and the
/// per-segment data needed to evaluate weights in O(n). Immutable once
/// built; safe to share across threads.
struct BreakpointTable {
    std::vector<double> alphas;
    /// Growth rate of the merged-class weight on segment k:
    /// (sum of probabilities outside the class) / |class|.
    std::vector<double> slopes;
    /// Merged-class weight at alpha_k (the entering symbol's weight).
    std::vector<double> entry_weights;
    /// Sum of the k+1 smallest probabilities.
    std::vector<double> tail_sums;

    int size() const { return static_cast<int>(alphas.size()); }

    /// Largest k with alphas[k] <= alpha + kAlphaTol.
    int segment(double alpha) const;
};

BreakpointTable breakpoints(const SourceModel& m);

/// Segment index k and the sorted-slot indices of the k+1 merged symbols.
struct MergedClass {
    int k = 0;
    std::vector<int> members;
};

MergedClass merged_class(const SourceModel& m, const BreakpointTable& table,
                         double alpha);
MergedClass merged_class(const SourceModel& m, double alpha);

/// The weight vector at alpha, evaluated from the segment's entry weight
/// and slope.
struct WeightProfile {
    std::vector<double> weights;
    int k = 0;
    std::vector<int> merged;
    double alpha = 0.0;
};

WeightProfile weights(const SourceModel& m, const BreakpointTable& table,
                      double alpha);
WeightProfile weights(const SourceModel& m, double alpha);

/// Optimal real-valued lengths for the max/average tradeoff, computed
/// directly: -log_D((1-alpha) p(x)) off the merged class and
/// -log_D((alpha + (1-alpha) tail) / |class|) on it.
LengthVector optimal_lengths_p1(const SourceModel& m,
                                const BreakpointTable& table, double alpha);
LengthVector optimal_lengths_p1(const SourceModel& m, double alpha);

}  // namespace gencode
