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

#include <span>
#include <vector>

#include "gencode/errors.hpp"

namespace gencode {

/// A validated source distribution. Probabilities are kept in descending
/// order; perm[i] is the position of sorted slot i in the caller's
/// original vector (zero entries are dropped but keep their index).
struct SourceModel {
    std::vector<double> probs;
    std::vector<int> perm;
    int base = 2;  // code alphabet size D

    int size() const { return static_cast<int>(probs.size()); }
};

/// Builds a SourceModel from raw probabilities (or any positive weights
/// whose sum is within 1e-9 of one). Exact zeros are dropped, negatives
/// rejected, ties keep their original relative order.
SourceModel validate_and_sort(std::vector<double> raw_probs, int base);

/// Entropy in base-D digits.
double entropy(const SourceModel& m);

/// Codeword lengths aligned with a model's sorted slots. `integral` marks
/// vectors produced by integer rounding.
struct LengthVector {
    std::vector<double> values;
    int base = 2;
    bool integral = false;

    int size() const { return static_cast<int>(values.size()); }
};

double kraft_sum(std::span<const double> lengths, int base);
double kraft_sum(const LengthVector& l);

/// True when the Kraft sum does not exceed 1 (within tol).
bool kraft_admissible(const LengthVector& l, double tol = 1e-9);

/// Real-valued lengths -log_D p(x); the average-length optimum.
LengthVector shannon_lengths(const SourceModel& m);

double max_length(const LengthVector& l);
double average_length(const LengthVector& l, const SourceModel& m);

}  // namespace gencode
