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

#include "gencode/model.hpp"

namespace gencode {

// The four code-design criteria. All are convex combinations weighted by
// alpha in [0,1]; the exp_* pair additionally carries a sharpness
// parameter t in (-1, inf), where larger t moves the exponential mean
// toward the worst case and t -> 0 recovers the plain average.

/// alpha * max l(x) + (1-alpha) * E[l].
double payoff_max_avg(const LengthVector& l, const SourceModel& m,
                      double alpha);

/// alpha * max(l(x) + log_D p(x)) + (1-alpha) * (E[l] - H(p)).
double payoff_max_avg_redundancy(const LengthVector& l, const SourceModel& m,
                                 double alpha);

/// (alpha/t) * log_D E[D^(t l)] + (1-alpha) * E[l]; at t = 0 the first
/// term degenerates to E[l].
double payoff_exp_avg(const LengthVector& l, const SourceModel& m,
                      double alpha, double t);

/// Same exponential mean applied to pointwise redundancy l(x)+log_D p(x),
/// with average redundancy in the linear term.
double payoff_exp_avg_redundancy(const LengthVector& l, const SourceModel& m,
                                 double alpha, double t);

namespace detail {
void check_alpha(double alpha);
void check_t(double t);
}  // namespace detail

}  // namespace gencode
