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

// Solver for the exponential-mean tradeoffs. The optimum satisfies the
// fixed point
//     D^(-l(x)) = alpha * nu(x) + (1-alpha) * p(x),
// where nu is the tilted distribution nu(x) proportional to
// p(x) D^(t l(x)) (and p^(t+1)(x) D^(t l(x)) for the redundancy
// variant). Solved by damped iteration on q(x) = D^(-l(x)).

/// A converged fixed point. residual is the final sup-norm defect
/// max_x |q(x) - alpha*tilted(x) - (1-alpha)*p(x)|.
struct TiltedSolution {
    LengthVector lengths;
    std::vector<double> tilted;
    double alpha = 0.0;
    double t = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// Optimal real-valued lengths for the exponential-length tradeoff.
/// alpha = 0 and t = 0 return the Shannon lengths exactly.
TiltedSolution solve_lengths_p2(const SourceModel& m, double alpha, double t);

/// Redundancy variant: the tilt carries p^(t+1) instead of p. The fixed
/// point from q0 = p is q = p itself (the tilt of p reproduces p), so the
/// optimal real-valued code is the Shannon code for every alpha and t.
TiltedSolution solve_redundancy_p2(const SourceModel& m, double alpha,
                                   double t);

/// Closed form at alpha = 1:
/// l(x) = -(1/(1+t)) log_D p(x) + log_D sum_y p(y)^(1/(1+t)).
LengthVector closed_form_alpha1(const SourceModel& m, double t);

/// Large-t solve plus its sup-norm distance from the max/average engine;
/// a validation aid, not a production path.
struct LimitComparison {
    LengthVector lengths;
    double sup_gap = 0.0;
};

LimitComparison solve_p1_via_limit(const SourceModel& m, double alpha,
                                   double t_max);

}  // namespace gencode
