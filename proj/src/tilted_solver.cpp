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

#include "gencode/tilted_solver.hpp"

#include <algorithm>
#include <cmath>

#include "gencode/merge_weights.hpp"
#include "gencode/payoffs.hpp"

namespace gencode {

namespace {

constexpr int kMaxIterations = 100000;
constexpr int kDampingRetries = 4;
constexpr double kResidualTol = 5e-13;

// Tilted distribution of q: softmax of c*ln p - t*ln q, exponent-shifted
// so large t cannot overflow. c = 1 for the length payoff, t+1 for the
// redundancy payoff.
void tilt(std::span<const double> ln_p_scaled, std::span<const double> q,
          double t, std::span<double> out) {
    const std::size_t n = q.size();
    double shift = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = ln_p_scaled[i] - t * std::log(q[i]);
        shift = std::max(shift, out[i]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(out[i] - shift);
        sum += out[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] /= sum;
    }
}

TiltedSolution as_solution(const SourceModel& m, std::vector<double> q,
                           std::vector<double> nu, double alpha, double t,
                           int iterations, double residual) {
    const double ln_base = std::log(static_cast<double>(m.base));
    TiltedSolution s;
    s.lengths.base = m.base;
    s.lengths.values.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        s.lengths.values[i] = -std::log(q[i]) / ln_base;
    }
    s.tilted = std::move(nu);
    s.alpha = alpha;
    s.t = t;
    s.iterations = iterations;
    s.residual = residual;
    return s;
}

TiltedSolution solve_tilted(const SourceModel& m, double alpha, double t,
                            bool redundancy) {
    detail::check_alpha(alpha);
    detail::check_t(t);
    const int n = m.size();
    const auto& p = m.probs;

    const double tilt_exponent = redundancy ? t + 1.0 : 1.0;
    std::vector<double> ln_p_scaled(n);
    for (int i = 0; i < n; ++i) {
        ln_p_scaled[i] = tilt_exponent * std::log(p[i]);
    }

    if (alpha == 0.0 || t == 0.0) {
        // the tilt drops out; the optimum is the Shannon code
        std::vector<double> nu(n);
        tilt(ln_p_scaled, p, t, nu);
        TiltedSolution s = as_solution(m, p, std::move(nu), alpha, t, 0, 0.0);
        s.lengths = shannon_lengths(m);
        return s;
    }

    // The undamped map q -> alpha*nu(q) + (1-alpha)*p has local Jacobian
    // eigenvalues of magnitude up to ~t on the simplex, so the step must
    // shrink like 1/(1+t) for large t; halve further if it still fails.
    const double gamma0 = std::min(0.5, 1.0 / (1.0 + std::max(t, 0.0)));

    std::vector<double> q(n), nu(n), target(n);
    int total_iterations = 0;
    for (int attempt = 0; attempt <= kDampingRetries; ++attempt) {
        const double gamma = gamma0 / static_cast<double>(1 << attempt);
        q.assign(p.begin(), p.end());
        for (int iter = 1; iter <= kMaxIterations; ++iter) {
            ++total_iterations;
            tilt(ln_p_scaled, q, t, nu);
            double defect = 0.0;
            for (int i = 0; i < n; ++i) {
                target[i] = alpha * nu[i] + (1.0 - alpha) * p[i];
                defect = std::max(defect, std::abs(q[i] - target[i]));
            }
            if (defect <= kResidualTol) {
                return as_solution(m, q, std::move(nu), alpha, t,
                                   total_iterations, defect);
            }
            for (int i = 0; i < n; ++i) {
                q[i] += gamma * (target[i] - q[i]);
            }
        }
    }
    throw NoConvergence("tilted fixed point did not converge (alpha=" +
                        std::to_string(alpha) + ", t=" + std::to_string(t) +
                        ")");
}

}  // namespace

TiltedSolution solve_lengths_p2(const SourceModel& m, double alpha, double t) {
    return solve_tilted(m, alpha, t, false);
}

TiltedSolution solve_redundancy_p2(const SourceModel& m, double alpha,
                                   double t) {
    return solve_tilted(m, alpha, t, true);
}

LengthVector closed_form_alpha1(const SourceModel& m, double t) {
    detail::check_t(t);
    const double ln_base = std::log(static_cast<double>(m.base));
    const double inv = 1.0 / (1.0 + t);

    double z = 0.0;
    for (double p : m.probs) {
        z += std::exp(inv * std::log(p));
    }
    const double log_z = std::log(z) / ln_base;

    LengthVector l;
    l.base = m.base;
    l.values.reserve(m.probs.size());
    for (double p : m.probs) {
        l.values.push_back(-inv * std::log(p) / ln_base + log_z);
    }
    return l;
}

LimitComparison solve_p1_via_limit(const SourceModel& m, double alpha,
                                   double t_max) {
    if (!(t_max >= 100.0)) {
        throw InadmissibleInput("t_max must be at least 100");
    }
    TiltedSolution s = solve_lengths_p2(m, alpha, t_max);
    const LengthVector reference = optimal_lengths_p1(m, alpha);

    LimitComparison r;
    r.lengths = std::move(s.lengths);
    r.sup_gap = 0.0;
    for (int i = 0; i < m.size(); ++i) {
        r.sup_gap = std::max(
            r.sup_gap, std::abs(r.lengths.values[i] - reference.values[i]));
    }
    return r;
}

}  // namespace gencode
