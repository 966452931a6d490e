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

#include "gencode/design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gencode/payoffs.hpp"

namespace gencode {

namespace {

// Stand-in t when approximating the max-redundancy criterion by its
// sharp-exponential counterpart.
constexpr double kLargeT = 1000.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string bit_string(const Codebook::Entry& e) {
    std::string s(e.length, '0');
    for (int b = 0; b < e.length; ++b) {
        if ((e.code >> (e.length - 1 - b)) & 1) {
            s[b] = '1';
        }
    }
    return s;
}

std::vector<double> implied_weights(const LengthVector& l) {
    const double ln_base = std::log(static_cast<double>(l.base));
    std::vector<double> w(l.values.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::exp(-l.values[i] * ln_base);
    }
    return w;
}

LengthVector design_lengths(const SourceModel& model,
                            const BreakpointTable& table, PayoffKind payoff,
                            double alpha, std::optional<double> t) {
    switch (payoff) {
        case PayoffKind::max_avg:
            return optimal_lengths_p1(model, table, alpha);
        case PayoffKind::max_avg_redundancy:
            // no exact merging solution for this criterion; use the
            // sharp-exponential proxy, whose fixed point is the Shannon code
            return solve_redundancy_p2(model, alpha, kLargeT).lengths;
        case PayoffKind::exp_avg:
            if (!t) {
                throw InadmissibleInput("payoff exp-avg requires --t");
            }
            return solve_lengths_p2(model, alpha, *t).lengths;
        case PayoffKind::exp_avg_redundancy:
            if (!t) {
                throw InadmissibleInput("payoff exp-avg-red requires --t");
            }
            return solve_redundancy_p2(model, alpha, *t).lengths;
    }
    throw InadmissibleInput("unknown payoff");
}

std::vector<double> sweep_alphas(const BreakpointTable& table, double step,
                                 bool include_breakpoints) {
    std::vector<double> grid;
    for (double a = 0.0; a < 1.0; a += step) {
        grid.push_back(a);
    }
    grid.push_back(1.0);
    if (include_breakpoints) {
        for (int k = 1; k < table.size(); ++k) {
            grid.push_back(table.alphas[k]);
        }
    }
    std::sort(grid.begin(), grid.end());
    std::vector<double> out;
    for (double a : grid) {
        if (out.empty() || a - out.back() > 1e-14) {
            out.push_back(a);
        }
    }
    return out;
}

void append_metrics_row(std::ostringstream& csv, const std::string& label,
                        const std::string& alpha, const std::string& t,
                        const LengthVector& l, const SourceModel& m,
                        double h) {
    const double ln_base = std::log(static_cast<double>(m.base));
    double max_red = -1e300;
    for (int i = 0; i < m.size(); ++i) {
        max_red = std::max(max_red,
                           l.values[i] + std::log(m.probs[i]) / ln_base);
    }
    csv << label << ',' << alpha << ',' << t << ',' << fmt(max_length(l))
        << ',' << fmt(average_length(l, m)) << ',' << fmt(max_red) << ','
        << fmt(average_length(l, m) - h) << ',';
    for (int i = 0; i < l.size(); ++i) {
        csv << (i ? " " : "") << fmt(l.values[i]);
    }
    csv << '\n';
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

PayoffKind parse_payoff(const std::string& name) {
    if (name == "max-avg") return PayoffKind::max_avg;
    if (name == "max-avg-red") return PayoffKind::max_avg_redundancy;
    if (name == "exp-avg") return PayoffKind::exp_avg;
    if (name == "exp-avg-red") return PayoffKind::exp_avg_redundancy;
    throw InadmissibleInput("unknown payoff '" + name + "'");
}

const char* payoff_name(PayoffKind kind) {
    switch (kind) {
        case PayoffKind::max_avg: return "max-avg";
        case PayoffKind::max_avg_redundancy: return "max-avg-red";
        case PayoffKind::exp_avg: return "exp-avg";
        case PayoffKind::exp_avg_redundancy: return "exp-avg-red";
    }
    return "?";
}

CodeDesign make_design(const FrequencyReport& report, PayoffKind payoff,
                       double alpha, std::optional<double> t) {
    CodeDesign d;
    d.source = report;
    d.model = to_model(report);
    d.table = breakpoints(d.model);
    d.payoff = payoff;
    d.alpha = alpha;
    d.t = t;

    d.real_lengths = design_lengths(d.model, d.table, payoff, alpha, t);
    d.design_weights = (payoff == PayoffKind::max_avg)
                           ? weights(d.model, d.table, alpha).weights
                           : implied_weights(d.real_lengths);
    d.int_lengths = integer_lengths(d.real_lengths);

    d.slot_symbols.resize(d.model.size());
    std::vector<int> int_values(d.model.size());
    for (int i = 0; i < d.model.size(); ++i) {
        d.slot_symbols[i] = symbol_for_slot(report, d.model, i);
        int_values[i] = static_cast<int>(d.int_lengths.values[i]);
    }
    d.codebook = canonical_assign(int_values, d.slot_symbols);
    return d;
}

std::string render_design_document(const CodeDesign& d) {
    std::ostringstream out;
    const double h = entropy(d.model);
    const double t_eval = d.t.value_or(1.0);

    out << "# gencode code design\n";
    out << "payoff = " << payoff_name(d.payoff) << '\n';
    out << "alpha = " << fmt(d.alpha) << '\n';
    out << "t = " << (d.t ? fmt(*d.t) : "-") << '\n';
    out << "base = " << d.model.base << '\n';
    out << "symbols = " << d.model.size() << '\n';
    out << "entropy = " << fmt(h) << '\n';

    out << "\n[probabilities]\n";
    for (int i = 0; i < d.model.size(); ++i) {
        out << "slot=" << i + 1 << " symbol=" << int(d.slot_symbols[i])
            << " p=" << fmt(d.model.probs[i]) << '\n';
    }

    out << "\n[breakpoints]\n";
    for (int k = 0; k < d.table.size(); ++k) {
        out << "k=" << k << " alpha=" << fmt(d.table.alphas[k])
            << " slope=" << fmt(d.table.slopes[k]) << '\n';
    }

    out << "\n[weights]\n";
    for (int i = 0; i < d.model.size(); ++i) {
        out << "slot=" << i + 1 << " symbol=" << int(d.slot_symbols[i])
            << " w=" << fmt(d.design_weights[i]) << '\n';
    }

    out << "\n[lengths]\n";
    for (int i = 0; i < d.model.size(); ++i) {
        const auto& e =
            d.codebook.entries[d.codebook.slot_of[d.slot_symbols[i]]];
        out << "slot=" << i + 1 << " symbol=" << int(d.slot_symbols[i])
            << " real=" << fmt(d.real_lengths.values[i])
            << " integer=" << int(d.int_lengths.values[i])
            << " code=" << bit_string(e) << '\n';
    }

    for (int pass = 0; pass < 2; ++pass) {
        const LengthVector& l = pass == 0 ? d.real_lengths : d.int_lengths;
        out << (pass == 0 ? "\n[payoffs_real]\n" : "\n[payoffs_integer]\n");
        out << "max_avg = " << fmt(payoff_max_avg(l, d.model, d.alpha))
            << '\n';
        out << "max_avg_redundancy = "
            << fmt(payoff_max_avg_redundancy(l, d.model, d.alpha)) << '\n';
        out << "exp_avg(t=" << fmt(t_eval) << ") = "
            << fmt(payoff_exp_avg(l, d.model, d.alpha, t_eval)) << '\n';
        out << "exp_avg_redundancy(t=" << fmt(t_eval) << ") = "
            << fmt(payoff_exp_avg_redundancy(l, d.model, d.alpha, t_eval))
            << '\n';
    }
    return out.str();
}

std::string render_sweep_csv(const FrequencyReport& report, PayoffKind payoff,
                             double step, const std::vector<double>& ts) {
    if (!(step > 0.0 && step <= 0.5)) {
        throw InadmissibleInput("sweep step must lie in (0, 0.5]");
    }
    const SourceModel model = to_model(report);
    const BreakpointTable table = breakpoints(model);
    const int n = model.size();

    const bool exponential = payoff == PayoffKind::exp_avg ||
                             payoff == PayoffKind::exp_avg_redundancy;
    if (exponential && ts.empty()) {
        throw InadmissibleInput("exponential payoff sweeps require --t");
    }

    const std::vector<double> alphas =
        sweep_alphas(table, step, payoff == PayoffKind::max_avg);

    std::ostringstream csv;
    if (exponential) {
        csv << "t,";
    }
    csv << "alpha";
    for (int i = 1; i <= n; ++i) {
        csv << ",w" << i;
    }
    csv << ",max_length,avg_length\n";

    auto emit = [&](const std::string& t_cell, double alpha,
                    std::span<const double> w, const LengthVector& l) {
        if (exponential) {
            csv << t_cell << ',';
        }
        csv << fmt(alpha);
        for (double x : w) {
            csv << ',' << fmt(x);
        }
        csv << ',' << fmt(max_length(l)) << ','
            << fmt(average_length(l, model)) << '\n';
    };

    if (!exponential) {
        for (double alpha : alphas) {
            const LengthVector l =
                design_lengths(model, table, payoff, alpha, std::nullopt);
            const std::vector<double> w =
                payoff == PayoffKind::max_avg
                    ? weights(model, table, alpha).weights
                    : implied_weights(l);
            emit("", alpha, w, l);
        }
    } else {
        for (double t : sorted_unique(ts)) {
            for (double alpha : alphas) {
                const LengthVector l =
                    design_lengths(model, table, payoff, alpha, t);
                emit(fmt(t), alpha, implied_weights(l), l);
            }
        }
    }
    return csv.str();
}

std::string render_compare_report(const FrequencyReport& report,
                                  const std::vector<double>& alphas,
                                  const std::vector<double>& ts) {
    const SourceModel model = to_model(report);
    const BreakpointTable table = breakpoints(model);
    const double h = entropy(model);

    std::ostringstream csv;
    csv << "design,alpha,t,max_length,avg_length,max_redundancy,"
           "avg_redundancy,lengths\n";
    for (double alpha : sorted_unique(alphas)) {
        append_metrics_row(csv, "max-avg", fmt(alpha), "-",
                           optimal_lengths_p1(model, table, alpha), model, h);
    }
    for (double alpha : sorted_unique(alphas)) {
        for (double t : sorted_unique(ts)) {
            append_metrics_row(csv, "exp-avg", fmt(alpha), fmt(t),
                               solve_lengths_p2(model, alpha, t).lengths,
                               model, h);
        }
    }
    append_metrics_row(csv, "shannon", "-", "-", shannon_lengths(model),
                       model, h);
    append_metrics_row(csv, "huffman", "-", "-", huffman_baseline(model),
                       model, h);
    return csv.str();
}

std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> data,
                                         PayoffKind payoff, double alpha,
                                         std::optional<double> t) {
    if (data.empty()) {
        throw InadmissibleInput("refusing to compress an empty input");
    }
    const CodeDesign d = make_design(byte_histogram(data), payoff, alpha, t);

    ContainerHeader h;
    h.flags = static_cast<std::uint8_t>(d.payoff);
    h.alpha = d.alpha;
    h.t = d.t.value_or(std::numeric_limits<double>::quiet_NaN());
    h.symbol_count = data.size();
    for (int i = 0; i < d.model.size(); ++i) {
        h.table.emplace_back(
            d.slot_symbols[i],
            static_cast<std::uint8_t>(d.int_lengths.values[i]));
    }
    std::sort(h.table.begin(), h.table.end());

    std::vector<std::uint8_t> out;
    append_header(out, h);
    const BitBuffer payload = encode(d.codebook, data);
    out.insert(out.end(), payload.bytes.begin(), payload.bytes.end());
    return out;
}

std::vector<std::uint8_t> decompress_bytes(
    std::span<const std::uint8_t> container) {
    std::size_t pos = 0;
    const ContainerHeader h = parse_header(container, pos);

    std::vector<int> lengths;
    std::vector<std::uint8_t> symbols;
    lengths.reserve(h.table.size());
    symbols.reserve(h.table.size());
    for (const auto& [symbol, length] : h.table) {
        symbols.push_back(symbol);
        lengths.push_back(length);
    }
    const Codebook cb = canonical_assign(lengths, symbols);
    return decode(cb, container.subspan(pos), h.symbol_count);
}

}  // namespace gencode
