#include "ldpc/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "ldpc/errors.hpp"
#include "ldpc/gf2.hpp"

namespace ldpc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLlrClamp = 35.0;
constexpr double kAtanhClamp = 1.0 - 1e-15;

void require_symbols(const received_word& rw, bool allow_erasure, const char* who) {
    for (double s : rw.symbols) {
        if (s == 1.0 || s == -1.0 || (allow_erasure && s == 0.0)) continue;
        throw invalid_parameter(std::string(who) + ": unexpected symbol value");
    }
}

int count_zeros(std::span<const double> word) {
    int acc = 0;
    for (double s : word) acc += s == 0.0 ? 1 : 0;
    return acc;
}

}  // namespace

bool is_codeword(const factor_graph& g, std::span<const double> word) {
    for (double s : word) {
        if (s != 1.0 && s != -1.0) return false;
    }
    for (int c = 0; c < g.check_count(); ++c) {
        double prod = 1.0;
        for (std::int32_t e : g.chk_edges(c)) prod *= word[static_cast<std::size_t>(g.edge_var(e))];
        if (prod < 0.0) return false;
    }
    return true;
}

cutoff_schedule cutoff_schedule::algorithm_a() {
    cutoff_schedule s;
    s.mode_ = mode::unanimous;
    return s;
}

cutoff_schedule cutoff_schedule::majority() {
    cutoff_schedule s;
    s.mode_ = mode::majority;
    return s;
}

cutoff_schedule cutoff_schedule::fixed(int b) {
    cutoff_schedule s;
    s.mode_ = mode::fixed_value;
    s.fixed_b_ = b;
    return s;
}

cutoff_schedule cutoff_schedule::per_iteration(std::vector<int> b) {
    if (b.empty()) throw invalid_parameter("cutoff table must be non-empty");
    cutoff_schedule s;
    s.mode_ = mode::table;
    s.table_ = std::move(b);
    return s;
}

int cutoff_schedule::operator()(int iteration, int degree) const {
    if (degree < 2) return 1;  // degree-1 variables have no extrinsic inputs
    const int lo = (degree - 1) / 2 + 1;  // smallest integer > (degree-1)/2
    const int hi = degree - 1;
    int b = hi;
    switch (mode_) {
        case mode::unanimous:
            b = hi;
            break;
        case mode::majority:
            b = std::min(lo, hi);
            break;
        case mode::fixed_value:
            b = fixed_b_;
            break;
        case mode::table: {
            const std::size_t idx = std::min(static_cast<std::size_t>(std::max(iteration - 1, 0)),
                                             table_.size() - 1);
            b = table_[idx];
            break;
        }
    }
    if (2 * b <= degree - 1 || b > hi) {
        throw invalid_parameter("cutoff b=" + std::to_string(b) + " out of range for degree " +
                                std::to_string(degree));
    }
    return b;
}

weight_schedule::weight_schedule(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw invalid_parameter("weight schedule must be non-empty");
    for (double w : weights_) {
        if (w < 0.0) throw invalid_parameter("weights must be non-negative");
    }
}

double weight_schedule::operator()(int iteration) const {
    const std::size_t idx =
        std::min(static_cast<std::size_t>(std::max(iteration - 1, 0)), weights_.size() - 1);
    return weights_[idx];
}

decode_result decode_bec_peeling(const factor_graph& g, const received_word& rw) {
    if (rw.channel.kind() != channel_kind::bec) {
        throw invalid_parameter("peeling expects BEC output");
    }
    require_symbols(rw, true, "peeling");
    if (static_cast<int>(rw.symbols.size()) != g.variable_count()) {
        throw invalid_parameter("received word length mismatch");
    }

    std::vector<double> value = rw.symbols;
    std::vector<int> unknown(static_cast<std::size_t>(g.check_count()), 0);
    std::vector<double> parity(static_cast<std::size_t>(g.check_count()), 1.0);
    for (int c = 0; c < g.check_count(); ++c) {
        unknown[static_cast<std::size_t>(c)] = g.chk_degree(c);
    }

    std::queue<std::int32_t> ready;  // checks with exactly one unknown edge
    auto absorb_known_variable = [&](std::int32_t v) {
        for (std::int32_t e : g.var_edges(static_cast<int>(v))) {
            const std::int32_t c = g.edge_chk(e);
            parity[static_cast<std::size_t>(c)] *= value[static_cast<std::size_t>(v)];
            const int left = --unknown[static_cast<std::size_t>(c)];
            if (left == 1) {
                ready.push(c);
            } else if (left == 0 && parity[static_cast<std::size_t>(c)] < 0.0) {
                throw inconsistency_error("received word violates a parity check");
            }
        }
    };
    for (int v = 0; v < g.variable_count(); ++v) {
        if (value[static_cast<std::size_t>(v)] != 0.0) absorb_known_variable(v);
    }

    int peels = 0;
    while (!ready.empty()) {
        const std::int32_t c = ready.front();
        ready.pop();
        if (unknown[static_cast<std::size_t>(c)] != 1) continue;  // resolved meanwhile
        std::int32_t target = -1;
        for (std::int32_t e : g.chk_edges(c)) {
            if (value[static_cast<std::size_t>(g.edge_var(e))] == 0.0) {
                target = g.edge_var(e);
                break;
            }
        }
        value[static_cast<std::size_t>(target)] = parity[static_cast<std::size_t>(c)];
        ++peels;
        absorb_known_variable(target);
    }

    decode_result res;
    res.word = std::move(value);
    res.iterations = peels;
    res.residual = count_zeros(res.word);
    res.status = res.residual == 0 ? decode_status::success : decode_status::stall;
    return res;
}

decode_result decode_bec_mp(const factor_graph& g, const received_word& rw, int max_iter) {
    if (rw.channel.kind() != channel_kind::bec) {
        throw invalid_parameter("bec-mp expects BEC output");
    }
    require_symbols(rw, true, "bec-mp");
    const std::size_t ne = g.edge_count();
    std::vector<double> v2c(ne), c2v(ne, 0.0);
    for (std::size_t e = 0; e < ne; ++e) {
        v2c[e] = rw.symbols[static_cast<std::size_t>(g.edge_var(static_cast<std::int32_t>(e)))];
    }

    auto settle = [&](std::int32_t v) -> double {
        // received value plus all incoming check messages
        double val = rw.symbols[static_cast<std::size_t>(v)];
        for (std::int32_t e : g.var_edges(v)) {
            const double m = c2v[static_cast<std::size_t>(e)];
            if (m == 0.0) continue;
            if (val == 0.0) {
                val = m;
            } else if (val != m) {
                throw inconsistency_error("conflicting +/-1 votes at a variable node");
            }
        }
        return val;
    };

    decode_result res;
    for (int iter = 1; iter <= max_iter; ++iter) {
        // check round
        for (int c = 0; c < g.check_count(); ++c) {
            int zeros = 0;
            double prod = 1.0;
            for (std::int32_t e : g.chk_edges(c)) {
                const double m = v2c[static_cast<std::size_t>(e)];
                if (m == 0.0) {
                    ++zeros;
                } else {
                    prod *= m;
                }
            }
            for (std::int32_t e : g.chk_edges(c)) {
                const double m = v2c[static_cast<std::size_t>(e)];
                const int other_zeros = zeros - (m == 0.0 ? 1 : 0);
                c2v[static_cast<std::size_t>(e)] =
                    other_zeros > 0 ? 0.0 : (m == 0.0 ? prod : prod * m);
            }
        }
        // variable round (extrinsic rule)
        bool changed = false;
        for (int v = 0; v < g.variable_count(); ++v) {
            const double r = rw.symbols[static_cast<std::size_t>(v)];
            double known = r;
            for (std::int32_t e : g.var_edges(v)) {
                const double m = c2v[static_cast<std::size_t>(e)];
                if (m == 0.0) continue;
                if (known == 0.0) {
                    known = m;
                } else if (known != m) {
                    throw inconsistency_error("conflicting +/-1 votes at a variable node");
                }
            }
            for (std::int32_t e : g.var_edges(v)) {
                double out = known;
                if (known != 0.0 && r == 0.0) {
                    // value may rest solely on this edge's own message
                    bool extrinsic = false;
                    for (std::int32_t e2 : g.var_edges(v)) {
                        if (e2 != e && c2v[static_cast<std::size_t>(e2)] != 0.0) {
                            extrinsic = true;
                            break;
                        }
                    }
                    if (!extrinsic) out = 0.0;
                }
                if (v2c[static_cast<std::size_t>(e)] != out) {
                    v2c[static_cast<std::size_t>(e)] = out;
                    changed = true;
                }
            }
        }
        // settle estimates; exit on success or fixed point
        std::vector<double> estimate(static_cast<std::size_t>(g.variable_count()));
        for (int v = 0; v < g.variable_count(); ++v) estimate[static_cast<std::size_t>(v)] = settle(v);
        const int erased = count_zeros(estimate);
        if (erased == 0) {
            res.word = std::move(estimate);
            res.status = decode_status::success;
            res.iterations = iter;
            res.residual = 0;
            return res;
        }
        if (!changed) {
            res.word = std::move(estimate);
            res.status = decode_status::stall;
            res.iterations = iter;
            res.residual = erased;
            return res;
        }
    }
    std::vector<double> estimate(static_cast<std::size_t>(g.variable_count()));
    for (int v = 0; v < g.variable_count(); ++v) estimate[static_cast<std::size_t>(v)] = settle(v);
    res.word = std::move(estimate);
    res.iterations = max_iter;
    res.residual = count_zeros(res.word);
    res.status = res.residual == 0 ? decode_status::success : decode_status::iteration_cap;
    return res;
}

namespace {

// Shared body for Gallager A/B: A is B with the unanimous cutoff.
decode_result decode_bit_flipping(const factor_graph& g, const received_word& rw,
                                  const cutoff_schedule& cutoffs, int max_iter) {
    require_symbols(rw, false, "bit-flipping");
    const std::size_t ne = g.edge_count();
    std::vector<double> v2c(ne), c2v(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        v2c[e] = rw.symbols[static_cast<std::size_t>(g.edge_var(static_cast<std::int32_t>(e)))];
    }

    auto estimate_word = [&](std::vector<double>& out) {
        // terminal rule: majority of received value and all incoming
        // messages, ties resolved toward the received value
        for (int v = 0; v < g.variable_count(); ++v) {
            const double r = rw.symbols[static_cast<std::size_t>(v)];
            double sum = r;
            for (std::int32_t e : g.var_edges(v)) sum += c2v[static_cast<std::size_t>(e)];
            out[static_cast<std::size_t>(v)] = sum > 0.0 ? 1.0 : (sum < 0.0 ? -1.0 : r);
        }
    };

    decode_result res;
    std::vector<double> estimate(static_cast<std::size_t>(g.variable_count()));
    if (is_codeword(g, rw.symbols)) {
        res.word = rw.symbols;
        res.status = decode_status::success;
        return res;
    }
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (int c = 0; c < g.check_count(); ++c) {
            double prod = 1.0;
            for (std::int32_t e : g.chk_edges(c)) prod *= v2c[static_cast<std::size_t>(e)];
            for (std::int32_t e : g.chk_edges(c)) {
                c2v[static_cast<std::size_t>(e)] = prod * v2c[static_cast<std::size_t>(e)];
            }
        }
        for (int v = 0; v < g.variable_count(); ++v) {
            const double r = rw.symbols[static_cast<std::size_t>(v)];
            const auto es = g.var_edges(v);
            const int degree = static_cast<int>(es.size());
            int disagree_total = 0;
            for (std::int32_t e : es) {
                disagree_total += c2v[static_cast<std::size_t>(e)] == -r ? 1 : 0;
            }
            const int b = cutoffs(iter, degree);
            for (std::int32_t e : es) {
                const int disagree =
                    disagree_total - (c2v[static_cast<std::size_t>(e)] == -r ? 1 : 0);
                v2c[static_cast<std::size_t>(e)] = disagree >= b ? -r : r;
            }
        }
        estimate_word(estimate);
        if (is_codeword(g, estimate)) {
            res.word = estimate;
            res.status = decode_status::success;
            res.iterations = iter;
            return res;
        }
    }
    estimate_word(estimate);
    res.word = estimate;
    res.iterations = max_iter;
    res.status = decode_status::iteration_cap;
    for (int c = 0; c < g.check_count(); ++c) {
        double prod = 1.0;
        for (std::int32_t e : g.chk_edges(c)) {
            prod *= estimate[static_cast<std::size_t>(g.edge_var(e))];
        }
        res.residual += prod < 0.0 ? 1 : 0;
    }
    return res;
}

}  // namespace

decode_result decode_gallager_a(const factor_graph& g, const received_word& rw, int max_iter) {
    return decode_bit_flipping(g, rw, cutoff_schedule::algorithm_a(), max_iter);
}

decode_result decode_gallager_b(const factor_graph& g, const received_word& rw,
                                const cutoff_schedule& cutoffs, int max_iter) {
    return decode_bit_flipping(g, rw, cutoffs, max_iter);
}

decode_result decode_weighted_erasure(const factor_graph& g, const received_word& rw,
                                      const weight_schedule& weights, int max_iter) {
    require_symbols(rw, true, "weighted");
    const std::size_t ne = g.edge_count();
    std::vector<double> v2c(ne), c2v(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        v2c[e] = rw.symbols[static_cast<std::size_t>(g.edge_var(static_cast<std::int32_t>(e)))];
    }
    auto sgn = [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); };
    auto estimate_word = [&](std::vector<double>& out, double w) {
        // ties resolve to the received value, which keeps the map symmetric
        for (int v = 0; v < g.variable_count(); ++v) {
            const double r = rw.symbols[static_cast<std::size_t>(v)];
            double sum = w * r;
            for (std::int32_t e : g.var_edges(v)) sum += c2v[static_cast<std::size_t>(e)];
            out[static_cast<std::size_t>(v)] = sum != 0.0 ? sgn(sum) : r;
        }
    };

    decode_result res;
    std::vector<double> estimate(static_cast<std::size_t>(g.variable_count()));
    if (is_codeword(g, rw.symbols)) {
        res.word = rw.symbols;
        res.status = decode_status::success;
        return res;
    }
    for (int iter = 1; iter <= max_iter; ++iter) {
        const double w = weights(iter);
        for (int c = 0; c < g.check_count(); ++c) {
            int zeros = 0;
            double prod = 1.0;
            for (std::int32_t e : g.chk_edges(c)) {
                const double m = v2c[static_cast<std::size_t>(e)];
                if (m == 0.0) {
                    ++zeros;
                } else {
                    prod *= m;
                }
            }
            for (std::int32_t e : g.chk_edges(c)) {
                const double m = v2c[static_cast<std::size_t>(e)];
                const int other_zeros = zeros - (m == 0.0 ? 1 : 0);
                c2v[static_cast<std::size_t>(e)] =
                    other_zeros > 0 ? 0.0 : (m == 0.0 ? prod : prod * m);
            }
        }
        for (int v = 0; v < g.variable_count(); ++v) {
            const double r = rw.symbols[static_cast<std::size_t>(v)];
            double sum_all = w * r;
            for (std::int32_t e : g.var_edges(v)) sum_all += c2v[static_cast<std::size_t>(e)];
            for (std::int32_t e : g.var_edges(v)) {
                v2c[static_cast<std::size_t>(e)] = sgn(sum_all - c2v[static_cast<std::size_t>(e)]);
            }
        }
        estimate_word(estimate, w);
        if (is_codeword(g, estimate)) {
            res.word = estimate;
            res.status = decode_status::success;
            res.iterations = iter;
            return res;
        }
    }
    estimate_word(estimate, weights(max_iter));
    res.word = estimate;
    res.iterations = max_iter;
    res.status = decode_status::iteration_cap;
    res.residual = count_zeros(res.word);
    for (int c = 0; c < g.check_count(); ++c) {
        double prod = 1.0;
        for (std::int32_t e : g.chk_edges(c)) {
            prod *= res.word[static_cast<std::size_t>(g.edge_var(e))];
        }
        res.residual += prod < 0.0 ? 1 : 0;
    }
    return res;
}

double bp_variable_map(double m0, std::span<const double> msgs) {
    int pos_inf = 0, neg_inf = 0;
    double finite = 0.0;
    auto take = [&](double m) {
        if (m == kInf) {
            ++pos_inf;
        } else if (m == -kInf) {
            ++neg_inf;
        } else {
            finite += m;
        }
    };
    take(m0);
    for (double m : msgs) take(m);
    if (pos_inf > 0 && neg_inf > 0) return 0.0;  // conflicting certainties cancel
    if (pos_inf > 0) return kInf;
    if (neg_inf > 0) return -kInf;
    return finite;
}

double bp_check_map(std::span<const double> msgs) {
    double prod = 1.0;
    for (double m : msgs) {
        prod *= std::tanh(0.5 * std::clamp(m, -kLlrClamp, kLlrClamp));
    }
    return 2.0 * std::atanh(std::clamp(prod, -kAtanhClamp, kAtanhClamp));
}

decode_result decode_bp(const factor_graph& g, const llr_word& llr, int max_iter) {
    if (static_cast<int>(llr.size()) != g.variable_count()) {
        throw invalid_parameter("LLR word length mismatch");
    }
    const std::size_t ne = g.edge_count();
    std::vector<double> v2c(ne), c2v(ne, 0.0);
    for (std::size_t e = 0; e < ne; ++e) {
        v2c[e] = llr[static_cast<std::size_t>(g.edge_var(static_cast<std::int32_t>(e)))];
    }
    std::vector<double> fwd, bwd;

    auto harden = [&](std::vector<double>& out) {
        for (int v = 0; v < g.variable_count(); ++v) {
            double belief = bp_variable_map(llr[static_cast<std::size_t>(v)], {});
            int pos_inf = belief == kInf ? 1 : 0, neg_inf = belief == -kInf ? 1 : 0;
            double finite = (pos_inf || neg_inf) ? 0.0 : belief;
            for (std::int32_t e : g.var_edges(v)) {
                const double m = c2v[static_cast<std::size_t>(e)];
                if (m == kInf) {
                    ++pos_inf;
                } else if (m == -kInf) {
                    ++neg_inf;
                } else {
                    finite += m;
                }
            }
            double b = 0.0;
            if (pos_inf > 0 && neg_inf > 0) {
                b = 0.0;
            } else if (pos_inf > 0) {
                b = kInf;
            } else if (neg_inf > 0) {
                b = -kInf;
            } else {
                b = finite;
            }
            out[static_cast<std::size_t>(v)] = b > 0.0 ? 1.0 : (b < 0.0 ? -1.0 : 0.0);
        }
    };

    decode_result res;
    std::vector<double> estimate(static_cast<std::size_t>(g.variable_count()));
    for (int iter = 1; iter <= max_iter; ++iter) {
        // check round via forward/backward prefix products of tanh(m/2)
        for (int c = 0; c < g.check_count(); ++c) {
            const auto es = g.chk_edges(c);
            const std::size_t d = es.size();
            fwd.assign(d + 1, 1.0);
            bwd.assign(d + 1, 1.0);
            for (std::size_t i = 0; i < d; ++i) {
                const double m = v2c[static_cast<std::size_t>(es[i])];
                fwd[i + 1] = fwd[i] * std::tanh(0.5 * std::clamp(m, -kLlrClamp, kLlrClamp));
            }
            for (std::size_t i = d; i-- > 0;) {
                const double m = v2c[static_cast<std::size_t>(es[i])];
                bwd[i] = bwd[i + 1] * std::tanh(0.5 * std::clamp(m, -kLlrClamp, kLlrClamp));
            }
            for (std::size_t i = 0; i < d; ++i) {
                const double prod = fwd[i] * bwd[i + 1];
                c2v[static_cast<std::size_t>(es[i])] =
                    2.0 * std::atanh(std::clamp(prod, -kAtanhClamp, kAtanhClamp));
            }
        }
        // variable round
        for (int v = 0; v < g.variable_count(); ++v) {
            const double m0 = llr[static_cast<std::size_t>(v)];
            int pos_inf = 0, neg_inf = 0;
            double finite = 0.0;
            auto take = [&](double m) {
                if (m == kInf) {
                    ++pos_inf;
                } else if (m == -kInf) {
                    ++neg_inf;
                } else {
                    finite += m;
                }
            };
            take(m0);
            for (std::int32_t e : g.var_edges(v)) take(c2v[static_cast<std::size_t>(e)]);
            for (std::int32_t e : g.var_edges(v)) {
                const double self = c2v[static_cast<std::size_t>(e)];
                int p = pos_inf - (self == kInf ? 1 : 0);
                int n = neg_inf - (self == -kInf ? 1 : 0);
                double f = finite - (std::isinf(self) ? 0.0 : self);
                double out = 0.0;
                if (p > 0 && n > 0) {
                    out = 0.0;
                } else if (p > 0) {
                    out = kInf;
                } else if (n > 0) {
                    out = -kInf;
                } else {
                    out = f;
                }
                v2c[static_cast<std::size_t>(e)] = out;
            }
        }
        harden(estimate);
        if (is_codeword(g, estimate)) {
            res.word = estimate;
            res.status = decode_status::success;
            res.iterations = iter;
            return res;
        }
    }
    harden(estimate);
    res.word = estimate;
    res.iterations = max_iter;
    res.status = decode_status::iteration_cap;
    res.residual = count_zeros(res.word);
    for (int c = 0; c < g.check_count(); ++c) {
        double prod = 1.0;
        for (std::int32_t e : g.chk_edges(c)) {
            prod *= res.word[static_cast<std::size_t>(g.edge_var(e))];
        }
        res.residual += prod < 0.0 ? 1 : 0;
    }
    return res;
}

decode_result ml_erasure_decode(const parity_check_matrix& h, const received_word& rw) {
    if (rw.channel.kind() != channel_kind::bec) {
        throw invalid_parameter("ml_erasure_decode expects BEC output");
    }
    require_symbols(rw, true, "ml");
    if (static_cast<int>(rw.symbols.size()) != h.cols) {
        throw invalid_parameter("received word length mismatch");
    }

    std::vector<std::int32_t> erased;
    std::vector<std::int32_t> col_of(static_cast<std::size_t>(h.cols), -1);
    for (int j = 0; j < h.cols; ++j) {
        if (rw.symbols[static_cast<std::size_t>(j)] == 0.0) {
            col_of[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(erased.size());
            erased.push_back(j);
        }
    }
    const int ne = static_cast<int>(erased.size());

    // Augmented system over the erased columns; bit 1 encodes symbol -1.
    gf2_matrix sys(h.rows, ne + 1);
    for (int r = 0; r < h.rows; ++r) {
        int syndrome = 0;
        for (std::int32_t j : h.row_cols[static_cast<std::size_t>(r)]) {
            const double s = rw.symbols[static_cast<std::size_t>(j)];
            if (s == 0.0) {
                const int c = col_of[static_cast<std::size_t>(j)];
                sys.set(r, c, !sys.get(r, c));  // odd-multiplicity safe (already reduced)
            } else if (s == -1.0) {
                syndrome ^= 1;
            }
        }
        sys.set(r, ne, syndrome != 0);
    }

    // Gauss-Jordan
    std::vector<std::int32_t> pivot_col_of_row(static_cast<std::size_t>(h.rows), -1);
    std::vector<std::int32_t> pivot_row_of_col(static_cast<std::size_t>(ne), -1);
    int rank = 0;
    for (int c = 0; c < ne && rank < h.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < h.rows; ++r) {
            if (sys.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            // swap by xor trick: rows are cheap here
            sys.xor_rows(rank, pivot);
            sys.xor_rows(pivot, rank);
            sys.xor_rows(rank, pivot);
        }
        for (int r = 0; r < h.rows; ++r) {
            if (r != rank && sys.get(r, c)) sys.xor_rows(r, rank);
        }
        pivot_col_of_row[static_cast<std::size_t>(rank)] = c;
        pivot_row_of_col[static_cast<std::size_t>(c)] = rank;
        ++rank;
    }
    for (int r = rank; r < h.rows; ++r) {
        if (sys.get(r, ne)) throw inconsistency_error("received word violates a parity check");
    }

    decode_result res;
    res.word = rw.symbols;
    if (rank == ne) {
        for (int c = 0; c < ne; ++c) {
            const int r = pivot_row_of_col[static_cast<std::size_t>(c)];
            res.word[static_cast<std::size_t>(erased[static_cast<std::size_t>(c)])] =
                sys.get(r, ne) ? -1.0 : 1.0;
        }
        res.status = decode_status::success;
        res.residual = 0;
    } else {
        res.status = decode_status::stall;
        res.residual = ne - rank;
    }
    return res;
}

}  // namespace ldpc
