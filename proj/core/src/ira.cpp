#include "ldpc/ira.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

std::vector<std::int32_t> build_csr(int n_nodes, std::size_t n_edges,
                                    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                                    bool by_first, std::vector<std::int32_t>& offsets) {
    offsets.assign(static_cast<std::size_t>(n_nodes) + 1, 0);
    for (const auto& e : edges) {
        ++offsets[static_cast<std::size_t>(by_first ? e.first : e.second) + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    std::vector<std::int32_t> ids(n_edges);
    std::vector<std::int32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::int32_t node = by_first ? edges[e].first : edges[e].second;
        ids[static_cast<std::size_t>(cursor[static_cast<std::size_t>(node)]++)] =
            static_cast<std::int32_t>(e);
    }
    return ids;
}

}  // namespace

ira_graph::ira_graph(int k, int n, std::vector<std::pair<std::int32_t, std::int32_t>> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
    for (const auto& [v, c] : edges_) {
        if (v < 0 || v >= k_ || c < 0 || c >= n_) {
            throw invalid_parameter("edge references an out-of-range node");
        }
    }
    info_edge_ids_ = build_csr(k_, edges_.size(), edges_, true, info_offsets_);
    chk_edge_ids_ = build_csr(n_, edges_.size(), edges_, false, chk_offsets_);
    for (int c = 0; c < n_; ++c) {
        if (chk_offsets_[static_cast<std::size_t>(c) + 1] ==
            chk_offsets_[static_cast<std::size_t>(c)]) {
            throw invalid_distribution("check node without information neighbors");
        }
    }
}

std::span<const std::int32_t> ira_graph::info_edges(int v) const {
    return {info_edge_ids_.data() + info_offsets_[static_cast<std::size_t>(v)],
            info_edge_ids_.data() + info_offsets_[static_cast<std::size_t>(v) + 1]};
}

std::span<const std::int32_t> ira_graph::check_edges(int c) const {
    return {chk_edge_ids_.data() + chk_offsets_[static_cast<std::size_t>(c)],
            chk_edge_ids_.data() + chk_offsets_[static_cast<std::size_t>(c) + 1]};
}

ira_graph ira_graph::sample(int k, const edge_perspective& ep, std::uint64_t seed) {
    // The socket construction is the LDPC one with information nodes playing
    // the variable role.
    const factor_graph fg = sample_ensemble(edge_to_node(k, ep), seed);
    return {fg.variable_count(), fg.check_count(), fg.edges()};
}

check_series check_series::from_edge_perspective(const edge_perspective& ep) {
    ep.validate();
    const double total = ep.rho.integral01();
    polynomial integral = ep.rho.antiderivative();
    integral.scale(1.0 / total);
    return {integral};
}

std::vector<double> ira_encode(const ira_graph& g, std::span<const double> message) {
    if (static_cast<int>(message.size()) != g.info_count()) {
        throw invalid_parameter("message length " + std::to_string(message.size()) + " != k = " +
                                std::to_string(g.info_count()));
    }
    for (double m : message) {
        if (m != 1.0 && m != -1.0) throw invalid_parameter("message entries must be +/-1");
    }
    std::vector<double> codeword(static_cast<std::size_t>(g.check_count()));
    double running = 1.0;
    for (int c = 0; c < g.check_count(); ++c) {
        double v = 1.0;
        for (std::int32_t e : g.check_edges(c)) {
            v *= message[static_cast<std::size_t>(g.edge_info(e))];
        }
        running *= v;
        codeword[static_cast<std::size_t>(c)] = running;
    }
    return codeword;
}

double ira_rate(const edge_perspective& ep) {
    ep.validate();
    const double rate = ep.lambda.integral01() / ep.rho.integral01();
    if (rate > 1.0 + 1e-12) {
        throw invalid_distribution("IRA pair has rate " + std::to_string(rate) + " > 1");
    }
    return rate;
}

ira_condition_report ira_success_condition(const edge_perspective& ep, double alpha,
                                           int grid_points) {
    ep.validate();
    if (alpha < 0.0 || alpha >= 1.0) throw invalid_parameter("alpha must lie in [0, 1)");
    if (grid_points < 10) throw invalid_parameter("need at least 10 grid points");
    const check_series series = check_series::from_edge_perspective(ep);

    auto slack = [&](double x) {
        const double ratio = (1.0 - alpha) / (1.0 - alpha * series.r(1.0 - x));
        const double arg = 1.0 - ratio * ratio * ep.rho(1.0 - x);
        return x - ep.lambda(arg);
    };

    ira_condition_report report;
    report.boundary_equality = ep.rho.coeff(0) == 0.0;
    report.min_slack = std::numeric_limits<double>::infinity();
    auto probe = [&](double x) {
        const double s = slack(x);
        if (s < report.min_slack) {
            report.min_slack = s;
            report.argmin_x = x;
        }
    };
    for (int i = 1; i < grid_points; ++i) {
        probe(static_cast<double>(i) / grid_points);
    }
    for (double t = 1e-9; t < 1.0 / grid_points; t *= 2.0) {
        probe(t);
        probe(1.0 - t);
    }
    report.satisfied = report.min_slack > 0.0;
    return report;
}

decode_result ira_decode_bec(const ira_graph& g, const received_word& rw, int max_iter) {
    if (rw.channel.kind() != channel_kind::bec) {
        throw invalid_parameter("ira_decode_bec expects BEC output");
    }
    if (static_cast<int>(rw.symbols.size()) != g.check_count()) {
        throw invalid_parameter("received word must hold all accumulator outputs");
    }
    const int k = g.info_count(), n = g.check_count();

    std::vector<double> info(static_cast<std::size_t>(k), 0.0);
    std::vector<double> code = rw.symbols;
    std::vector<int> unknown(static_cast<std::size_t>(n), 0);
    std::vector<double> parity(static_cast<std::size_t>(n), 1.0);

    auto code_checks = [&](int x, int out[2]) {
        // code node x participates in checks x and x+1
        out[0] = x;
        out[1] = x + 1 < n ? x + 1 : -1;
    };

    // initialize unknown counts: info edges all unknown, code neighbors by
    // erasure pattern
    for (int c = 0; c < n; ++c) {
        unknown[static_cast<std::size_t>(c)] = static_cast<int>(g.check_edges(c).size());
        if (c > 0) {
            const double w_prev = code[static_cast<std::size_t>(c - 1)];
            if (w_prev == 0.0) {
                ++unknown[static_cast<std::size_t>(c)];
            } else {
                parity[static_cast<std::size_t>(c)] *= w_prev;
            }
        }
        const double w_here = code[static_cast<std::size_t>(c)];
        if (w_here == 0.0) {
            ++unknown[static_cast<std::size_t>(c)];
        } else {
            parity[static_cast<std::size_t>(c)] *= w_here;
        }
    }

    std::queue<std::int32_t> ready;
    for (int c = 0; c < n; ++c) {
        if (unknown[static_cast<std::size_t>(c)] == 1) ready.push(c);
        if (unknown[static_cast<std::size_t>(c)] == 0 && parity[static_cast<std::size_t>(c)] < 0.0) {
            throw inconsistency_error("received word violates the accumulator constraints");
        }
    }

    auto absorb = [&](std::int32_t c, double value) {
        parity[static_cast<std::size_t>(c)] *= value;
        const int left = --unknown[static_cast<std::size_t>(c)];
        if (left == 1) {
            ready.push(c);
        } else if (left == 0 && parity[static_cast<std::size_t>(c)] < 0.0) {
            throw inconsistency_error("received word violates the accumulator constraints");
        }
    };
    auto resolve_info = [&](std::int32_t v, double value) {
        info[static_cast<std::size_t>(v)] = value;
        for (std::int32_t e : g.info_edges(v)) absorb(g.edge_check(e), value);
    };
    auto resolve_code = [&](int x, double value) {
        code[static_cast<std::size_t>(x)] = value;
        int cs[2];
        code_checks(x, cs);
        for (int c : cs) {
            if (c >= 0) absorb(c, value);
        }
    };

    int peels = 0;
    while (!ready.empty() && peels < max_iter) {
        const std::int32_t c = ready.front();
        ready.pop();
        if (unknown[static_cast<std::size_t>(c)] != 1) continue;
        // find the single unknown: an info edge or a code neighbor
        std::int32_t target_info = -1;
        for (std::int32_t e : g.check_edges(c)) {
            if (info[static_cast<std::size_t>(g.edge_info(e))] == 0.0) {
                target_info = g.edge_info(e);
                break;
            }
        }
        ++peels;
        if (target_info >= 0) {
            resolve_info(target_info, parity[static_cast<std::size_t>(c)]);
        } else if (c > 0 && code[static_cast<std::size_t>(c - 1)] == 0.0) {
            resolve_code(c - 1, parity[static_cast<std::size_t>(c)]);
        } else {
            resolve_code(c, parity[static_cast<std::size_t>(c)]);
        }
    }

    decode_result res;
    res.word = std::move(info);
    res.iterations = peels;
    for (double v : res.word) res.residual += v == 0.0 ? 1 : 0;
    res.status = res.residual == 0 ? decode_status::success : decode_status::stall;
    return res;
}

}  // namespace ldpc
