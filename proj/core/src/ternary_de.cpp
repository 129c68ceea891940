#include "ldpc/ternary_de.hpp"

#include <algorithm>
#include <cmath>

#include "ldpc/channel.hpp"
#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

constexpr double kTieEps = 1e-12;

struct check_output {
    double pos, era, neg;
};

check_output check_side(const ternary_state& in, const edge_perspective& ep) {
    // With d-1 independent inputs: erasure unless none erased; otherwise the
    // sign is the product, so P(+) - P(-) = (1 - era - 2 err)^(d-1).
    const double alive = 1.0 - in.era;
    const double diff = 1.0 - in.era - 2.0 * in.err;
    const double rho_alive = ep.rho(alive);
    const double rho_diff = ep.rho(diff);
    check_output out;
    out.era = 1.0 - rho_alive;
    out.pos = 0.5 * (rho_alive + rho_diff);
    out.neg = 0.5 * (rho_alive - rho_diff);
    return out;
}

}  // namespace

ternary_received ternary_received::from_bsc(double p) {
    if (p < 0.0 || p > 0.5) throw invalid_parameter("BSC p must lie in [0, 1/2]");
    return {1.0 - p, 0.0, p};
}

ternary_received ternary_received::from_biawgn(double sigma, double tau) {
    if (!(sigma > 0.0) || tau < 0.0) throw invalid_parameter("bad BIAWGN quantizer");
    // y ~ N(+1, sigma^2); r = +1 for y >= tau, erasure inside (-tau, tau)
    const double p_pos = q_function((tau - 1.0) / sigma);
    const double p_neg = 1.0 - q_function((-tau - 1.0) / sigma);
    return {p_pos, 1.0 - p_pos - p_neg, p_neg};
}

ternary_state ternary_de_step(const ternary_state& in, const ternary_received& received,
                              double w, const edge_perspective& ep) {
    if (w < 0.0) throw invalid_parameter("weight must be non-negative");
    const check_output q = check_side(in, ep);

    ternary_state out;
    for (std::size_t idx = 0; idx < ep.lambda.coeffs().size(); ++idx) {
        const double frac = ep.lambda.coeff(idx);
        if (frac == 0.0) continue;
        const int others = static_cast<int>(idx);  // degree - 1 incoming messages

        // multinomial over (npos, nneg); nera fills the rest
        double err_acc = 0.0, era_acc = 0.0;
        for (int npos = 0; npos <= others; ++npos) {
            for (int nneg = 0; nneg + npos <= others; ++nneg) {
                const int nera = others - npos - nneg;
                double prob = 1.0;
                // multinomial coefficient * q.pos^npos * q.neg^nneg * q.era^nera
                for (int t = 0; t < npos; ++t) {
                    prob *= q.pos * static_cast<double>(others - t) / static_cast<double>(t + 1);
                }
                for (int t = 0; t < nneg; ++t) {
                    prob *= q.neg * static_cast<double>(others - npos - t) /
                            static_cast<double>(t + 1);
                }
                for (int t = 0; t < nera; ++t) prob *= q.era;
                if (prob == 0.0) continue;
                const double balance = static_cast<double>(npos - nneg);
                // received = +1, 0, -1 with the channel probabilities
                const double s_pos = w + balance;
                const double s_era = balance;
                const double s_neg = -w + balance;
                auto add = [&](double weight, double s) {
                    if (weight == 0.0) return;
                    if (s < -kTieEps) {
                        err_acc += weight * prob;
                    } else if (s <= kTieEps) {
                        era_acc += weight * prob;
                    }
                };
                add(received.pos, s_pos);
                add(received.era, s_era);
                add(received.neg, s_neg);
            }
        }
        out.err += frac * err_acc;
        out.era += frac * era_acc;
    }
    return out;
}

ternary_evolution evolve_weighted_bsc(double p, const edge_perspective& ep,
                                      const weight_schedule& weights, int max_iter, double eps) {
    const ternary_received rx = ternary_received::from_bsc(p);
    ternary_state state{rx.neg, rx.era};
    convergence_tracker tracker(eps);
    if (tracker.observe(state.error_measure(), 0)) return tracker.report();
    for (int i = 1; i <= max_iter; ++i) {
        state = ternary_de_step(state, rx, weights(i), ep);
        if (tracker.observe(state.error_measure(), i)) break;
    }
    return tracker.report();
}

threshold_result weighted_bsc_threshold(const edge_perspective& ep, const weight_schedule& weights,
                                        double tolerance, int max_iter) {
    ep.validate();
    auto converges = [&](double p) {
        return evolve_weighted_bsc(p, ep, weights, max_iter).converged;
    };
    return bisect_threshold(converges, 1e-4, 0.5 - 1e-4, tolerance);
}

namespace {

const std::vector<double>& tau_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g;
        for (double t = 0.0; t <= 1.5 + 1e-9; t += 0.05) g.push_back(t);
        return g;
    }();
    return grid;
}

const std::vector<double>& weight_grid() {
    static const std::vector<double> grid = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0};
    return grid;
}

// One-step greedy limit-cycles just above sigma = 0.65; scoring a candidate
// by the state it reaches when held for a few iterations keeps every
// constant schedule in the search space and adapts on top of them.
constexpr int kRolloutDepth = 8;

struct rollout_choice {
    double tau = 0.0;
    double w = 1.0;
    double score = 2.0;
};

rollout_choice best_pair(const ternary_state& state, double sigma, const edge_perspective& ep) {
    rollout_choice best;
    for (double tau : tau_grid()) {
        const ternary_received rx = ternary_received::from_biawgn(sigma, tau);
        for (double w : weight_grid()) {
            ternary_state r = state;
            for (int j = 0; j < kRolloutDepth; ++j) r = ternary_de_step(r, rx, w, ep);
            const double m = r.error_measure();
            if (m < best.score) best = {tau, w, m};
        }
    }
    return best;
}

}  // namespace

ternary_evolution evolve_ternary_biawgn(double sigma, const edge_perspective& ep, int max_iter,
                                        double eps, ternary_policy* policy) {
    if (policy) {
        policy->tau.clear();
        policy->w.clear();
    }
    // Pick tau_0 by the rollout its initial state admits; judging tau_0 by
    // the raw initial measure alone would always pick hard decisions and
    // forfeit early abstention.
    double best0 = 2.0;
    double best_tau0 = 0.0;
    for (double tau0 : tau_grid()) {
        const ternary_received rx0 = ternary_received::from_biawgn(sigma, tau0);
        const ternary_state s0{rx0.neg, rx0.era};
        const double m = best_pair(s0, sigma, ep).score;
        if (m < best0) {
            best0 = m;
            best_tau0 = tau0;
        }
    }
    const ternary_received rx0 = ternary_received::from_biawgn(sigma, best_tau0);
    ternary_state state{rx0.neg, rx0.era};
    if (policy) policy->tau.push_back(best_tau0);

    convergence_tracker tracker(eps);
    if (tracker.observe(state.error_measure(), 0)) return tracker.report();

    for (int i = 1; i <= max_iter; ++i) {
        const rollout_choice pick = best_pair(state, sigma, ep);
        state = ternary_de_step(state, ternary_received::from_biawgn(sigma, pick.tau), pick.w, ep);
        if (policy) {
            policy->tau.push_back(pick.tau);
            policy->w.push_back(pick.w);
        }
        if (tracker.observe(state.error_measure(), i)) break;
    }
    return tracker.report();
}

threshold_result ternary_biawgn_threshold(const edge_perspective& ep, double tolerance,
                                          int max_iter) {
    ep.validate();
    auto converges = [&](double sigma) {
        return evolve_ternary_biawgn(sigma, ep, max_iter).converged;
    };
    return bisect_threshold(converges, 0.4, 1.2, tolerance);
}

}  // namespace ldpc
