#pragma once

#include <vector>

#include "ldpc/decoders.hpp"
#include "ldpc/degree_dist.hpp"
#include "ldpc/threshold.hpp"

namespace ldpc {

// Message distribution of the erasure-augmented flipping decoder under
// all-ones transmission: probabilities of -1 (error) and 0 (erasure).
struct ternary_state {
    double err = 0.0;
    double era = 0.0;
    double error_measure() const { return err + 0.5 * era; }
};

// Distribution of the (re)quantized received value.
struct ternary_received {
    double pos = 0.0;
    double era = 0.0;
    double neg = 0.0;

    static ternary_received from_bsc(double p);
    // +1 transmitted over BIAWGN(sigma), quantized at threshold tau.
    static ternary_received from_biawgn(double sigma, double tau);
};

// Exact one-iteration update: check side multiplies signs with erasure
// absorption, variable side takes sgn(w r + sum of incoming). Derived from
// the message maps by case enumeration over the multinomial of incoming
// messages.
ternary_state ternary_de_step(const ternary_state& in, const ternary_received& received,
                              double w, const edge_perspective& ep);

using ternary_evolution = evolution_report;

ternary_evolution evolve_weighted_bsc(double p, const edge_perspective& ep,
                                      const weight_schedule& weights,
                                      int max_iter = kDeMaxIterations,
                                      double eps = kDeConvergenceEps);

threshold_result weighted_bsc_threshold(const edge_perspective& ep,
                                        const weight_schedule& weights,
                                        double tolerance = 1e-4,
                                        int max_iter = kDeMaxIterations);

// Per-iteration quantization thresholds and weights chosen by the optimizer.
struct ternary_policy {
    std::vector<double> tau;  // tau[0] quantizes the initial messages
    std::vector<double> w;    // w[i] drives iteration i+1
};

// Greedy per-iteration grid search: tau_0 is chosen jointly with the first
// (tau, w) pair, later pairs minimize the next error measure.
ternary_evolution evolve_ternary_biawgn(double sigma, const edge_perspective& ep,
                                        int max_iter = kDeMaxIterations,
                                        double eps = kDeConvergenceEps,
                                        ternary_policy* policy = nullptr);

threshold_result ternary_biawgn_threshold(const edge_perspective& ep,
                                          double tolerance = 5e-3,
                                          int max_iter = kDeMaxIterations);

}  // namespace ldpc
