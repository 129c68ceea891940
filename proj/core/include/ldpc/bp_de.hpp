#pragma once

#include <memory>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/degree_dist.hpp"
#include "ldpc/threshold.hpp"

namespace ldpc {

// Uniform symmetric LLR grid: bin k holds value (k - half_bins) * step.
struct llr_grid {
    double step = 0.01;
    int half_bins = 3000;

    static llr_grid symmetric(double max_llr, double step);

    int bins() const { return 2 * half_bins + 1; }
    int center() const { return half_bins; }
    double max_llr() const { return step * half_bins; }
    double value(int k) const { return step * (k - half_bins); }

    bool operator==(const llr_grid&) const = default;
};

// PMF on an LLR grid plus explicit point masses at +/-infinity. Mass beyond
// the grid ends saturates into the end bins.
struct quantized_density {
    llr_grid grid;
    std::vector<double> pmf;
    double mass_pos_inf = 0.0;
    double mass_neg_inf = 0.0;

    explicit quantized_density(const llr_grid& g)
        : grid(g), pmf(static_cast<std::size_t>(g.bins()), 0.0) {}

    double total_mass() const;
    // mass on (-inf, 0) plus half the mass at exactly 0
    double error_mass() const;
    double mean() const;  // over the finite part

    void add_scaled(const quantized_density& other, double s);
    // deposit mass at an LLR value, split across the two nearest bins
    void deposit(double llr_value, double mass);
    // rescale to unit total; returns the total found. The transforms conserve
    // mass to machine accuracy per step, but the product structure amplifies
    // any residual exponentially across iterations, so evolution renormalizes
    // after every step.
    double normalize();
};

// Density-evolution engine for belief propagation. The check-node transform
// is repeated pairwise combination under m = 2 atanh(tanh(a/2) tanh(b/2)),
// requantized to the grid; variable nodes convolve densities via FFT.
// Methods are internally serialized, so a shared engine is safe to use from
// tests running on multiple threads.
class bp_engine {
  public:
    explicit bp_engine(const llr_grid& grid);
    ~bp_engine();
    bp_engine(const bp_engine&) = delete;
    bp_engine& operator=(const bp_engine&) = delete;

    const llr_grid& grid() const;

    quantized_density initial_density(const channel_model& ch) const;

    // One pairwise check combination (exposed for its own tests).
    quantized_density check_combine(const quantized_density& a, const quantized_density& b) const;
    // One pairwise variable-side convolution.
    quantized_density var_convolve(const quantized_density& a, const quantized_density& b) const;

    // Full iteration: rho-averaged check transform of the incoming density,
    // then lambda-averaged convolution with the channel density.
    quantized_density de_step(const quantized_density& incoming, const quantized_density& channel,
                              const edge_perspective& ep) const;

    evolution_report evolve(const channel_model& ch, const edge_perspective& ep,
                            int max_iter = kDeMaxIterations,
                            double eps = kDeConvergenceEps) const;

    threshold_result bp_threshold(channel_kind family, const edge_perspective& ep,
                                  double tolerance = 1e-3,
                                  int max_iter = kDeMaxIterations) const;

  private:
    struct impl;
    std::unique_ptr<impl> impl_;
};

// Engine reuse keyed by grid; building the combine table costs around a
// second, so callers share engines.
std::shared_ptr<bp_engine> shared_engine(const llr_grid& grid);

inline llr_grid default_llr_grid() { return llr_grid::symmetric(30.0, 0.01); }

quantized_density bp_initial_density(const channel_model& ch, const llr_grid& grid);
quantized_density bp_de_step(const quantized_density& incoming, const quantized_density& channel,
                             const edge_perspective& ep);
threshold_result bp_threshold(channel_kind family, const edge_perspective& ep,
                              const llr_grid& grid, int max_iter = kDeMaxIterations,
                              double tolerance = 1e-3);

}  // namespace ldpc
